from pathlib import Path
from typing import Optional

from dotenv import dotenv_values

CONFIG_PATH = Path(__file__).resolve().parent / "config" / ".env"
CONFIG = dotenv_values(CONFIG_PATH)


def _number(key: str, default, cast=float):
    raw = CONFIG.get(key)
    if raw is None or str(raw).strip() == "":
        return default
    try:
        return cast(raw)
    except ValueError:
        raise ValueError(f"config/.env: {key}={raw!r} is not a valid {cast.__name__}")


def _optional_float(key: str) -> Optional[float]:
    return _number(key, None, float)


SAMPLE_RATE = _number("SAMPLE_RATE", 44100, int)
WAV_PEAK = _number("WAV_PEAK", 0.9, float)
PERIOD_SAMPLES = _number("PERIOD_SAMPLES", 1024, int)
LUT_SIZE = _number("LUT_SIZE", 4096, int)
SEED = _number("SEED", 0, int)
OVERSAMPLE = _number("OVERSAMPLE", 1, int)
FILTER_CUTOFF = _optional_float("FILTER_CUTOFF")
