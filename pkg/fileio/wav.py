import wave
from pathlib import Path

import numpy as np

import settings
from errors import FileFormatError, SignalIOError

SAMPLE_WIDTH = 2  # 16-bit
NUM_CHANNELS = 1
FULL_SCALE = 32767


def pcm16(samples, peak: float = None):
    """
    Scale floats so max |x| maps to peak*32767, round half to even and clip.

    Returns:
    tuple: int16 array and the scale factor applied (1.0 for an all-zero signal).
    """
    peak = settings.WAV_PEAK if peak is None else peak
    x = np.asarray(samples, dtype=float)
    largest = float(np.max(np.abs(x))) if x.size else 0.0
    scale = peak * FULL_SCALE / largest if largest > 0.0 else 1.0
    ints = np.clip(np.rint(x * scale), -FULL_SCALE - 1, FULL_SCALE).astype("<i2")
    return ints, scale


def write_wav(path, samples, sample_rate: int = None, peak: float = None) -> float:
    """
    Write a float signal as 16-bit PCM mono.

    Returns:
    float: the normalization scale factor.
    """
    sample_rate = settings.SAMPLE_RATE if sample_rate is None else sample_rate
    ints, scale = pcm16(samples, peak)
    try:
        with wave.open(str(path), "wb") as wf:
            wf.setnchannels(NUM_CHANNELS)
            wf.setsampwidth(SAMPLE_WIDTH)
            wf.setframerate(sample_rate)
            wf.writeframes(ints.tobytes())
    except OSError as exc:
        raise SignalIOError(f"Failed to write WAV file: {path} ({exc})") from exc
    return scale


def read_wav(path) -> np.ndarray:
    """Read a 16-bit PCM mono WAV as floats in [-1, 1) (int / 32768)."""
    if not Path(path).exists():
        raise SignalIOError(f"No such file: {path}")
    try:
        with wave.open(str(path), "rb") as wf:
            if wf.getnchannels() != NUM_CHANNELS or wf.getsampwidth() != SAMPLE_WIDTH:
                raise FileFormatError(
                    f"{path}: expected 16-bit mono PCM, got {wf.getnchannels()} channel(s) "
                    f"of {8 * wf.getsampwidth()} bits."
                )
            raw = wf.readframes(wf.getnframes())
    except (wave.Error, EOFError) as exc:
        raise FileFormatError(f"Failed to read WAV file: {path} ({exc})") from exc
    except OSError as exc:
        raise SignalIOError(f"Failed to read WAV file: {path} ({exc})") from exc
    return np.frombuffer(raw, dtype="<i2").astype(float) / (FULL_SCALE + 1)
