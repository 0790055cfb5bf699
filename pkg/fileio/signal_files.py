from pathlib import Path

import numpy as np
import pandas as pd

from errors import FileFormatError, SignalIOError
from fileio.wav import read_wav, write_wav


def read_signal(path) -> np.ndarray:
    """Samples from a .wav file or a .csv file with one sample per line."""
    path = Path(path)
    if path.suffix.lower() == ".wav":
        return read_wav(path)
    if path.suffix.lower() != ".csv":
        raise FileFormatError(f"{path}: signal files must be .wav or .csv.")
    if not path.exists():
        raise SignalIOError(f"No such file: {path}")
    try:
        table = pd.read_csv(path, header=None, float_precision="round_trip")
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise FileFormatError(f"{path}: not a one-column CSV signal ({exc})") from exc
    if table.shape[1] != 1:
        raise FileFormatError(f"{path}: expected one sample per line, found {table.shape[1]} columns.")
    try:
        return table.iloc[:, 0].to_numpy(dtype=float)
    except ValueError as exc:
        raise FileFormatError(f"{path}: non-numeric sample ({exc})") from exc


def write_signal(path, samples, sample_rate: int = None, peak: float = None):
    """
    Write samples to .wav (normalized 16-bit PCM) or .csv (raw floats).

    Returns:
    float | None: the WAV scale factor, None for CSV.
    """
    path = Path(path)
    if path.suffix.lower() == ".wav":
        return write_wav(path, samples, sample_rate, peak)
    if path.suffix.lower() != ".csv":
        raise FileFormatError(f"{path}: signal files must be .wav or .csv.")
    try:
        pd.DataFrame({"x": np.asarray(samples, dtype=float)}).to_csv(path, header=False, index=False)
    except OSError as exc:
        raise SignalIOError(f"Failed to write {path} ({exc})") from exc
    return None
