from pathlib import Path
from typing import Sequence

import numpy as np
import pandas as pd

from deconstructor import Decomposition
from errors import FileFormatError, SignalIOError
from spectrum.polar import PolarSpectrum

SPECTRUM_COLUMNS = ["k", "M", "Theta"]
TRACE_COLUMNS = ["step", "residual"]


def decomposition_table(decomp: Decomposition) -> pd.DataFrame:
    """The square-wave spectrum: one row (k, M_k, Theta_k) per term."""
    return pd.DataFrame([[term.n, term.module, term.phase] for term in decomp.terms], columns=SPECTRUM_COLUMNS)


def spectrum_table(spec: PolarSpectrum) -> pd.DataFrame:
    return pd.DataFrame({"k": np.arange(1, spec.harmonics + 1), "M": spec.modules, "Theta": spec.phases})


def trace_table(trace: Sequence[float]) -> pd.DataFrame:
    return pd.DataFrame({"step": np.arange(len(trace)), "residual": np.asarray(trace, dtype=float)})


def write_table(path, table: pd.DataFrame):
    try:
        table.to_csv(path, index=False)
    except OSError as exc:
        raise SignalIOError(f"Failed to write {path} ({exc})") from exc


def read_spectrum_file(path) -> pd.DataFrame:
    """Read a "k,M,Theta" CSV; k must be strictly increasing."""
    if not Path(path).exists():
        raise SignalIOError(f"No such file: {path}")
    try:
        table = pd.read_csv(path, float_precision="round_trip")
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as exc:
        raise FileFormatError(f"{path}: not a spectrum CSV ({exc})") from exc
    if list(table.columns) != SPECTRUM_COLUMNS:
        raise FileFormatError(f"{path}: header must be {','.join(SPECTRUM_COLUMNS)}, got {','.join(table.columns)}.")
    if not table["k"].is_monotonic_increasing or not table["k"].is_unique:
        raise FileFormatError(f"{path}: k must be strictly increasing.")
    return table
