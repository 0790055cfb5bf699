from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

import numpy as np

from bases.waveforms import square_signs, triangle_wave
from errors import BadParamsError, UnsupportedModeError
from spectrum.frame import SampledFrame, grid
from spectrum.polar import PolarSpectrum
from spectrum.transform import synthesize_frame


class BasisKind(str, Enum):
    SQUARE = "analytic-square"
    SINE = "analytic-sine"
    TRIANGLE = "analytic-triangle"
    TABULATED = "tabulated"


class EvalMode(str, Enum):
    CLOSED_FORM = "closed-form"
    SERIES = "series"


def basis_margin(spectrum: PolarSpectrum) -> float:
    """s_1**2 - sum_{p>=2} s_p**2; positive means most energy sits at the fundamental."""
    if spectrum.harmonics == 0:
        return 0.0
    squares = np.square(spectrum.modules)
    return float(squares[0] - np.sum(squares[1:]))


@dataclass(frozen=True, eq=False)
class BasisFunction:
    """
    A zero-mean periodic function S(x) together with its polar spectrum (s_p, phi_p).

    Parameters:
    name (str): identifier written into decomposition files ("square", "square@1024", "sine", ...).
    kind (BasisKind): how closed-form samples are produced.
    spectrum (PolarSpectrum): one period of S, c0 = 0, harmonics 1..harmonic_budget.
    harmonic_budget (int): highest p retained in the spectrum.
    table (SampledFrame | None): centered samples of one period, tabulated bases only.
    """
    name: str
    kind: BasisKind
    spectrum: PolarSpectrum
    harmonic_budget: int
    table: Optional[SampledFrame] = None
    margin: float = field(init=False)

    def __post_init__(self):
        if self.spectrum.c0 != 0.0:
            raise BadParamsError(f"Basis '{self.name}' must have zero mean, got c0={self.spectrum.c0}.")
        if self.kind is BasisKind.TABULATED and self.table is None:
            raise BadParamsError("A tabulated basis needs its sample table.")
        object.__setattr__(self, "margin", basis_margin(self.spectrum))

    @property
    def fundamental(self) -> float:
        return float(self.spectrum.modules[0]) if self.spectrum.harmonics else 0.0

    @property
    def admissible(self) -> bool:
        return self.margin > 0.0

    def harmonic_comb(self, harmonics: int) -> np.ndarray:
        """Complex s_p * exp(i*phi_p) for p = 1..harmonics, zero beyond the budget."""
        return self.spectrum.resized(harmonics).complex_bins()


def admissibility(basis: BasisFunction) -> float:
    """Recompute the admissibility margin from the stored spectrum; the caller reads > 0 as admissible."""
    return basis_margin(basis.spectrum)


def eval_basis(basis: BasisFunction, k: int, theta: float, length: int,
               mode: Union[EvalMode, str] = EvalMode.CLOSED_FORM, interpolate: bool = True) -> SampledFrame:
    """
    Samples of S(k*x_i + theta) on an L-point grid.

    Parameters:
    k (int): harmonic index, >= 1.
    mode (EvalMode): CLOSED_FORM evaluates the waveform itself (the +1 boundary rule for squares);
        SERIES sums the stored spectrum truncated at the Nyquist limit of `length`.
    interpolate (bool): allow linear interpolation of a tabulated basis in closed-form mode.

    Raises:
    UnsupportedModeError: closed-form on a tabulated basis with interpolation disabled.
    """
    mode = EvalMode(mode)
    if k < 1:
        raise BadParamsError(f"Harmonic index must be >= 1, got {k}.")
    if mode is EvalMode.SERIES:
        return _series(basis, k, theta, length)

    x = grid(length)
    if basis.kind is BasisKind.SQUARE:
        return SampledFrame(square_signs(k, theta, length).astype(float))
    if basis.kind is BasisKind.SINE:
        return SampledFrame(np.sin(k * x + theta))
    if basis.kind is BasisKind.TRIANGLE:
        return SampledFrame(triangle_wave(k * x + theta))
    if not interpolate:
        raise UnsupportedModeError(
            f"Tabulated basis '{basis.name}' has no closed form; enable table interpolation or use series mode."
        )
    table = basis.table.samples
    position = np.mod((k * x + theta) / (2.0 * np.pi), 1.0) * table.size
    wrapped = np.append(table, table[0])
    return SampledFrame(np.interp(position, np.arange(table.size + 1), wrapped))


def _series(basis: BasisFunction, k: int, theta: float, length: int) -> SampledFrame:
    harmonics = length // 2 - 1
    modules = np.zeros(harmonics)
    phases = np.zeros(harmonics)
    top = min(harmonics // k, basis.spectrum.harmonics)
    p = np.arange(1, top + 1)
    modules[p * k - 1] = basis.spectrum.modules[:top]
    phases[p * k - 1] = p * theta + basis.spectrum.phases[:top]
    return synthesize_frame(PolarSpectrum(c0=0.0, modules=modules, phases=phases), length)
