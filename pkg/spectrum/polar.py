import math
from dataclasses import dataclass
from typing import Iterable, List, Tuple

import numpy as np

from errors import BadParamsError

TWO_PI = 2.0 * math.pi


def wrap_phase(theta):
    """Wrap a phase (scalar or array) into (-pi, pi]. Values already in range come back unchanged."""
    wrapped = np.asarray(theta, dtype=float) - TWO_PI * np.rint(np.asarray(theta, dtype=float) / TWO_PI)
    wrapped = np.where(wrapped <= -math.pi, wrapped + TWO_PI, wrapped)
    wrapped = np.where(wrapped > math.pi, wrapped - TWO_PI, wrapped)
    if np.ndim(theta) == 0:
        return float(wrapped)
    return wrapped


@dataclass(frozen=True, eq=False)
class PolarSpectrum:
    """
    DC term plus harmonics k = 1..K in the form m_k * cos(k*x + theta_k).

    Parameters:
    c0 (float): mean of the signal.
    modules (array): m_k >= 0, index k-1.
    phases (array): theta_k, canonicalized into (-pi, pi] and forced to 0 where m_k == 0.
    """
    c0: float
    modules: np.ndarray
    phases: np.ndarray

    def __post_init__(self):
        modules = np.array(self.modules, dtype=float).reshape(-1)
        phases = np.array(self.phases, dtype=float).reshape(-1)
        if modules.shape != phases.shape:
            raise BadParamsError(f"{modules.size} modules but {phases.size} phases.")
        if not (np.all(np.isfinite(modules)) and np.all(np.isfinite(phases)) and math.isfinite(self.c0)):
            raise BadParamsError("Spectrum values must be finite.")
        if np.any(modules < 0):
            raise BadParamsError("Modules must be non-negative.")
        phases = np.where(modules == 0.0, 0.0, wrap_phase(phases))
        modules.setflags(write=False)
        phases.setflags(write=False)
        object.__setattr__(self, "c0", float(self.c0))
        object.__setattr__(self, "modules", modules)
        object.__setattr__(self, "phases", phases)

    @classmethod
    def from_complex(cls, c0: float, bins) -> "PolarSpectrum":
        """Build from complex amplitudes r_k = m_k * exp(i*theta_k)."""
        bins = np.asarray(bins, dtype=complex)
        return cls(c0=c0, modules=np.abs(bins), phases=np.angle(bins))

    @classmethod
    def empty(cls, c0: float = 0.0, harmonics: int = 0) -> "PolarSpectrum":
        return cls(c0=c0, modules=np.zeros(harmonics), phases=np.zeros(harmonics))

    @property
    def harmonics(self) -> int:
        return int(self.modules.size)

    def complex_bins(self) -> np.ndarray:
        return self.modules * np.exp(1j * self.phases)

    def resized(self, harmonics: int) -> "PolarSpectrum":
        """Truncate or zero-pad to exactly `harmonics` bins."""
        modules = np.zeros(harmonics)
        phases = np.zeros(harmonics)
        keep = min(harmonics, self.harmonics)
        modules[:keep] = self.modules[:keep]
        phases[:keep] = self.phases[:keep]
        return PolarSpectrum(c0=self.c0, modules=modules, phases=phases)


def spectrum_norm(spec: PolarSpectrum) -> float:
    """Parseval shortcut: sqrt(c0**2 + 0.5 * sum(m_k**2))."""
    return float(math.sqrt(spec.c0 ** 2 + 0.5 * float(np.sum(np.square(spec.modules)))))


def polar_to_rect(spec: PolarSpectrum) -> List[Tuple[float, float]]:
    """Per-bin (a_k, b_k) with f = C0 + sum(a_k sin kx + b_k cos kx)."""
    a = -spec.modules * np.sin(spec.phases)
    b = spec.modules * np.cos(spec.phases)
    return [(float(a_k), float(b_k)) for a_k, b_k in zip(a, b)]


def rect_to_polar(pairs: Iterable[Tuple[float, float]], c0: float = 0.0) -> PolarSpectrum:
    pairs = np.asarray(list(pairs), dtype=float).reshape(-1, 2)
    a, b = pairs[:, 0], pairs[:, 1]
    return PolarSpectrum(c0=c0, modules=np.hypot(a, b), phases=np.arctan2(-a, b))
