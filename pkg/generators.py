from typing import List, Optional, Sequence, Tuple

import numpy as np

from bases.waveforms import square_signs
from errors import BadParamsError
from spectrum.frame import grid

Component = Tuple[int, float, float]

RANDOM_HARMONICS = (1, 2, 3, 5, 7, 9, 11)


def sine_wave(length: int, periods: int = 1, amplitude: float = 1.0, harmonic: int = 1,
              phase: float = 0.0) -> np.ndarray:
    x = grid(length)
    return np.tile(amplitude * np.sin(harmonic * x + phase), periods)


def square_wave(length: int, periods: int = 1, amplitude: float = 1.0) -> np.ndarray:
    """+amplitude on the first half period, -amplitude on the second."""
    return np.tile(amplitude * square_signs(1, 0.0, length).astype(float), periods)


def multiharmonic(length: int, components: Sequence[Component], periods: int = 1, c0: float = 0.0) -> np.ndarray:
    """c0 + sum of m*cos(k*x + theta) over the (k, m, theta) components."""
    x = grid(length)
    period = np.full(length, float(c0))
    for k, module, theta in components:
        period += module * np.cos(k * x + theta)
    return np.tile(period, periods)


def random_components(rng: np.random.Generator, harmonics: Sequence[int] = RANDOM_HARMONICS) -> List[Component]:
    """One component per listed harmonic, modules in [0.1, 1), phases in [-pi, pi)."""
    return [(int(k), float(rng.uniform(0.1, 1.0)), float(rng.uniform(-np.pi, np.pi))) for k in harmonics]


def random_band_limited(length: int, harmonics: int, rng: np.random.Generator) -> np.ndarray:
    components = random_components(rng, range(1, harmonics + 1))
    return multiharmonic(length, components)


def parse_components(text: Optional[str]) -> List[Component]:
    """Parse "k:m:theta,k:m:theta,..." into components."""
    if not text:
        return []
    components = []
    for item in text.split(","):
        fields = item.strip().split(":")
        if len(fields) != 3:
            raise BadParamsError(f"Component '{item}' must look like k:m:theta.")
        try:
            k, module, theta = int(fields[0]), float(fields[1]), float(fields[2])
        except ValueError:
            raise BadParamsError(f"Component '{item}' has a non-numeric field.")
        if k < 1 or module < 0:
            raise BadParamsError(f"Component '{item}' needs k >= 1 and m >= 0.")
        components.append((k, module, theta))
    return components
