import math

import numpy as np


SNAP_TOLERANCE = 1e-9


def square_offset(phase: float, grid: int) -> int:
    """
    Phase shift of a square wave in whole grid steps, floor(grid*phase/2pi).

    Values within rounding of an integer snap to it, so a phase that is a grid step up to
    float error (0 computed as -1e-16) does not move the square by a whole sample.
    """
    steps = grid * phase / (2.0 * math.pi)
    nearest = round(steps)
    if abs(steps - nearest) <= SNAP_TOLERANCE * max(1.0, abs(steps)):
        return int(nearest)
    return math.floor(steps)


def square_signs(harmonic: int, phase: float, grid: int, start: int = 0, count: int = None) -> np.ndarray:
    """
    Samples of sq(harmonic*x_i + phase) on a grid of `grid` samples per period, as +1/-1 integers.

    sq(t) is +1 iff frac(t/2pi) lies in [0, 1/2). With o = floor(grid*phase/2pi) this is exactly
    ((harmonic*i + o) mod grid) < grid/2, so the phase accumulator is pure integer arithmetic and stays
    exact over arbitrarily long renders.
    """
    count = grid if count is None else count
    index = np.arange(start, start + count, dtype=np.int64)
    accumulator = (harmonic * index + square_offset(phase, grid)) % grid
    return np.where(accumulator < grid // 2, 1, -1).astype(np.int64)


def triangle_wave(t: np.ndarray) -> np.ndarray:
    """Zero-mean triangle with peak +1 at t = pi/2, in phase with sin(t)."""
    return (2.0 / math.pi) * np.arcsin(np.clip(np.sin(t), -1.0, 1.0))
