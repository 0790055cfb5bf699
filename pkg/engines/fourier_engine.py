import math
from typing import Optional, Tuple

import numpy as np

import settings
from engines.rc_lowpass import finish_render
from engines.render_config import EngineStats, RenderConfig
from errors import BadLutSizeError, BadParamsError
from spectrum.polar import PolarSpectrum

INTERPOLATIONS = ("linear", "nearest")
PHASE_FRACTION_BITS = 16


def cosine_table(lut_size: int) -> np.ndarray:
    if lut_size < 4 or lut_size & (lut_size - 1):
        raise BadLutSizeError(f"LUT size must be a power of two >= 4, got {lut_size}.")
    return np.cos(2.0 * math.pi * np.arange(lut_size) / lut_size)


def render_fourier(spec: PolarSpectrum, cfg: RenderConfig, lut_size: Optional[int] = None,
                   interpolation: str = "linear") -> Tuple[np.ndarray, EngineStats]:
    """
    Additive Fourier synthesizer: one integer phase accumulator per partial reading a cosine look-up table.

    Parameters:
    spec (PolarSpectrum): partials m_k*cos(k*x + theta_k); zero modules are skipped.
    cfg (RenderConfig): grid, periods and post filter.
    lut_size (int | None): power of two >= 4, defaults to LUT_SIZE from the config.
    interpolation (str): "linear" (two reads, wrap-around) or "nearest" (index rounded half to even).

    Returns:
    tuple: samples and stats (one multiply and one add per partial per sample).
    """
    lut_size = settings.LUT_SIZE if lut_size is None else lut_size
    table = cosine_table(lut_size)
    if interpolation not in INTERPOLATIONS:
        raise BadParamsError(f"Interpolation must be one of {INTERPOLATIONS}, got '{interpolation}'.")

    grid, total = cfg.grid, cfg.total_samples
    partials = np.flatnonzero(spec.modules > 0.0) + 1
    if partials.size and partials[-1] >= grid // 2:
        raise BadParamsError(f"Harmonic {partials[-1]} does not fit a grid of {grid} samples per period.")

    # Registers count table steps in units of 1/(grid * 2**PHASE_FRACTION_BITS) and wrap once per cycle.
    unit = grid << PHASE_FRACTION_BITS
    modulus = lut_size * unit
    modules = spec.modules[partials - 1]
    steps = partials.astype(np.int64) * (lut_size << PHASE_FRACTION_BITS)
    registers = np.rint(spec.phases[partials - 1] * modulus / (2.0 * math.pi)).astype(np.int64) % modulus

    samples = np.empty(total)
    for index in range(total):
        if interpolation == "nearest":
            value = table[np.rint(registers / unit).astype(np.int64) % lut_size]
        else:
            lower, remainder = np.divmod(registers, unit)
            fraction = remainder / unit
            value = table[lower] * (1.0 - fraction) + table[(lower + 1) % lut_size] * fraction
        samples[index] = spec.c0 + float(np.dot(modules, value))
        registers = (registers + steps) % modulus

    reads_per_partial = 2 if interpolation == "linear" else 1
    work = int(partials.size) * total
    stats = EngineStats(adds=work, multiplies=work, table_reads=reads_per_partial * work, samples_rendered=total)
    return finish_render(samples, cfg), stats
