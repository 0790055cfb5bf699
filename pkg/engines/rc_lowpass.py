import math

import numpy as np
from scipy.signal import lfilter, lfilter_zi

from engines.render_config import RenderConfig
from errors import BadParamsError


def rc_lowpass(signal, cutoff: float, samples_per_period: int) -> np.ndarray:
    """
    One-pole RC low-pass, y[i] = y[i-1] + alpha*(x[i] - y[i-1]) with alpha = 1 - exp(-2*pi*cutoff/L).

    The filter state is warmed up with one pass over the first period so a periodic input starts
    close to its steady state. DC gain is exactly 1.

    Parameters:
    signal (array-like): flat sample sequence.
    cutoff (float): -3 dB point in cycles per period (harmonic units), > 0.
    samples_per_period (int): L of the sequence being filtered.

    Returns:
    np.ndarray: filtered sequence, same length.
    """
    if not cutoff > 0.0:
        raise BadParamsError(f"Filter cutoff must be > 0, got {cutoff}.")
    x = np.asarray(signal, dtype=float)
    if x.size == 0:
        return x.copy()
    alpha = 1.0 - math.exp(-2.0 * math.pi * cutoff / samples_per_period)
    b, a = [alpha], [1.0, alpha - 1.0]
    _, warm_state = lfilter(b, a, x[:samples_per_period], zi=lfilter_zi(b, a) * x[0])
    y, _ = lfilter(b, a, x, zi=warm_state)
    return y


def finish_render(samples: np.ndarray, cfg: RenderConfig) -> np.ndarray:
    """Apply the configured post filter and decimation to a raw render."""
    if cfg.filter_cutoff is not None:
        samples = rc_lowpass(samples, cfg.filter_cutoff, cfg.grid)
    if cfg.decimate and cfg.oversample > 1:
        samples = samples[::cfg.oversample].copy()
    return samples
