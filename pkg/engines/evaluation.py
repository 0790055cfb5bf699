import math
from dataclasses import replace

import numpy as np

from deconstructor import Decomposition
from engines.naive_engine import render_naive
from engines.rc_lowpass import rc_lowpass
from engines.render_config import RenderConfig
from spectrum.polar import PolarSpectrum
from spectrum.transform import synthesize_frame


def render_reference(reference: PolarSpectrum, cfg: RenderConfig) -> np.ndarray:
    """Exact band-limited rendering of `reference` on the render grid, all periods."""
    period = synthesize_frame(reference, cfg.grid).samples
    return np.tile(period, cfg.periods)


def reconstruction_error(decomp: Decomposition, reference: PolarSpectrum, cfg: RenderConfig,
                         render=render_naive) -> float:
    """
    RMS difference over the last period between a square-wave render and the exact reference.

    When cfg has a filter cutoff, the same RC filter is applied to both signals before comparing,
    so the filter's phase lag does not count as error. Decimation is ignored.
    """
    raw = replace(cfg, filter_cutoff=None, decimate=False)
    rendered, _ = render(decomp, raw)
    exact = render_reference(reference, raw)
    if cfg.filter_cutoff is not None:
        rendered = rc_lowpass(rendered, cfg.filter_cutoff, cfg.grid)
        exact = rc_lowpass(exact, cfg.filter_cutoff, cfg.grid)
    difference = rendered[-cfg.grid:] - exact[-cfg.grid:]
    return math.sqrt(float(np.mean(np.square(difference))))
