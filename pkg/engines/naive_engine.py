import math
from typing import Tuple

import numpy as np

from bases.waveforms import square_signs
from deconstructor import Decomposition
from engines.rc_lowpass import finish_render
from engines.render_config import EngineStats, RenderConfig
from engines.square_phase import square_terms


def render_naive(decomp: Decomposition, cfg: RenderConfig) -> Tuple[np.ndarray, EngineStats]:
    """
    Additive square-wave synthesizer: every sample is c0 + sum_n M_n*sq(n*x_i + Theta_n).

    Each square is the sign of an integer phase accumulator, so applying it is a negation and no
    multiply is counted; one add per term per sample. Samples are the correctly rounded exact sum.
    """
    grid, total = cfg.grid, cfg.total_samples
    terms = square_terms(decomp, grid)
    stats = EngineStats(samples_rendered=total, adds=len(terms) * total)

    if not terms:
        return finish_render(np.full(total, decomp.c0), cfg), stats

    addends = np.empty((len(terms) + 1, total))
    addends[0] = decomp.c0
    for row, term in enumerate(terms, start=1):
        addends[row] = np.where(square_signs(term.n, term.phase, grid, 0, total) > 0, term.module, -term.module)
    samples = np.fromiter((math.fsum(column) for column in addends.T), dtype=float, count=total)
    return finish_render(samples, cfg), stats
