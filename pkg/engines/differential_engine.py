import heapq
from typing import Tuple

import numpy as np

from deconstructor import Decomposition
from engines.exact_sum import ExactAccumulator
from engines.rc_lowpass import finish_render
from engines.render_config import EngineStats, RenderConfig
from engines.square_phase import half_period_index, next_flip, square_terms, term_offset


def render_differential(decomp: Decomposition, cfg: RenderConfig) -> Tuple[np.ndarray, EngineStats]:
    """
    Event-driven square synthesis: the output is held constant and only updated by +-2*M_n
    when square n switches.

    Flip positions come from the integer half-period counter of each term, kept in a heap
    ordered by (sample, term). The accumulator is exact, so samples match render_naive bit for bit.
    The state is loaded from the sample before the first one, so a render of P periods sees
    exactly 2*n*P flips of term n.
    """
    grid, total = cfg.grid, cfg.total_samples
    terms = square_terms(decomp, grid)

    accumulator = ExactAccumulator([decomp.c0])
    offsets, halves, signs, events = [], [], [], []
    for index, term in enumerate(terms):
        offset = term_offset(term, grid)
        half = half_period_index(term.n, offset, grid, -1)
        sign = 1 if half % 2 == 0 else -1
        accumulator.add(sign * term.module)
        offsets.append(offset)
        halves.append(half)
        signs.append(sign)
        events.append((next_flip(term.n, offset, grid, half), index))
    heapq.heapify(events)

    stats = EngineStats(samples_rendered=total, adds=len(terms))
    samples = np.empty(total)
    current = accumulator.value()
    for i in range(total):
        if events and events[0][0] == i:
            while events and events[0][0] == i:
                _, index = heapq.heappop(events)
                term = terms[index]
                accumulator.add(-2.0 * signs[index] * term.module)
                signs[index] = -signs[index]
                halves[index] += 1
                stats.sign_flips += 1
                stats.adds += 1
                heapq.heappush(events, (next_flip(term.n, offsets[index], grid, halves[index]), index))
            current = accumulator.value()
        samples[i] = current
    return finish_render(samples, cfg), stats
