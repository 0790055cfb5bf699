import math
from typing import List

from bases.square import is_square_name, square_grid
from bases.waveforms import square_offset
from deconstructor import Decomposition, Term
from errors import BadParamsError, WrongBasisKindError


def render_shift(basis_name: str, grid: int) -> float:
    """
    Phase added to every term when rendering on `grid`.

    A "square@L" spectrum is the square sampled on L points, which is the continuous square advanced
    by half a sample (pi/L). On its own grid the integer rule reproduces those samples as they are;
    on any other grid the advance has to be drawn explicitly.
    """
    model_grid = square_grid(basis_name)
    if model_grid is None or model_grid == grid:
        return 0.0
    return math.pi / model_grid


def square_terms(decomp: Decomposition, grid: int) -> List[Term]:
    """Nonzero terms of a square-basis decomposition, checked against and phased for the render grid."""
    if not is_square_name(decomp.basis_name):
        raise WrongBasisKindError(
            f"Square engines render square-wave decompositions only, got basis '{decomp.basis_name}'."
        )
    shift = render_shift(decomp.basis_name, grid)
    terms = [Term(term.n, term.module, term.phase + shift) for term in decomp.terms if term.module > 0.0]
    for term in terms:
        if not 1 <= term.n < grid // 2:
            raise BadParamsError(
                f"Term n={term.n} does not fit a grid of {grid} samples per period (needs n < {grid // 2})."
            )
    return terms


def half_period_index(harmonic: int, offset: int, grid: int, sample: int) -> int:
    """
    floor((harmonic*sample + offset) / (grid/2)); the square is +1 where this is even.

    harmonic < grid/2 moves it by at most one per sample, so every change is exactly one flip.
    """
    return (harmonic * sample + offset) // (grid // 2)


def next_flip(harmonic: int, offset: int, grid: int, half_index: int) -> int:
    """First sample whose half-period index exceeds `half_index`."""
    target = (half_index + 1) * (grid // 2) - offset
    return -(-target // harmonic)


def term_offset(term: Term, grid: int) -> int:
    return square_offset(term.phase, grid)
