import math
from typing import Optional

import numpy as np

from bases.basis_function import BasisFunction, BasisKind
from errors import BadParamsError, WrongBasisKindError
from spectrum.polar import PolarSpectrum


def make_square(harmonic_budget: int, grid: Optional[int] = None) -> BasisFunction:
    """
    The two-level (+1 on [0, pi), -1 on [pi, 2pi)) square wave.

    Parameters:
    harmonic_budget (int): highest harmonic p kept in the spectrum.
    grid (int | None): None gives the analytic series s_p = 4/(pi*p), phi_p = -pi/2 on odd p.
        An even grid size L gives the exact spectrum of the square sampled on L points,
        s_p = 4/(L*sin(pi*p/L)), phi_p = pi*p/L - pi/2, so sampled squares deconstruct to one term.

    Returns:
    BasisFunction: kind analytic-square, even harmonics exactly zero.
    """
    if harmonic_budget < 1:
        raise BadParamsError(f"Harmonic budget must be >= 1, got {harmonic_budget}.")
    if grid is not None:
        if grid < 4 or grid % 2:
            raise BadParamsError(f"Square grid must be an even size >= 4, got {grid}.")
        harmonic_budget = min(harmonic_budget, grid // 2 - 1)

    p = np.arange(1, harmonic_budget + 1)
    odd = p % 2 == 1
    if grid is None:
        modules = np.where(odd, 4.0 / (math.pi * p), 0.0)
        phases = np.where(odd, -math.pi / 2.0, 0.0)
        name = "square"
    else:
        modules = np.where(odd, 4.0 / (grid * np.sin(math.pi * p / grid)), 0.0)
        phases = np.where(odd, math.pi * p / grid - math.pi / 2.0, 0.0)
        name = f"square@{grid}"

    return BasisFunction(
        name=name,
        kind=BasisKind.SQUARE,
        spectrum=PolarSpectrum(c0=0.0, modules=modules, phases=phases),
        harmonic_budget=harmonic_budget,
    )


def square_from_name(name: str, harmonic_budget: int) -> BasisFunction:
    """Rebuild a square basis from the name stored in a decomposition ("square" or "square@L")."""
    if name == "square":
        return make_square(harmonic_budget)
    prefix, _, grid = name.partition("@")
    if prefix == "square" and grid.isdigit():
        return make_square(harmonic_budget, grid=int(grid))
    raise WrongBasisKindError(f"Basis '{name}' is not a square wave.")


def is_square_name(name: str) -> bool:
    prefix, separator, grid = name.partition("@")
    return prefix == "square" and (not separator or grid.isdigit())


def square_grid(name: str) -> Optional[int]:
    """The L of a "square@L" basis name, None for the analytic square."""
    if not is_square_name(name):
        raise WrongBasisKindError(f"Basis '{name}' is not a square wave.")
    _, _, grid = name.partition("@")
    return int(grid) if grid else None
