import math

import numpy as np

from bases.basis_function import BasisFunction, BasisKind
from errors import BadParamsError
from spectrum.polar import PolarSpectrum


def make_triangle(harmonic_budget: int) -> BasisFunction:
    """
    Zero-mean triangle (2/pi)*asin(sin x), in phase with sin x.

    s_p = 8/(pi**2 * p**2) on odd p, phi_p = -pi/2 for p = 1 (mod 4) and +pi/2 for p = 3 (mod 4).
    """
    if harmonic_budget < 1:
        raise BadParamsError(f"Harmonic budget must be >= 1, got {harmonic_budget}.")
    p = np.arange(1, harmonic_budget + 1)
    odd = p % 2 == 1
    modules = np.where(odd, 8.0 / (math.pi ** 2 * p ** 2), 0.0)
    phases = np.where(p % 4 == 1, -math.pi / 2.0, np.where(p % 4 == 3, math.pi / 2.0, 0.0))
    return BasisFunction(
        name="triangle",
        kind=BasisKind.TRIANGLE,
        spectrum=PolarSpectrum(c0=0.0, modules=modules, phases=phases),
        harmonic_budget=harmonic_budget,
    )
