import math

from bases.basis_function import BasisFunction, BasisKind
from spectrum.polar import PolarSpectrum


def make_sine() -> BasisFunction:
    """sin(x) = cos(x - pi/2): one harmonic, margin 1. Deconstructing with it is plain Fourier analysis."""
    return BasisFunction(
        name="sine",
        kind=BasisKind.SINE,
        spectrum=PolarSpectrum(c0=0.0, modules=[1.0], phases=[-math.pi / 2.0]),
        harmonic_budget=1,
    )
