import numpy as np

from bases.basis_function import BasisFunction, BasisKind
from errors import ZeroFunctionError
from spectrum.frame import SampledFrame
from spectrum.polar import PolarSpectrum
from spectrum.transform import analyze_frame

ZERO_TOLERANCE = 1e-12


def make_from_samples(frame: SampledFrame, name: str = "tabulated") -> BasisFunction:
    """
    Use one sampled period of any signal as a basis.

    The mean is removed first and the Nyquist bin of the table is dropped. The margin is reported,
    not enforced: an inadmissible table is still returned and flagged by `admissible`.

    Raises:
    ZeroFunctionError: nothing is left after centering.
    """
    samples = frame.samples
    centered = samples - np.mean(samples)
    scale = max(1.0, float(np.max(np.abs(samples))))
    if float(np.max(np.abs(centered))) <= ZERO_TOLERANCE * scale:
        raise ZeroFunctionError(f"Basis '{name}' is constant over the period; nothing to build on.")
    table = SampledFrame(centered)
    analyzed = analyze_frame(table, strict_nyquist=False)
    spectrum = PolarSpectrum(c0=0.0, modules=analyzed.modules, phases=analyzed.phases)
    return BasisFunction(
        name=name,
        kind=BasisKind.TABULATED,
        spectrum=spectrum,
        harmonic_budget=spectrum.harmonics,
        table=table,
    )
