import numpy as np

from errors import NyquistEnergyError, OddLengthError, TooFewSamplesError
from spectrum.frame import SampledFrame
from spectrum.polar import PolarSpectrum

NYQUIST_ENERGY_LIMIT = 1e-9


def analyze_frame(frame: SampledFrame, strict_nyquist: bool = True) -> PolarSpectrum:
    """
    One-period discrete Fourier analysis into the polar cosine form.

    Parameters:
    frame (SampledFrame): one period, L samples.
    strict_nyquist (bool): reject frames with more than 1e-9 relative energy in the Nyquist bin
        (True), or silently drop that bin (False).

    Returns:
    PolarSpectrum: c0 and K = L/2 - 1 harmonics.
    """
    length = frame.length
    coefficients = np.fft.rfft(frame.samples) / length
    nyquist_amplitude = coefficients[length // 2].real
    total_energy = float(np.mean(np.square(frame.samples)))
    if strict_nyquist and nyquist_amplitude ** 2 > NYQUIST_ENERGY_LIMIT * total_energy:
        raise NyquistEnergyError(
            f"{nyquist_amplitude ** 2 / total_energy:.3g} of the frame energy sits in the Nyquist bin; "
            "a phased cosine cannot be represented there."
        )
    return PolarSpectrum.from_complex(coefficients[0].real, 2.0 * coefficients[1:length // 2])


def synthesize_frame(spec: PolarSpectrum, length: int) -> SampledFrame:
    """samples[i] = c0 + sum_k m_k * cos(k * 2*pi*i/L + theta_k)."""
    if length % 2:
        raise OddLengthError(f"Frame length must be even, got {length}.")
    if spec.harmonics > length // 2 - 1:
        raise TooFewSamplesError(
            f"{spec.harmonics} harmonics need at least {2 * (spec.harmonics + 1)} samples, got {length}."
        )
    coefficients = np.zeros(length // 2 + 1, dtype=complex)
    coefficients[0] = spec.c0 * length
    coefficients[1:spec.harmonics + 1] = spec.complex_bins() * (length / 2.0)
    return SampledFrame(np.fft.irfft(coefficients, n=length))
