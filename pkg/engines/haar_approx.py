import math
from typing import Tuple

import numpy as np
import pywt

from errors import BadParamsError, NotPowerOfTwoError
from spectrum.frame import SampledFrame


def haar_approx(target: SampledFrame, num_functions: int) -> Tuple[SampledFrame, float]:
    """
    Orthogonal projection of one period onto the first `num_functions` Haar functions.

    Order is coarse to fine: the constant, the mother wavelet, then each dyadic scale left to right.
    This is the order of a full periodized `pywt.wavedec`, so truncating its flattened coefficients
    is the projection.

    Returns:
    tuple: the approximation and its RMS error.
    """
    length = target.length
    if length & (length - 1):
        raise NotPowerOfTwoError(f"Haar approximation needs a power-of-two length, got {length}.")
    if not 0 <= num_functions <= length:
        raise BadParamsError(f"Number of Haar functions must lie in 0..{length}, got {num_functions}.")

    level = int(math.log2(length))
    coefficients = pywt.wavedec(np.array(target.samples), "haar", mode="periodization", level=level)
    flat, slices = pywt.coeffs_to_array(coefficients)
    flat[num_functions:] = 0.0
    kept = pywt.array_to_coeffs(flat, slices, output_format="wavedec")
    approximation = pywt.waverec(kept, "haar", mode="periodization")[:length]

    rms = math.sqrt(float(np.mean(np.square(target.samples - approximation))))
    return SampledFrame(approximation), rms


def haar_function(length: int, index: int) -> np.ndarray:
    """The index-th orthonormal Haar function in the same coarse-to-fine order."""
    if length & (length - 1) or not 0 <= index < length:
        raise BadParamsError(f"No Haar function {index} on {length} samples.")
    level = int(math.log2(length))
    coefficients = pywt.wavedec(np.zeros(length), "haar", mode="periodization", level=level)
    flat, slices = pywt.coeffs_to_array(coefficients)
    flat[index] = 1.0
    return pywt.waverec(pywt.array_to_coeffs(flat, slices, output_format="wavedec"), "haar", mode="periodization")
