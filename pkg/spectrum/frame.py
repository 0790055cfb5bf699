from dataclasses import dataclass

import numpy as np

from errors import BadParamsError, NonFiniteInputError, OddLengthError, TooFewSamplesError

MIN_FRAME_LENGTH = 4


@dataclass(frozen=True, eq=False)
class SampledFrame:
    """
    Exactly one period of a real signal on the uniform grid x_i = 2*pi*i/L.

    The samples are copied into a read-only float array, so a frame can be shared freely.

    Raises:
    NonFiniteInputError, OddLengthError, TooFewSamplesError
    """
    samples: np.ndarray

    def __post_init__(self):
        samples = np.array(self.samples, dtype=float)
        if samples.ndim != 1:
            raise BadParamsError(f"A frame is one-dimensional, got shape {samples.shape}.")
        if not np.all(np.isfinite(samples)):
            raise NonFiniteInputError("Frame contains NaN or infinite samples.")
        if samples.size % 2:
            raise OddLengthError(f"Frame length must be even, got {samples.size}.")
        if samples.size < MIN_FRAME_LENGTH:
            raise TooFewSamplesError(f"Frame needs at least {MIN_FRAME_LENGTH} samples, got {samples.size}.")
        samples.setflags(write=False)
        object.__setattr__(self, "samples", samples)

    @property
    def length(self) -> int:
        return int(self.samples.size)

    @property
    def nyquist(self) -> int:
        return self.length // 2


def grid(length: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(length) / length


def norm(frame: SampledFrame) -> float:
    """RMS over one period: sqrt((1/L) * sum(samples**2))."""
    return float(np.sqrt(np.mean(np.square(frame.samples))))
