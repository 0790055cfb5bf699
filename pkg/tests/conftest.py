import numpy as np
import pytest

from bases.waveforms import square_signs
from spectrum.frame import SampledFrame, grid


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def frame_of():
    """Sample a function of x on one L-point period."""
    def make(func, length):
        return SampledFrame(func(grid(length)))
    return make


@pytest.fixture
def square_frame():
    def make(length, amplitude=1.0):
        return SampledFrame(amplitude * square_signs(1, 0.0, length).astype(float))
    return make
