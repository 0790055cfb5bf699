import math

import numpy as np
import pytest

from bases.waveforms import square_signs
from errors import BadParamsError, NonFiniteInputError, NyquistEnergyError, OddLengthError, TooFewSamplesError
from generators import random_band_limited
from spectrum.frame import SampledFrame, norm
from spectrum.polar import PolarSpectrum, polar_to_rect, rect_to_polar, spectrum_norm, wrap_phase
from spectrum.transform import analyze_frame, synthesize_frame


def test_frame_rejects_bad_samples():
    with pytest.raises(OddLengthError):
        SampledFrame(np.zeros(7))
    with pytest.raises(TooFewSamplesError):
        SampledFrame(np.zeros(2))
    with pytest.raises(NonFiniteInputError):
        SampledFrame([0.0, 1.0, np.nan, 0.0])
    with pytest.raises(BadParamsError):
        SampledFrame(np.zeros((2, 4)))


def test_frame_is_read_only():
    frame = SampledFrame([0.0, 1.0, 0.0, -1.0])
    with pytest.raises(ValueError):
        frame.samples[0] = 2.0


def test_analyze_cosine(frame_of):
    spec = analyze_frame(frame_of(np.cos, 64))
    assert spec.harmonics == 31
    assert spec.c0 == pytest.approx(0.0, abs=1e-12)
    assert spec.modules[0] == pytest.approx(1.0, abs=1e-12)
    assert spec.phases[0] == pytest.approx(0.0, abs=1e-12)
    assert np.all(spec.modules[1:] < 1e-12)


def test_analyze_sine_has_minus_half_pi_phase(frame_of):
    spec = analyze_frame(frame_of(np.sin, 64))
    assert spec.modules[0] == pytest.approx(1.0, abs=1e-12)
    assert spec.phases[0] == pytest.approx(-math.pi / 2, abs=1e-12)


def test_analyze_square_matches_fourier_series():
    length = 4096
    # boundary samples set to zero: the midpoint convention puts the square exactly at phase -pi/2
    samples = square_signs(1, 0.0, length).astype(float)
    samples[0] = samples[length // 2] = 0.0
    spec = analyze_frame(SampledFrame(samples))
    for k in range(1, 22, 2):
        assert spec.modules[k - 1] == pytest.approx(4.0 / (k * math.pi), abs=1e-3)
        assert spec.phases[k - 1] == pytest.approx(-math.pi / 2, abs=1e-3)


def test_analyze_offset_harmonic(frame_of):
    spec = analyze_frame(frame_of(lambda x: 3.0 + 2.0 * np.cos(3 * x + 0.5), 16))
    assert spec.c0 == pytest.approx(3.0)
    assert spec.modules[2] == pytest.approx(2.0)
    assert spec.phases[2] == pytest.approx(0.5)


def test_nyquist_energy_is_rejected_unless_relaxed():
    alternating = SampledFrame(np.array([1.0, -1.0] * 8))
    with pytest.raises(NyquistEnergyError):
        analyze_frame(alternating)
    relaxed = analyze_frame(alternating, strict_nyquist=False)
    assert np.all(relaxed.modules < 1e-12)


def test_synthesize_examples():
    cosine = synthesize_frame(PolarSpectrum(0.0, [1.0], [0.0]), 8)
    np.testing.assert_allclose(cosine.samples, np.cos(2 * np.pi * np.arange(8) / 8), atol=1e-12)
    constant = synthesize_frame(PolarSpectrum.empty(2.5), 16)
    np.testing.assert_allclose(constant.samples, 2.5)


def test_synthesize_needs_enough_samples():
    with pytest.raises(TooFewSamplesError):
        synthesize_frame(PolarSpectrum.empty(0.0, 4), 8)
    with pytest.raises(OddLengthError):
        synthesize_frame(PolarSpectrum.empty(0.0, 1), 9)


def test_round_trip_band_limited(rng):
    for _ in range(10):
        samples = random_band_limited(128, 63, rng) + rng.normal()
        spec = analyze_frame(SampledFrame(samples))
        np.testing.assert_allclose(synthesize_frame(spec, 128).samples, samples, atol=1e-9)


def test_parseval_and_norms(rng, frame_of, square_frame):
    assert norm(SampledFrame(np.ones(8))) == 1.0
    assert norm(frame_of(np.cos, 64)) == pytest.approx(math.sqrt(0.5), abs=1e-6)
    assert norm(square_frame(64)) == 1.0
    assert spectrum_norm(PolarSpectrum(0.0, [1.0], [0.0])) == pytest.approx(0.7071068, abs=1e-7)
    assert spectrum_norm(PolarSpectrum.empty(3.0)) == 3.0
    for _ in range(10):
        frame = SampledFrame(random_band_limited(64, 31, rng) + rng.normal())
        assert spectrum_norm(analyze_frame(frame)) == pytest.approx(norm(frame), rel=1e-9)


def test_analyze_is_linear(rng):
    f = random_band_limited(64, 20, rng)
    g = random_band_limited(64, 20, rng)
    combined = analyze_frame(SampledFrame(2.0 * f - 0.5 * g)).complex_bins()
    expected = 2.0 * analyze_frame(SampledFrame(f)).complex_bins() - 0.5 * analyze_frame(SampledFrame(g)).complex_bins()
    np.testing.assert_allclose(combined, expected, atol=1e-9)


def test_canonical_phases():
    spec = PolarSpectrum(0.0, [0.0, 1.0, 1.0], [1.0, 3 * math.pi, -math.pi])
    assert spec.phases[0] == 0.0
    assert spec.phases[1] == pytest.approx(math.pi)
    assert spec.phases[2] == math.pi
    with pytest.raises(BadParamsError):
        PolarSpectrum(0.0, [-1.0], [0.0])


def test_wrap_phase_keeps_values_in_range():
    assert wrap_phase(math.pi) == math.pi
    assert wrap_phase(-math.pi) == math.pi
    assert wrap_phase(0.25) == 0.25
    assert wrap_phase(-3.0) == -3.0
    assert wrap_phase(2 * math.pi + 0.5) == pytest.approx(0.5)


def test_polar_rect_conversion(rng):
    assert polar_to_rect(PolarSpectrum(0.0, [1.0], [0.0])) == [(pytest.approx(0.0), 1.0)]
    (a, b), = polar_to_rect(PolarSpectrum(0.0, [1.0], [-math.pi / 2]))
    assert a == pytest.approx(1.0) and b == pytest.approx(0.0, abs=1e-15)

    spec = PolarSpectrum(0.3, rng.uniform(0, 2, 12), rng.uniform(-math.pi, math.pi, 12))
    back = rect_to_polar(polar_to_rect(spec), c0=spec.c0)
    np.testing.assert_allclose(back.complex_bins(), spec.complex_bins(), atol=1e-12)
    assert back.c0 == spec.c0
