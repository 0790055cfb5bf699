import json
import math
import re

import numpy as np
import pandas as pd
import pytest

from cli import main
from fileio.signal_files import read_signal, write_signal
from fileio.wav import read_wav
from generators import sine_wave


def number_after(label, text):
    match = re.search(re.escape(label) + r"\s*([-+0-9.eE]+)", text)
    assert match, f"'{label}' not found in output"
    return float(match.group(1))


@pytest.fixture
def signal_file(tmp_path):
    def make(shape, name=None, length=64, extra=()):
        path = tmp_path / (name or f"{shape}.csv")
        assert main(["gen", shape, "-o", str(path), "--period-samples", str(length), *extra]) == 0
        return path
    return make


def test_gen_sine_wav_is_normalized(signal_file):
    samples = read_wav(signal_file("sine", "sine.wav", 1024))
    assert samples.size == 1024
    assert np.max(np.abs(samples)) == pytest.approx(0.9, abs=1e-4)


def test_gen_square_csv(signal_file):
    samples = read_signal(signal_file("square"))
    np.testing.assert_array_equal(np.unique(samples), [-0.9, 0.9])


def test_gen_multiharmonic_is_seeded(signal_file):
    first = signal_file("multiharmonic", "a.csv", extra=("--seed", "3")).read_text()
    second = signal_file("multiharmonic", "b.csv", extra=("--seed", "3")).read_text()
    other = signal_file("multiharmonic", "c.csv", extra=("--seed", "4")).read_text()
    assert first == second != other


def test_gen_multiharmonic_components(signal_file):
    samples = read_signal(signal_file("multiharmonic", extra=("--components", "1:1:0,3:0.5:0.2")))
    x = 2 * np.pi * np.arange(64) / 64
    np.testing.assert_allclose(samples, np.cos(x) + 0.5 * np.cos(3 * x + 0.2), atol=1e-12)


def test_gen_file_converts_formats(signal_file, tmp_path):
    source = signal_file("sine")
    target = tmp_path / "copy.wav"
    assert main(["gen", "file", "--input", str(source), "-o", str(target)]) == 0
    assert read_wav(target).size == 64


def test_analyze_square_gives_one_term(signal_file, tmp_path, capsys):
    out = tmp_path / "square.json"
    assert main(["analyze", str(signal_file("square")), "-o", str(out), "--period-samples", "64"]) == 0
    document = json.loads(out.read_text())
    nonzero = [term for term in document["terms"] if term[1] > 0]
    assert len(nonzero) == 1
    n, module, phase = nonzero[0]
    assert n == 1
    assert module == pytest.approx(0.9, abs=1e-9)
    assert phase == pytest.approx(0.0, abs=1e-9)
    spectrum = pd.read_csv(tmp_path / "square_spectrum.csv")
    assert list(spectrum.columns) == ["k", "M", "Theta"]
    assert "Margin" in capsys.readouterr().out


def test_analyze_sine_has_only_odd_terms(signal_file, tmp_path):
    out = tmp_path / "sine.json"
    spectrum = tmp_path / "fig4.csv"
    assert main(["analyze", str(signal_file("sine", length=256)), "-o", str(out), "--period-samples", "256",
                 "--terms", "50", "--spectrum-out", str(spectrum)]) == 0
    table = pd.read_csv(spectrum)
    assert len(table) == 50
    assert np.all(table["M"][table["k"] % 2 == 0] < 1e-9)


def test_analyze_strict_with_cos2x_basis_exits_3(signal_file, tmp_path, capsys):
    basis = tmp_path / "cos2x.csv"
    write_signal(basis, np.cos(2 * 2 * np.pi * np.arange(64) / 64))
    code = main(["analyze", str(signal_file("sine")), "-o", str(tmp_path / "x.json"), "--period-samples", "64",
                 "--basis", "file", "--basis-file", str(basis), "--strict"])
    assert code == 3
    assert "Error" in capsys.readouterr().err


def test_analyze_writes_plot_and_trace(signal_file, tmp_path):
    plot = tmp_path / "plot.html"
    trace = tmp_path / "trace.csv"
    assert main(["analyze", str(signal_file("sine")), "-o", str(tmp_path / "s.json"), "--period-samples", "64",
                 "--plot", str(plot), "--trace-out", str(trace)]) == 0
    assert "<html>" in plot.read_text()
    assert len(pd.read_csv(trace)) == 32


def test_synth_engines_write_identical_wavs(signal_file, tmp_path, capsys):
    decomp = tmp_path / "sine.json"
    assert main(["analyze", str(signal_file("sine")), "-o", str(decomp), "--period-samples", "64"]) == 0
    naive = tmp_path / "naive.wav"
    diff = tmp_path / "diff.wav"
    common = ["--period-samples", "64", "--periods", "8"]
    assert main(["synth", str(decomp), "-o", str(naive), "--engine", "naive", *common]) == 0
    assert main(["synth", str(decomp), "-o", str(diff), "--engine", "diff", *common]) == 0
    assert naive.read_bytes() == diff.read_bytes()
    assert number_after("Multiplies:", capsys.readouterr().out) == 0
    assert "Multiplies:  0" in (tmp_path / "diff_stats.txt").read_text()


def test_synth_fourier_counts_multiplies(signal_file, tmp_path, capsys):
    decomp = tmp_path / "square.json"
    assert main(["analyze", str(signal_file("square")), "-o", str(decomp), "--period-samples", "64"]) == 0
    capsys.readouterr()
    assert main(["synth", str(decomp), "-o", str(tmp_path / "f.wav"), "--engine", "fourier",
                 "--period-samples", "64"]) == 0
    assert number_after("Multiplies:", capsys.readouterr().out) == 16 * 64


def test_synth_refuses_non_square_decomposition(signal_file, tmp_path):
    decomp = tmp_path / "sine.json"
    assert main(["analyze", str(signal_file("sine")), "-o", str(decomp), "--period-samples", "64",
                 "--basis", "sine"]) == 0
    assert main(["synth", str(decomp), "-o", str(tmp_path / "out.wav"), "--period-samples", "64"]) == 1


def test_synth_rejects_broken_file(tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text('{"format_version": 7}')
    assert main(["synth", str(broken), "-o", str(tmp_path / "out.wav")]) == 1


def test_synth_takes_period_from_grid_square(signal_file, tmp_path, capsys):
    decomp = tmp_path / "square.json"
    assert main(["analyze", str(signal_file("square")), "-o", str(decomp), "--period-samples", "64"]) == 0
    out = tmp_path / "square.wav"
    assert main(["synth", str(decomp), "-o", str(out), "--periods", "2"]) == 0
    assert read_wav(out).size == 128
    capsys.readouterr()
    assert main(["synth", str(decomp), "-o", str(out), "--period-samples", "1024"]) == 1
    assert "64 samples per period" in capsys.readouterr().err
    assert main(["stats", str(decomp), "--period-samples", "128"]) == 1


def test_analyze_writes_input_spectrum(signal_file, tmp_path):
    table_out = tmp_path / "input.csv"
    assert main(["analyze", str(signal_file("sine")), "-o", str(tmp_path / "s.json"), "--period-samples", "64",
                 "--input-spectrum-out", str(table_out)]) == 0
    table = pd.read_csv(table_out)
    assert list(table.columns) == ["k", "M", "Theta"]
    assert len(table) == 31
    assert table["M"][0] == pytest.approx(0.9, abs=1e-9)
    assert table["Theta"][0] == pytest.approx(-math.pi / 2, abs=1e-9)


def test_roundtrip_square_is_exact(signal_file, tmp_path, capsys):
    assert main(["roundtrip", str(signal_file("square")), "--period-samples", "64"]) == 0
    assert number_after("Render RMS error:", capsys.readouterr().out) < 1e-6
    assert (tmp_path / "square_trace.csv").exists()


def test_roundtrip_sine_after_low_pass(signal_file, capsys):
    source = signal_file("sine", length=1024)
    assert main(["roundtrip", str(source), "--period-samples", "1024", "--terms", "50",
                 "--oversample", "4", "--cutoff", "12"]) == 0
    output = capsys.readouterr().out
    assert number_after("Render RMS error:", output) < 0.05 * number_after("signal norm", output)


def test_roundtrip_multiharmonic_trace(signal_file, tmp_path):
    trace = tmp_path / "trace.csv"
    source = signal_file("multiharmonic", length=256, extra=("--seed", "11"))
    assert main(["roundtrip", str(source), "--period-samples", "256", "--terms", "9",
                 "--trace-out", str(trace), "--plot", str(tmp_path / "rt.html")]) == 0
    table = pd.read_csv(trace)
    assert len(table) == 10
    assert table["residual"].iloc[-1] < table["residual"].iloc[0]


def test_roundtrip_with_sine_basis_compares_spectra(signal_file, capsys):
    assert main(["roundtrip", str(signal_file("multiharmonic")), "--period-samples", "64", "--basis", "sine"]) == 0
    assert number_after("Render RMS error:", capsys.readouterr().out) < 1e-9


def test_compare_haar_square_wins_by_default(capsys):
    assert main(["compare-haar"]) == 0
    output = capsys.readouterr().out
    assert number_after("RMS", output.split("Haar functions")[0].split("Square waves")[1]) < \
        number_after("RMS", output.split("Haar functions")[1])


def test_compare_haar_complete_basis_wins():
    assert main(["compare-haar", "--haar-n", "1024"]) == 2


def test_compare_haar_without_squares(capsys):
    assert main(["compare-haar", "--square-n", "0"]) == 2
    output = capsys.readouterr().out
    square_rms = number_after("RMS", output.split("Square waves")[1])
    assert square_rms == pytest.approx(math.sqrt(0.5), rel=0.01)


def test_compare_haar_needs_power_of_two():
    assert main(["compare-haar", "--period-samples", "96"]) == 1


def test_stats_lists_every_engine(signal_file, tmp_path, capsys):
    decomp = tmp_path / "sine.json"
    assert main(["analyze", str(signal_file("sine")), "-o", str(decomp), "--period-samples", "64"]) == 0
    capsys.readouterr()
    table_out = tmp_path / "stats.csv"
    assert main(["stats", str(decomp), "--period-samples", "64", "--csv-out", str(table_out)]) == 0
    table = pd.read_csv(table_out).set_index("engine")
    assert list(table.index) == ["naive", "diff", "fourier"]
    assert table.loc["naive", "multiplies"] == 0
    assert table.loc["diff", "adds"] < table.loc["naive", "adds"]


def test_usage_errors_exit_1(capsys):
    assert main(["no-such-verb"]) == 1
    assert main(["analyze"]) == 1
    assert main(["--help"]) == 0


def test_missing_input_exits_1(tmp_path):
    assert main(["analyze", str(tmp_path / "missing.csv"), "-o", str(tmp_path / "x.json")]) == 1


def test_short_input_exits_1(tmp_path):
    path = tmp_path / "short.csv"
    write_signal(path, sine_wave(32))
    assert main(["analyze", str(path), "-o", str(tmp_path / "x.json"), "--period-samples", "64"]) == 1
