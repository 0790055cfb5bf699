import argparse
import sys
from pathlib import Path
from typing import Optional

import numpy as np

import console
import settings
from bases.sine import make_sine
from bases.square import is_square_name, make_square, square_grid
from bases.tabulated import make_from_samples
from bases.triangle import make_triangle
from deconstructor import Deconstructor
from engines.evaluation import reconstruction_error, render_reference
from engines.haar_approx import haar_approx
from engines.render_config import RenderConfig
from engines.toolbox import default_toolbox
from errors import BadParamsError, NotPowerOfTwoError, SignalIOError, SquareSynthError, TooFewSamplesError
from fileio.decomposition_file import read_decomposition, write_decomposition
from fileio.signal_files import read_signal, write_signal
from fileio.spectrum_file import decomposition_table, spectrum_table, trace_table, write_table
from generators import multiharmonic, parse_components, random_components, sine_wave, square_wave
from reports.figures import spectrum_figure, trace_figure, waveform_figure, write_figures
from reports.stats_report import stats_report, stats_table
from reports.summary_report import (analyze_summary_template, compare_haar_template, format_trace,
                                    roundtrip_summary_template)
from spectrum.frame import SampledFrame
from spectrum.polar import spectrum_norm
from spectrum.transform import analyze_frame

ENGINES = default_toolbox()


class ArgumentParser(argparse.ArgumentParser):
    """Usage errors exit with 1; exit code 2 belongs to failed claim checks."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_period_option(parser, default=settings.PERIOD_SAMPLES, help="samples per period L (even)"):
    parser.add_argument("--period-samples", type=int, default=default, help=help)


def _add_basis_options(parser, choices=("square", "sine", "triangle", "file")):
    parser.add_argument("--basis", choices=choices, default="square")
    parser.add_argument("--basis-file", help="one period of the basis function (.wav or .csv), for --basis file")
    parser.add_argument("--square-model", choices=["grid", "analytic"], default="grid",
                        help="exact spectrum of the sampled square (grid) or the band-limited series (analytic)")
    parser.add_argument("--terms", type=int, default=None, help="number of terms N (default: every harmonic)")
    parser.add_argument("--eps", type=float, default=0.0, help="stop once the residual norm is <= eps")
    parser.add_argument("--strict", action="store_true", help="refuse bases with margin <= 0")
    parser.add_argument("--time-domain", action="store_true", help="use the re-analysis loop (slower)")


def _add_render_options(parser, oversample=None, cutoff=None):
    parser.add_argument("--engine", choices=ENGINES.names(), default="naive")
    parser.add_argument("--oversample", type=int, default=settings.OVERSAMPLE if oversample is None else oversample)
    parser.add_argument("--cutoff", type=float, default=settings.FILTER_CUTOFF if cutoff is None else cutoff,
                        help="RC low-pass cutoff in harmonics (default: no filter)")
    parser.add_argument("--periods", type=int, default=1)
    parser.add_argument("--decimate", action="store_true", help="keep every oversample-th sample after filtering")
    parser.add_argument("--lut-size", type=int, default=settings.LUT_SIZE)
    parser.add_argument("--interpolation", choices=["linear", "nearest"], default="linear")


def build_basis(args, length: int):
    harmonics = length // 2 - 1
    if args.basis == "square":
        grid = length if args.square_model == "grid" else None
        return make_square(harmonics, grid=grid)
    if args.basis == "sine":
        return make_sine()
    if args.basis == "triangle":
        return make_triangle(harmonics)
    if not args.basis_file:
        raise BadParamsError("--basis file needs --basis-file.")
    return make_from_samples(SampledFrame(read_signal(args.basis_file)), name=Path(args.basis_file).stem)


def load_frame(path, length: int) -> SampledFrame:
    samples = read_signal(path)
    if samples.size < length:
        raise TooFewSamplesError(f"{path} has {samples.size} samples, one period needs {length}.")
    return SampledFrame(samples[:length])


def decomposition_period(decomp, requested: Optional[int]) -> int:
    """Samples per period for rendering: a "square@L" decomposition fixes L, others use the request."""
    model_grid = square_grid(decomp.basis_name) if is_square_name(decomp.basis_name) else None
    if model_grid is None:
        return settings.PERIOD_SAMPLES if requested is None else requested
    if requested is not None and requested != model_grid:
        raise BadParamsError(
            f"Decomposition was made on {model_grid} samples per period (basis '{decomp.basis_name}'), "
            f"got --period-samples {requested}; use --oversample for a finer render grid."
        )
    return model_grid


def render_config(args) -> RenderConfig:
    return RenderConfig(
        samples_per_period=args.period_samples,
        periods=args.periods,
        oversample=args.oversample,
        filter_cutoff=args.cutoff,
        decimate=args.decimate,
    )


def _render(args, decomp, cfg):
    return ENGINES.render(args.engine, decomp, cfg, args.lut_size, args.interpolation)


def _sibling(path, suffix: str) -> Path:
    path = Path(path)
    return path.with_name(f"{path.stem}{suffix}")


def _write_plot(path, figures):
    try:
        write_figures(path, figures)
    except OSError as exc:
        raise SignalIOError(f"Failed to write {path} ({exc})") from exc
    console.success(f"Plot written to {path}")


def cmd_gen(args) -> int:
    length = args.period_samples
    if args.shape == "sine":
        samples = sine_wave(length, args.periods, amplitude=settings.WAV_PEAK)
    elif args.shape == "square":
        samples = square_wave(length, args.periods, amplitude=settings.WAV_PEAK)
    elif args.shape == "multiharmonic":
        components = parse_components(args.components) or random_components(np.random.default_rng(args.seed))
        samples = multiharmonic(length, components, args.periods)
    else:
        if not args.input:
            raise BadParamsError("gen file needs --input.")
        samples = read_signal(args.input)

    scale = write_signal(args.output, samples, args.sample_rate)
    scale_text = "" if scale is None else f" (scale {scale:.6g})"
    console.success(f"Wrote {samples.size} samples to {args.output}{scale_text}")
    return 0


def cmd_analyze(args) -> int:
    frame = load_frame(args.input, args.period_samples)
    basis = build_basis(args, args.period_samples)
    deconstructor = Deconstructor(basis, args.terms, args.eps, args.strict, args.time_domain)
    spec, decomp = deconstructor.analyze(frame)

    write_decomposition(args.output, decomp)
    spectrum_out = args.spectrum_out or _sibling(args.output, "_spectrum.csv")
    write_table(spectrum_out, decomposition_table(decomp))
    if args.trace_out:
        write_table(args.trace_out, trace_table(decomp.residual_trace))
    if args.input_spectrum_out:
        write_table(args.input_spectrum_out, spectrum_table(spec))

    console.headline(f"Deconstructed {args.input} into {len(decomp.terms)} terms")
    console.info(analyze_summary_template.format(
        basis=decomp.basis_name,
        margin=decomp.margin,
        admissibility="admissible" if decomp.margin > 0 else "not admissible",
        terms=len(decomp.terms),
        nonzero=len(decomp.nonzero_terms),
        converged=decomp.converged,
        eps=decomp.rms_eps,
        initial=decomp.residual_trace[0],
        final=decomp.final_residual,
        monotone=decomp.monotone,
    ).strip())
    console.success(f"Decomposition written to {args.output}, spectrum to {spectrum_out}")
    if args.plot:
        _write_plot(args.plot, [spectrum_figure(decomp), trace_figure(decomp.residual_trace)])
    return 0


def cmd_synth(args) -> int:
    decomp = read_decomposition(args.input)
    args.period_samples = decomposition_period(decomp, args.period_samples)
    cfg = render_config(args)
    samples, stats = _render(args, decomp, cfg)
    scale = write_signal(args.output, samples, args.sample_rate)

    report = stats_report(args.engine, stats, scale)
    stats_out = _sibling(args.output, "_stats.txt")
    try:
        stats_out.write_text(report + "\n", encoding="utf-8")
    except OSError as exc:
        raise SignalIOError(f"Failed to write {stats_out} ({exc})") from exc
    console.info(report)
    console.success(f"Rendered {samples.size} samples to {args.output}")
    return 0


def cmd_roundtrip(args) -> int:
    frame = load_frame(args.input, args.period_samples)
    basis = build_basis(args, args.period_samples)
    deconstructor = Deconstructor(basis, args.terms, args.eps, args.strict, args.time_domain)
    spec, decomp = deconstructor.analyze(frame)

    cfg = render_config(args)
    signal_norm = decomp.residual_trace[0]
    rendered = None
    if is_square_name(decomp.basis_name):
        rms = reconstruction_error(decomp, spec, cfg, lambda d, c: _render(args, d, c))
        compared = f"{args.engine} render vs exact synthesis, last period of {cfg.total_samples} samples"
        rendered, _ = _render(args, decomp, cfg)
        if args.output:
            write_signal(args.output, rendered, args.sample_rate)
    else:
        rms = spectrum_norm(deconstructor.residual(spec, decomp))
        compared = f"spectra (basis '{decomp.basis_name}' has no square engine)"

    trace_out = args.trace_out or _sibling(args.input, "_trace.csv")
    write_table(trace_out, trace_table(decomp.residual_trace))
    console.info(roundtrip_summary_template.format(
        trace=format_trace(decomp.residual_trace),
        final_residual=decomp.final_residual,
        rms=rms,
        relative=rms / signal_norm if signal_norm > 0 else 0.0,
        signal_norm=signal_norm,
        compared=compared,
    ).strip())
    console.success(f"Residual trace written to {trace_out}")
    if args.plot:
        figures = [trace_figure(decomp.residual_trace), spectrum_figure(decomp)]
        if rendered is not None:
            figures.insert(0, waveform_figure(render_reference(spec, cfg), rendered))
        _write_plot(args.plot, figures)
    return 0


def cmd_compare_haar(args) -> int:
    length = args.period_samples
    if length & (length - 1):
        raise NotPowerOfTwoError(f"Haar comparison needs a power-of-two period, got {length}.")
    if args.signal == "sine":
        samples = sine_wave(length)
    elif args.signal == "square":
        samples = square_wave(length)
    else:
        samples = multiharmonic(length, random_components(np.random.default_rng(args.seed)))
    frame = SampledFrame(samples)
    spec = analyze_frame(frame)

    args.basis = "square"
    basis = build_basis(args, length)
    square_n = min(args.square_n, spec.harmonics)
    decomp = Deconstructor(basis, square_n).analyze(frame)[1]
    cfg = RenderConfig(length, periods=args.periods, oversample=args.oversample, filter_cutoff=args.cutoff)
    square_rms = reconstruction_error(decomp, spec, cfg)
    _, haar_rms = haar_approx(frame, args.haar_n)

    square_wins = square_rms < haar_rms
    console.info(compare_haar_template.format(
        signal=args.signal, length=length, square_n=args.square_n, square_rms=square_rms,
        cutoff=args.cutoff or 0.0, oversample=args.oversample, haar_n=args.haar_n, haar_rms=haar_rms,
        winner="square waves" if square_wins else "Haar wavelets",
    ).strip())
    if square_wins:
        console.success("Square-wave reconstruction beats the Haar approximation.")
        return 0
    console.warn("Haar approximation is at least as good as the square-wave reconstruction.")
    return 2


def cmd_stats(args) -> int:
    decomp = read_decomposition(args.input)
    args.period_samples = decomposition_period(decomp, args.period_samples)
    cfg = render_config(args)
    stats_by_engine = {}
    for name in ENGINES.names():
        _, stats_by_engine[name] = ENGINES.render(name, decomp, cfg, args.lut_size, args.interpolation)
    table = stats_table(stats_by_engine)
    console.headline(f"Operation counts for {args.input} ({cfg.total_samples} samples)")
    console.info(table.to_string())
    if args.csv_out:
        write_table(args.csv_out, table.reset_index())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = ArgumentParser(prog="squaresynth",
                            description="Deconstruct periodic signals into square waves and render them back.")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="write a test signal")
    gen.add_argument("shape", choices=["sine", "square", "multiharmonic", "file"])
    gen.add_argument("-o", "--output", required=True, help=".wav or .csv")
    gen.add_argument("--periods", type=int, default=1)
    gen.add_argument("--components", help="k:m:theta,... for multiharmonic (default: random from --seed)")
    gen.add_argument("--seed", type=int, default=settings.SEED)
    gen.add_argument("--input", help="source signal for the file shape")
    gen.add_argument("--sample-rate", type=int, default=settings.SAMPLE_RATE)
    _add_period_option(gen)
    gen.set_defaults(handler=cmd_gen)

    analyze = commands.add_parser("analyze", help="deconstruct one period of a signal")
    analyze.add_argument("input")
    analyze.add_argument("-o", "--output", required=True, help="decomposition JSON")
    analyze.add_argument("--spectrum-out", help="k,M,Theta CSV (default: <output>_spectrum.csv)")
    analyze.add_argument("--input-spectrum-out", help="k,M,Theta CSV of the input signal's own polar spectrum")
    analyze.add_argument("--trace-out", help="residual trace CSV")
    analyze.add_argument("--plot", help="HTML page with the spectrum and the residual trace")
    _add_period_option(analyze)
    _add_basis_options(analyze)
    analyze.set_defaults(handler=cmd_analyze)

    synth = commands.add_parser("synth", help="render a decomposition to a signal file")
    synth.add_argument("input", help="decomposition JSON")
    synth.add_argument("-o", "--output", required=True)
    synth.add_argument("--sample-rate", type=int, default=settings.SAMPLE_RATE)
    _add_period_option(synth, None, "samples per period L (default: the L of a square@L decomposition)")
    _add_render_options(synth)
    synth.set_defaults(handler=cmd_synth)

    roundtrip = commands.add_parser("roundtrip", help="analyze, render and compare")
    roundtrip.add_argument("input")
    roundtrip.add_argument("-o", "--output", help="optional rendered signal file")
    roundtrip.add_argument("--trace-out", help="residual trace CSV (default: <input>_trace.csv)")
    roundtrip.add_argument("--plot", help="HTML page with waveforms, trace and spectrum")
    roundtrip.add_argument("--sample-rate", type=int, default=settings.SAMPLE_RATE)
    _add_period_option(roundtrip)
    _add_basis_options(roundtrip)
    _add_render_options(roundtrip)
    roundtrip.set_defaults(handler=cmd_roundtrip)

    compare = commands.add_parser("compare-haar", help="square waves against Haar wavelets")
    compare.add_argument("--signal", choices=["sine", "square", "multiharmonic"], default="sine")
    compare.add_argument("--haar-n", type=int, default=32)
    compare.add_argument("--square-n", type=int, default=21)
    compare.add_argument("--square-model", choices=["grid", "analytic"], default="grid")
    compare.add_argument("--oversample", type=int, default=4)
    compare.add_argument("--cutoff", type=float, default=12.0)
    compare.add_argument("--periods", type=int, default=1)
    compare.add_argument("--seed", type=int, default=settings.SEED)
    _add_period_option(compare)
    compare.set_defaults(handler=cmd_compare_haar)

    stats = commands.add_parser("stats", help="operation counts of every engine")
    stats.add_argument("input", help="decomposition JSON")
    stats.add_argument("--csv-out", help="write the table as CSV")
    _add_period_option(stats, None, "samples per period L (default: the L of a square@L decomposition)")
    _add_render_options(stats)
    stats.set_defaults(handler=cmd_stats)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    try:
        return args.handler(args)
    except SquareSynthError as exc:
        console.error(str(exc))
        return exc.exit_code


if __name__ == "__main__":
    sys.exit(main())
