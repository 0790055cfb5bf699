from typing import Optional

import gradio as gr
import numpy as np

import settings
from bases.sine import make_sine
from bases.square import make_square
from bases.triangle import make_triangle
from deconstructor import Deconstructor, edit_spectrum
from engines.evaluation import render_reference
from engines.render_config import RenderConfig
from engines.toolbox import default_toolbox
from errors import SquareSynthError
from fileio.spectrum_file import decomposition_table
from generators import multiharmonic, random_components, sine_wave, square_wave
from reports.figures import spectrum_figure, trace_figure, waveform_figure
from reports.stats_report import stats_table
from spectrum.frame import SampledFrame

ENGINES = default_toolbox()

SIGNALS = ["sine", "square", "multiharmonic"]
BASES = ["square (grid)", "square (analytic)", "triangle", "sine"]


def make_signal(signal: str, length: int, seed: int) -> np.ndarray:
    if signal == "sine":
        return sine_wave(length)
    if signal == "square":
        return square_wave(length)
    return multiharmonic(length, random_components(np.random.default_rng(seed)))


def make_basis(choice: str, length: int):
    harmonics = length // 2 - 1
    if choice == "square (grid)":
        return make_square(harmonics, grid=length)
    if choice == "square (analytic)":
        return make_square(harmonics)
    if choice == "triangle":
        return make_triangle(harmonics)
    return make_sine()


def tilt_gains(tilt: float):
    """Spectrum edit: M_n scaled by n**tilt (0 leaves the decomposition unchanged)."""
    return lambda n: float(n) ** tilt


def run_deconstruction(signal: str, basis_choice: str, length: int, terms: int, oversample: int,
                       cutoff: Optional[float], tilt: float, engine: str, seed: int):
    length = int(length)
    try:
        frame = SampledFrame(make_signal(signal, length, int(seed)))
        deconstructor = Deconstructor(make_basis(basis_choice, length), min(int(terms), length // 2 - 1))
        spec, decomp = deconstructor.analyze(frame)
        cfg = RenderConfig(length, oversample=int(oversample), filter_cutoff=cutoff or None)
        summary = (f"Margin {decomp.margin:.6g}, {len(decomp.nonzero_terms)} nonzero terms, "
                   f"final residual {decomp.final_residual:.6g}, monotone trace: {decomp.monotone}")

        edited = edit_spectrum(decomp, tilt_gains(tilt)) if tilt else decomp
        if not basis_choice.startswith("square"):
            return summary + "\nRendering needs a square basis.", decomposition_table(edited), \
                spectrum_figure(edited), trace_figure(decomp.residual_trace), None, None

        rendered, _ = ENGINES.render(engine, edited, cfg)
        stats = {name: ENGINES.render(name, edited, cfg)[1] for name in ENGINES.names()}
        waveform = waveform_figure(render_reference(spec, cfg), rendered)
        return summary, decomposition_table(edited), spectrum_figure(edited), \
            trace_figure(decomp.residual_trace), waveform, stats_table(stats).reset_index()
    except SquareSynthError as exc:
        return f"Error: {exc}", None, None, None, None, None


with gr.Blocks(title="Square-wave deconstruction") as demo:
    gr.Markdown("""
    # Square-wave deconstruction
    Deconstruct one period of a test signal into scaled, phase-shifted, frequency-multiplied copies of a basis
    function, then render it back with the square-wave engines. Results are presented as:
    - Summary text (admissibility margin, residual)
    - Table of terms (n, M, Theta)
    - Square-wave spectrum and residual trace charts
    - Original vs reconstruction, and engine operation counts
    """)

    with gr.Row():
        signal = gr.Dropdown(label="Signal", choices=SIGNALS, value="sine")
        basis_choice = gr.Dropdown(label="Basis", choices=BASES, value=BASES[0])
        engine = gr.Dropdown(label="Engine", choices=ENGINES.names(), value="naive")
        submit = gr.Button("Run", variant="primary")

    with gr.Row():
        length = gr.Number(label="Samples per period", value=settings.PERIOD_SAMPLES, precision=0)
        terms = gr.Slider(label="Terms N", minimum=0, maximum=200, step=1, value=21)
        oversample = gr.Slider(label="Oversample", minimum=1, maximum=8, step=1, value=4)
        cutoff = gr.Number(label="RC cutoff (harmonics, 0 = off)", value=12)
        tilt = gr.Slider(label="Spectrum tilt (M_n * n^tilt)", minimum=-2.0, maximum=2.0, step=0.1, value=0.0)
        seed = gr.Number(label="Seed", value=settings.SEED, precision=0)

    summary = gr.Textbox(label="Summary", lines=3)
    table = gr.Dataframe(label="Terms", interactive=False)
    with gr.Row():
        spectrum_chart = gr.Plot(label="Square-wave spectrum")
        trace_chart = gr.Plot(label="Residual trace")
    waveform_chart = gr.Plot(label="Waveforms")
    stats = gr.Dataframe(label="Engine operation counts", interactive=False)

    with gr.Accordion("Engines", open=False):
        gr.Markdown(value=f"````\n{ENGINES.output_engines()}\n````")

    submit.click(
        run_deconstruction,
        inputs=[signal, basis_choice, length, terms, oversample, cutoff, tilt, engine, seed],
        outputs=[summary, table, spectrum_chart, trace_chart, waveform_chart, stats],
    )

if __name__ == "__main__":
    demo.launch()
