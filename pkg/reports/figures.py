import numpy as np
import pandas as pd
import plotly.express as px

from deconstructor import Decomposition


def spectrum_figure(decomp: Decomposition):
    """Bar chart of the square-wave spectrum M_n."""
    table = pd.DataFrame({"n": [term.n for term in decomp.terms], "M": [term.module for term in decomp.terms]})
    return px.bar(table, x="n", y="M", title=f"Spectrum in basis '{decomp.basis_name}'")


def trace_figure(trace):
    table = pd.DataFrame({"step": np.arange(len(trace)), "residual": np.asarray(trace, dtype=float)})
    figure = px.line(table, x="step", y="residual", markers=True, title="Residual norm after each term")
    figure.update_yaxes(type="log")
    return figure


def waveform_figure(original, reconstruction, title: str = "Original vs reconstruction"):
    count = max(len(original), len(reconstruction))
    table = pd.DataFrame({
        "sample": np.concatenate([np.arange(len(original)), np.arange(len(reconstruction))]),
        "value": np.concatenate([np.asarray(original, dtype=float), np.asarray(reconstruction, dtype=float)]),
        "signal": ["original"] * len(original) + ["reconstruction"] * len(reconstruction),
    })
    figure = px.line(table, x="sample", y="value", color="signal", title=title)
    figure.update_xaxes(range=[0, count - 1])
    return figure


def write_figures(path, figures):
    """Write several plotly figures into one standalone HTML page."""
    parts = [figure.to_html(full_html=False, include_plotlyjs="cdn" if index == 0 else False)
             for index, figure in enumerate(figures)]
    with open(path, "w", encoding="utf-8") as handle:
        handle.write("<html><head><meta charset=\"utf-8\"></head><body>\n")
        handle.write("\n".join(parts))
        handle.write("\n</body></html>\n")
