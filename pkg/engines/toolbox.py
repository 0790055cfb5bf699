from typing import Callable, Dict, Optional, Tuple

import numpy as np

from bases.square import square_from_name
from deconstructor import Decomposition, reconstruct_spectrum
from engines.differential_engine import render_differential
from engines.fourier_engine import render_fourier
from engines.naive_engine import render_naive
from engines.render_config import EngineStats, RenderConfig
from errors import BadParamsError
from spectrum.polar import PolarSpectrum


class Toolbox:
    def __init__(self):
        self.toolbox = {}

    def store_engines(self, engines: Dict[str, Callable]):
        """
        Stores each render function under its engine name.

        Parameters:
        engines (dict): engine name -> render function.

        Returns:
        dict: engine names as keys and the first line of their docstrings as values.
        """
        self.toolbox.update(engines)
        return {name: _summary(func) for name, func in self.toolbox.items()}

    def output_engines(self):
        """
        Returns the stored engines as a text listing, one per line.
        """
        engines_str = ""
        for name, func in self.toolbox.items():
            engines_str += f"{name}: \"{_summary(func)}\"\n"
        return engines_str.strip()

    def names(self):
        return list(self.toolbox)

    def get(self, name: str) -> Callable:
        if name not in self.toolbox:
            raise BadParamsError(f"Unknown engine '{name}'; choose one of {', '.join(self.toolbox)}.")
        return self.toolbox[name]

    def render(self, name: str, decomp: Decomposition, cfg: RenderConfig, lut_size: Optional[int] = None,
               interpolation: str = "linear") -> Tuple[np.ndarray, EngineStats]:
        """
        Renders a square-wave decomposition with the named engine.

        The Fourier engine gets the band-limited spectrum of the decomposition instead.
        """
        engine = self.get(name)
        if engine is render_fourier:
            return engine(decomposition_spectrum(decomp, cfg.grid // 2 - 1), cfg, lut_size, interpolation)
        return engine(decomp, cfg)


def _summary(func: Callable) -> str:
    return (func.__doc__ or "").strip().splitlines()[0] if func.__doc__ else ""


def decomposition_spectrum(decomp: Decomposition, harmonics: int) -> PolarSpectrum:
    """Spectrum of a square-wave decomposition up to `harmonics`, using the basis named in it."""
    return reconstruct_spectrum(decomp, square_from_name(decomp.basis_name, harmonics), harmonics)


def default_toolbox() -> Toolbox:
    toolbox = Toolbox()
    toolbox.store_engines({
        "naive": render_naive,
        "diff": render_differential,
        "fourier": render_fourier,
    })
    return toolbox
