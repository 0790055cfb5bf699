from dataclasses import asdict, dataclass
from typing import Optional

from errors import BadParamsError, OddLengthError


@dataclass(frozen=True)
class RenderConfig:
    """
    How to render a decomposition or a spectrum.

    Parameters:
    samples_per_period (int): L, even.
    periods (int): number of periods in the output, >= 1.
    oversample (int): render at L*oversample samples per period.
    filter_cutoff (float | None): RC low-pass cutoff in cycles per period (harmonic units).
    decimate (bool): after filtering keep every oversample-th sample.
    """
    samples_per_period: int
    periods: int = 1
    oversample: int = 1
    filter_cutoff: Optional[float] = None
    decimate: bool = False

    def __post_init__(self):
        if self.samples_per_period < 4 or self.samples_per_period % 2:
            raise OddLengthError(f"Samples per period must be even and >= 4, got {self.samples_per_period}.")
        if self.periods < 1:
            raise BadParamsError(f"Periods must be >= 1, got {self.periods}.")
        if self.oversample < 1:
            raise BadParamsError(f"Oversample factor must be >= 1, got {self.oversample}.")
        if self.filter_cutoff is not None and not self.filter_cutoff > 0.0:
            raise BadParamsError(f"Filter cutoff must be > 0, got {self.filter_cutoff}.")

    @property
    def grid(self) -> int:
        """Samples per period on the render grid."""
        return self.samples_per_period * self.oversample

    @property
    def total_samples(self) -> int:
        return self.grid * self.periods


@dataclass
class EngineStats:
    adds: int = 0
    multiplies: int = 0
    table_reads: int = 0
    sign_flips: int = 0
    samples_rendered: int = 0

    @property
    def adds_per_sample(self) -> float:
        return self.adds / self.samples_rendered if self.samples_rendered else 0.0

    def as_dict(self) -> dict:
        row = asdict(self)
        row["adds_per_sample"] = self.adds_per_sample
        return row
