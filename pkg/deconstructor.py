import cmath
import math
from dataclasses import dataclass
from typing import Callable, List, Mapping, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

import console
from bases.basis_function import BasisFunction, EvalMode, eval_basis
from errors import BadParamsError, NonadmissibleBasisError, NonadmissibleFundamentalError
from spectrum.frame import SampledFrame, norm
from spectrum.polar import PolarSpectrum, wrap_phase
from spectrum.transform import analyze_frame

ZERO_TOL = 1e-12
MONOTONE_SLACK = 1e-12


class Term(NamedTuple):
    n: int
    module: float
    phase: float


@dataclass(frozen=True)
class Decomposition:
    """
    C0 plus the terms M_n * S(n*x + Theta_n), n = 1..N in order, and the residual norm after each step.

    residual_trace[0] is the norm of the centered input; residual_trace[j] the norm after j terms.
    """
    c0: float
    basis_name: str
    terms: Tuple[Term, ...]
    residual_trace: Tuple[float, ...]
    converged: bool
    rms_eps: float = 0.0
    margin: float = math.nan
    monotone: bool = True

    @property
    def final_residual(self) -> float:
        return self.residual_trace[-1] if self.residual_trace else math.nan

    @property
    def nonzero_terms(self) -> Tuple[Term, ...]:
        return tuple(term for term in self.terms if term.module > 0.0)


def _residual_norm(bins: np.ndarray) -> float:
    return math.sqrt(0.5 * float(np.sum(np.abs(bins) ** 2)))


def is_monotone(trace: Sequence[float]) -> bool:
    slack = MONOTONE_SLACK * max(1.0, trace[0]) if trace else 0.0
    return all(later <= earlier + slack for earlier, later in zip(trace, trace[1:]))


def _check_basis(basis: BasisFunction, strict: bool):
    if basis.fundamental <= ZERO_TOL:
        raise NonadmissibleFundamentalError(
            f"Basis '{basis.name}' has no fundamental (s_1 = {basis.fundamental:.3g}); "
            "the first frequency cannot be matched."
        )
    if not basis.admissible:
        message = (f"Basis '{basis.name}' has margin {basis.margin:.6g} <= 0; "
                   "convergence of the residual is not guaranteed.")
        if strict:
            raise NonadmissibleBasisError(message)
        console.warn(message)


def _solve(bin_value: complex, fundamental: float, fundamental_phase: float) -> Tuple[float, float]:
    magnitude = abs(bin_value)
    if magnitude <= ZERO_TOL:
        return 0.0, 0.0
    return magnitude / fundamental, wrap_phase(cmath.phase(bin_value) - fundamental_phase)


def _terms_limit(max_terms: Optional[int], harmonics: int) -> int:
    limit = harmonics if max_terms is None else int(max_terms)
    if limit < 0 or limit > harmonics:
        raise BadParamsError(f"Term count must lie in 0..{harmonics}, got {max_terms}.")
    return limit


def _finish(c0, basis, terms, trace, rms_eps) -> Decomposition:
    monotone = is_monotone(trace)
    if not monotone and basis.admissible:
        rises = [j + 1 for j, (a, b) in enumerate(zip(trace, trace[1:])) if b > a + MONOTONE_SLACK * max(1.0, trace[0])]
        console.warn(f"Residual norm rose at step(s) {rises[:10]} with basis '{basis.name}'.")
    return Decomposition(
        c0=float(c0),
        basis_name=basis.name,
        terms=tuple(terms),
        residual_trace=tuple(float(value) for value in trace),
        converged=trace[-1] <= rms_eps,
        rms_eps=float(rms_eps),
        margin=basis.margin,
        monotone=monotone,
    )


def deconstruct(spec: PolarSpectrum, basis: BasisFunction, max_terms: Optional[int] = None,
                rms_eps: float = 0.0, strict: bool = False) -> Decomposition:
    """
    Greedy frequency-by-frequency extraction of (M_n, Theta_n), entirely in the frequency domain.

    For n = 1..N the residual bin r_n = m_n*exp(i*theta_n) gives M_n = m_n/s_1 and
    Theta_n = theta_n - phi_1; then the whole comb of M_n*S(n*x + Theta_n) is removed from bins p*n <= K.
    Harmonics above K are dropped, not aliased.

    Parameters:
    spec (PolarSpectrum): the signal, K harmonics.
    basis (BasisFunction): needs s_1 > 0.
    max_terms (int | None): N, defaults to K.
    rms_eps (float): stop as soon as the residual norm is <= rms_eps (0 disables the stop rule).
    strict (bool): refuse bases with margin <= 0 instead of warning.

    Returns:
    Decomposition
    """
    harmonics = spec.harmonics
    limit = _terms_limit(max_terms, harmonics)
    _check_basis(basis, strict)

    residual = np.array(spec.complex_bins(), dtype=complex)
    comb = basis.harmonic_comb(harmonics)
    fundamental = basis.fundamental
    fundamental_phase = float(basis.spectrum.phases[0])

    trace = [_residual_norm(residual)]
    terms: List[Term] = []
    for n in range(1, limit + 1):
        module, phase = _solve(residual[n - 1], fundamental, fundamental_phase)
        terms.append(Term(n, module, phase))
        if module > 0.0:
            p = np.arange(1, harmonics // n + 1)
            residual[p * n - 1] -= module * comb[p - 1] * np.exp(1j * p * phase)
        trace.append(_residual_norm(residual))
        if rms_eps > 0.0 and trace[-1] <= rms_eps:
            break

    return _finish(spec.c0, basis, terms, trace, rms_eps)


def deconstruct_time_domain(frame: SampledFrame, basis: BasisFunction, max_terms: Optional[int] = None,
                            rms_eps: float = 0.0, strict: bool = False) -> Decomposition:
    """
    The literal analysis-reconstruction-analysis loop: re-analyze the time-domain residual at every step
    and subtract M_n*S(n*x + Theta_n) evaluated from the basis series. Slower, same result as deconstruct.
    """
    spec = analyze_frame(frame)
    length = frame.length
    limit = _terms_limit(max_terms, spec.harmonics)
    _check_basis(basis, strict)

    fundamental = basis.fundamental
    fundamental_phase = float(basis.spectrum.phases[0])
    residual = frame.samples - spec.c0
    trace = [norm(SampledFrame(residual))]
    terms: List[Term] = []
    for n in range(1, limit + 1):
        bins = analyze_frame(SampledFrame(residual), strict_nyquist=False).complex_bins()
        module, phase = _solve(bins[n - 1], fundamental, fundamental_phase)
        terms.append(Term(n, module, phase))
        if module > 0.0:
            residual = residual - module * eval_basis(basis, n, phase, length, EvalMode.SERIES).samples
        trace.append(norm(SampledFrame(residual)))
        if rms_eps > 0.0 and trace[-1] <= rms_eps:
            break

    return _finish(spec.c0, basis, terms, trace, rms_eps)


def reconstruct_spectrum(decomp: Decomposition, basis: BasisFunction, harmonics: int) -> PolarSpectrum:
    """Polar spectrum of C0 + sum_n M_n*S(n*x + Theta_n), band-limited to `harmonics` bins."""
    comb = basis.harmonic_comb(harmonics)
    bins = np.zeros(harmonics, dtype=complex)
    for term in decomp.terms:
        if term.module <= 0.0 or term.n > harmonics:
            continue
        p = np.arange(1, harmonics // term.n + 1)
        bins[p * term.n - 1] += term.module * comb[p - 1] * np.exp(1j * p * term.phase)
    return PolarSpectrum.from_complex(decomp.c0, bins)


def residual_of(spec: PolarSpectrum, decomp: Decomposition, basis: BasisFunction) -> PolarSpectrum:
    """Bin-wise spec - reconstruction; its norm is the last residual_trace entry."""
    reconstruction = reconstruct_spectrum(decomp, basis, spec.harmonics)
    return PolarSpectrum.from_complex(spec.c0 - reconstruction.c0,
                                      spec.complex_bins() - reconstruction.complex_bins())


def edit_spectrum(decomp: Decomposition, gains: Union[Callable[[int], float], Mapping[int, float]]) -> Decomposition:
    """
    Scale each module M_n by a non-negative gain ("generic filtering" of the square-wave spectrum).

    The edited decomposition no longer describes a residual, so its trace is empty.
    """
    gain_of = gains if callable(gains) else (lambda n: gains.get(n, 1.0))
    terms = []
    for term in decomp.terms:
        gain = float(gain_of(term.n))
        if gain < 0.0 or not math.isfinite(gain):
            raise BadParamsError(f"Gain for n={term.n} must be a finite non-negative number, got {gain}.")
        module = term.module * gain
        terms.append(Term(term.n, module, term.phase if module > 0.0 else 0.0))
    return Decomposition(
        c0=decomp.c0,
        basis_name=decomp.basis_name,
        terms=tuple(terms),
        residual_trace=(),
        converged=False,
        rms_eps=decomp.rms_eps,
        margin=decomp.margin,
        monotone=decomp.monotone,
    )


class Deconstructor:
    def __init__(self, basis: BasisFunction, max_terms: Optional[int] = None, rms_eps: float = 0.0,
                 strict: bool = False, time_domain: bool = False):
        """
        Analysis front end bound to one basis and one set of options.

        Parameters:
        basis (BasisFunction): the function S(x) to deconstruct into.
        max_terms (int | None): N, defaults to every harmonic of the frame.
        rms_eps (float): optional residual stop threshold.
        strict (bool): refuse non-admissible bases.
        time_domain (bool): use the slower re-analysis loop instead of the spectral algorithm.
        """
        self.basis = basis
        self.max_terms = max_terms
        self.rms_eps = rms_eps
        self.strict = strict
        self.time_domain = time_domain

    def analyze(self, frame: SampledFrame) -> Tuple[PolarSpectrum, Decomposition]:
        spec = analyze_frame(frame)
        max_terms = None if self.max_terms is None else min(self.max_terms, spec.harmonics)
        if self.time_domain:
            decomp = deconstruct_time_domain(frame, self.basis, max_terms, self.rms_eps, self.strict)
        else:
            decomp = deconstruct(spec, self.basis, max_terms, self.rms_eps, self.strict)
        return spec, decomp

    def reconstruct(self, decomp: Decomposition, harmonics: int) -> PolarSpectrum:
        return reconstruct_spectrum(decomp, self.basis, harmonics)

    def residual(self, spec: PolarSpectrum, decomp: Decomposition) -> PolarSpectrum:
        return residual_of(spec, decomp, self.basis)
