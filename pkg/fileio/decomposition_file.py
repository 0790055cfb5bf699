import json
import math
from pathlib import Path

from deconstructor import Decomposition, Term, is_monotone
from errors import FileFormatError, SignalIOError

FORMAT_VERSION = 1


def dumps_decomposition(decomp: Decomposition) -> str:
    """JSON text of a decomposition. Floats use repr, so write -> read -> write is byte-identical."""
    document = {
        "format_version": FORMAT_VERSION,
        "basis": decomp.basis_name,
        "c0": decomp.c0,
        "eps": decomp.rms_eps,
        "terms": [[term.n, term.module, term.phase] for term in decomp.terms],
        "trace": list(decomp.residual_trace),
    }
    return json.dumps(document, indent=2) + "\n"


def loads_decomposition(text: str, source: str = "<string>") -> Decomposition:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{source}: not valid JSON ({exc})") from exc
    if not isinstance(document, dict):
        raise FileFormatError(f"{source}: expected a JSON object.")
    missing = {"format_version", "basis", "c0", "eps", "terms", "trace"} - set(document)
    if missing:
        raise FileFormatError(f"{source}: missing field(s) {sorted(missing)}.")
    if document["format_version"] != FORMAT_VERSION:
        raise FileFormatError(f"{source}: unsupported format_version {document['format_version']!r}.")
    if not isinstance(document["basis"], str):
        raise FileFormatError(f"{source}: basis must be a string.")

    c0 = _real(document["c0"], "c0", source)
    eps = _real(document["eps"], "eps", source)
    terms = []
    for position, entry in enumerate(document["terms"], start=1):
        if not isinstance(entry, list) or len(entry) != 3:
            raise FileFormatError(f"{source}: term {position} must be [n, M, Theta].")
        n, module, phase = entry
        if not isinstance(n, int) or isinstance(n, bool) or n != position:
            raise FileFormatError(f"{source}: terms must be numbered 1, 2, ... in order; found {n!r} at {position}.")
        module = _real(module, f"M_{n}", source)
        phase = _real(phase, f"Theta_{n}", source)
        if module < 0.0:
            raise FileFormatError(f"{source}: M_{n} is negative.")
        if not -math.pi < phase <= math.pi:
            raise FileFormatError(f"{source}: Theta_{n}={phase} is outside (-pi, pi].")
        terms.append(Term(n, module, phase))
    if not isinstance(document["trace"], list):
        raise FileFormatError(f"{source}: trace must be an array.")
    trace = tuple(_real(value, "trace", source) for value in document["trace"])

    return Decomposition(
        c0=c0,
        basis_name=document["basis"],
        terms=tuple(terms),
        residual_trace=trace,
        converged=bool(trace) and trace[-1] <= eps,
        rms_eps=eps,
        monotone=is_monotone(trace),
    )


def write_decomposition(path, decomp: Decomposition):
    try:
        Path(path).write_text(dumps_decomposition(decomp), encoding="utf-8")
    except OSError as exc:
        raise SignalIOError(f"Failed to write {path} ({exc})") from exc


def read_decomposition(path) -> Decomposition:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise SignalIOError(f"Failed to read {path} ({exc})") from exc
    return loads_decomposition(text, str(path))


def _real(value, field_name: str, source: str) -> float:
    if isinstance(value, bool) or not isinstance(value, (int, float)) or not math.isfinite(value):
        raise FileFormatError(f"{source}: {field_name} must be a finite number, got {value!r}.")
    return float(value)
