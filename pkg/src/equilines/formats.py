"""File formats: JSON and plain-text line sets, grids, graphs, and dumps.

JSON line sets look like {"dimension": d, "field": "real"|"complex",
"vectors": [[...], ...]} with complex scalars written as [re, im] pairs.
The text format puts one vector per row, whitespace-separated, complex
entries rendered as "re+imj".  Both formats round-trip exactly (floats are
emitted with repr precision).
"""

from __future__ import annotations

import json
from typing import Any

import numpy as np

from .linesets import COMPLEX, REAL, Certificate, LineSet
from .seidel import Graph, validate_seidel
from .whsic import Fiducial, SicCertificate

__all__ = [
    "lineset_to_json",
    "lineset_from_json",
    "lineset_to_text",
    "lineset_from_text",
    "certificate_to_json",
    "sic_certificate_to_json",
    "fiducial_to_json",
    "fiducial_from_json",
    "seidel_to_text",
    "seidel_from_text",
    "graph_to_text",
    "graph_from_text",
    "gram_to_text",
    "type2_to_bytes",
    "type2_from_bytes",
    "type2_to_csv",
    "dumps",
]


def dumps(obj: Any) -> str:
    """Stable JSON rendering used for all machine-readable output."""
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def lineset_to_json(ls: LineSet) -> dict:
    if ls.field == COMPLEX:
        vectors = [[[float(c.real), float(c.imag)] for c in row] for row in ls.vectors]
    else:
        vectors = [[float(c) for c in row] for row in ls.vectors]
    return {"dimension": ls.dimension, "field": ls.field, "vectors": vectors}


def lineset_from_json(obj: dict) -> LineSet:
    try:
        dimension = int(obj["dimension"])
        field = obj["field"]
        raw = obj["vectors"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed line-set JSON: {exc}") from exc
    if field == COMPLEX:
        try:
            vectors = np.array(
                [[complex(entry[0], entry[1]) for entry in row] for row in raw],
                dtype=np.complex128,
            )
        except (TypeError, IndexError) as exc:
            raise ValueError("complex entries must be [re, im] pairs") from exc
    elif field == REAL:
        vectors = np.array(raw, dtype=np.float64)
    else:
        raise ValueError(f"unknown field tag {field!r}")
    return LineSet(dimension=dimension, field=field, vectors=vectors)


def _format_complex(c: complex) -> str:
    sign = "+" if c.imag >= 0 else "-"
    return f"{c.real!r}{sign}{abs(c.imag)!r}j"


def lineset_to_text(ls: LineSet) -> str:
    lines = []
    for row in ls.vectors:
        if ls.field == COMPLEX:
            lines.append(" ".join(_format_complex(complex(c)) for c in row))
        else:
            lines.append(" ".join(repr(float(c)) for c in row))
    return "\n".join(lines) + "\n"


def lineset_from_text(text: str) -> LineSet:
    rows = []
    is_complex = False
    for line in text.splitlines():
        tokens = line.split()
        if not tokens:
            continue
        if any("j" in t for t in tokens):
            is_complex = True
        rows.append(tokens)
    if not rows:
        raise ValueError("no vectors found in text input")
    widths = {len(r) for r in rows}
    if len(widths) != 1:
        raise ValueError("rows have inconsistent lengths")
    d = widths.pop()
    try:
        if is_complex:
            vectors = np.array([[complex(t) for t in r] for r in rows], dtype=np.complex128)
            field = COMPLEX
        else:
            vectors = np.array([[float(t) for t in r] for r in rows], dtype=np.float64)
            field = REAL
    except ValueError as exc:
        raise ValueError(f"unparseable vector entry: {exc}") from exc
    return LineSet(dimension=d, field=field, vectors=vectors)


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "is_equiangular": cert.is_equiangular,
        "alpha": cert.alpha,
        "max_deviation": cert.max_deviation,
        "tolerance_used": cert.tolerance_used,
    }


def sic_certificate_to_json(cert: SicCertificate) -> dict:
    return {
        "pass": cert.passed,
        "target_overlap": cert.target_overlap,
        "max_overlap_deviation": cert.max_overlap_deviation,
        "identity_residual": cert.identity_residual,
    }


def fiducial_to_json(f: Fiducial, potential: float | None = None) -> dict:
    obj = {
        "d": f.dimension,
        "amplitudes": [[float(a.real), float(a.imag)] for a in f.amplitudes],
    }
    if potential is not None:
        obj["potential"] = float(potential)
    return obj


def fiducial_from_json(obj: dict) -> Fiducial:
    try:
        d = int(obj["d"])
        amps = np.array(
            [complex(a[0], a[1]) for a in obj["amplitudes"]], dtype=np.complex128
        )
    except (KeyError, TypeError, IndexError) as exc:
        raise ValueError(f"malformed fiducial JSON: {exc}") from exc
    return Fiducial(dimension=d, amplitudes=amps)


def seidel_to_text(s: np.ndarray) -> str:
    s = validate_seidel(s)
    return "\n".join(" ".join(f"{int(e):2d}" for e in row) for row in s) + "\n"


def seidel_from_text(text: str) -> np.ndarray:
    rows = [line.split() for line in text.splitlines() if line.strip()]
    if not rows:
        raise ValueError("empty Seidel matrix input")
    try:
        grid = np.array([[int(t) for t in row] for row in rows], dtype=np.int64)
    except ValueError as exc:
        raise ValueError(f"Seidel entries must be integers: {exc}") from exc
    return validate_seidel(grid)


def gram_to_text(g: np.ndarray) -> str:
    return "\n".join(" ".join(repr(float(e)) for e in row) for row in np.asarray(g)) + "\n"


def graph_to_text(g: Graph) -> str:
    lines = [str(g.n)]
    for u, v in sorted(g.edges):
        lines.append(f"{u} {v}")
    return "\n".join(lines) + "\n"


def graph_from_text(text: str) -> Graph:
    lines = [line for line in text.splitlines() if line.strip()]
    if not lines:
        raise ValueError("empty graph input")
    try:
        n = int(lines[0])
        edges = []
        for line in lines[1:]:
            u, v = line.split()
            edges.append((int(u), int(v)))
    except ValueError as exc:
        raise ValueError(f"malformed graph text: {exc}") from exc
    return Graph.from_edges(n, edges)


def type2_to_bytes(vectors: np.ndarray) -> bytes:
    """Little-endian int16 records, 24 coordinates per vector."""
    arr = np.ascontiguousarray(np.asarray(vectors), dtype="<i2")
    if arr.ndim != 2 or arr.shape[1] != 24:
        raise ValueError("expected an (N, 24) coordinate array")
    return arr.tobytes()


def type2_from_bytes(blob: bytes) -> np.ndarray:
    arr = np.frombuffer(blob, dtype="<i2")
    if arr.size % 24 != 0:
        raise ValueError("byte length is not a multiple of 24 int16 records")
    return arr.reshape(-1, 24).astype(np.int64)


def type2_to_csv(vectors: np.ndarray) -> str:
    arr = np.asarray(vectors, dtype=np.int64)
    return "\n".join(",".join(str(int(x)) for x in row) for row in arr) + "\n"
