"""Explicit real equiangular line constructions.

Covers the classical bound-saturating families in low dimension: the three
hexagon diagonals in R^2, the six icosahedron diagonals in R^3, and the 28
lines in R^7 built from the Fano plane with octonion sign factors.  Also
provides the hyperplane restriction used to push a set down one dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linesets import COMPLEX, REAL, LineSet

__all__ = [
    "FANO_LINES",
    "FanoPlane",
    "fano_incidence",
    "octonion_multiply",
    "hexagon_lines",
    "icosahedron_lines",
    "fano_28_lines",
    "restrict_to_hyperplane",
]

# Oriented Fano triads on points 1..7.  Each triple (a, b, c) means
# e_a e_b = e_c cyclically; this single list fixes both the plane's line set
# and the Cayley-Graves octonion multiplication rule.
FANO_LINES: tuple[tuple[int, int, int], ...] = (
    (1, 2, 3),
    (1, 4, 5),
    (1, 7, 6),
    (2, 4, 6),
    (2, 5, 7),
    (3, 4, 7),
    (3, 6, 5),
)


@dataclass(frozen=True, eq=False)
class FanoPlane:
    """Seven points, seven lines, incidence matrix with lines as rows."""

    lines: tuple[tuple[int, int, int], ...]
    incidence: np.ndarray  # (7, 7) of 0/1, entry (i, j) = 1 iff point j+1 on line i

    def __str__(self) -> str:
        return "\n".join(" ".join(str(int(e)) for e in row) for row in self.incidence)


def fano_incidence() -> FanoPlane:
    """The Fano plane with lines ordered by the oriented triad list."""
    inc = np.zeros((7, 7), dtype=np.int64)
    for i, line in enumerate(FANO_LINES):
        for p in line:
            inc[i, p - 1] = 1
    inc.setflags(write=False)
    return FanoPlane(lines=FANO_LINES, incidence=inc)


def _octonion_tables() -> tuple[np.ndarray, np.ndarray]:
    # index 0 is the real unit; 1..7 the imaginary units
    sign = np.zeros((8, 8), dtype=np.int64)
    index = np.zeros((8, 8), dtype=np.int64)
    for i in range(8):
        sign[0, i] = sign[i, 0] = 1
        index[0, i] = index[i, 0] = i
    for i in range(1, 8):
        sign[i, i] = -1
        index[i, i] = 0
    for a, b, c in FANO_LINES:
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            sign[x, y] = 1
            index[x, y] = z
            sign[y, x] = -1
            index[y, x] = z
    return sign, index


_OCT_SIGN, _OCT_INDEX = _octonion_tables()


def octonion_multiply(i: int, j: int) -> tuple[int, int]:
    """Product of basis octonions e_i e_j as (sign, index), with e_0 = 1."""
    if not (0 <= i <= 7 and 0 <= j <= 7):
        raise ValueError("octonion unit indices run from 0 to 7")
    return int(_OCT_SIGN[i, j]), int(_OCT_INDEX[i, j])


def hexagon_lines() -> LineSet:
    """The three diagonals of a regular hexagon: angles 0, 60, 120 degrees."""
    ks = np.arange(3)
    vecs = np.stack([np.cos(ks * np.pi / 3), np.sin(ks * np.pi / 3)], axis=1)
    return LineSet(dimension=2, field=REAL, vectors=vecs)


def icosahedron_lines() -> LineSet:
    """The six diagonals of a regular icosahedron.

    Uses the cyclic coordinate family (0, +-1, phi) with phi the golden
    ratio; any other choice is a rotation of this one.
    """
    phi = (1.0 + math.sqrt(5.0)) / 2.0
    raw = []
    for s in (1.0, -1.0):
        base = (0.0, s, phi)
        for shift in range(3):
            raw.append(tuple(base[(k - shift) % 3] for k in range(3)))
    vecs = np.array(raw) / math.sqrt(1.0 + phi * phi)
    return LineSet(dimension=3, field=REAL, vectors=vecs)


def fano_28_lines() -> LineSet:
    """28 equiangular lines in R^7 from the Fano plane plus octonion signs.

    One vector per (line, off-line point) choice: the vector is supported on
    the line's three coordinates, and the entry at coordinate q carries the
    sign of the octonion product e_p e_q.  A global sign normalization
    (first nonzero entry positive) makes the output deterministic; lines do
    not care about it.
    """
    rows = []
    for line in FANO_LINES:
        on_line = set(line)
        for p in range(1, 8):
            if p in on_line:
                continue
            vec = np.zeros(7, dtype=np.int64)
            for q in line:
                s, _ = octonion_multiply(p, q)
                vec[q - 1] = s
            first = vec[np.nonzero(vec)[0][0]]
            if first < 0:
                vec = -vec
            rows.append(vec)
    ints = np.array(rows, dtype=np.int64)
    # integer cross-check: every pair overlaps with magnitude exactly 1
    g = ints @ ints.T
    off = g[~np.eye(len(ints), dtype=bool)]
    if not np.all(np.abs(off) == 1):
        raise AssertionError("octonion sign assignment broke the unit-overlap property")
    vecs = ints / math.sqrt(3.0)
    return LineSet(dimension=7, field=REAL, vectors=vecs)


def orthogonal_complement_basis(v: np.ndarray) -> np.ndarray:
    """Orthonormal basis of the hyperplane orthogonal to v, as rows.

    Built by Gram-Schmidt over the standard basis vectors, dropping the one
    with the largest component along v; deterministic for a given v.
    """
    v = np.asarray(v)
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("cannot take the complement of the zero vector")
    unit = v / norm
    d = unit.shape[0]
    drop = int(np.argmax(np.abs(unit)))
    basis = [unit]
    for k in range(d):
        if k == drop:
            continue
        e = np.zeros(d, dtype=unit.dtype)
        e[k] = 1.0
        for b in basis:
            e = e - np.vdot(b, e) * b
        nrm = np.linalg.norm(e)
        if nrm < 1e-12:
            raise ValueError("degenerate basis during complement construction")
        basis.append(e / nrm)
    return np.array(basis[1:])


def restrict_to_hyperplane(ls: LineSet, v: np.ndarray, tol: float = 1e-8) -> LineSet:
    """Keep the lines orthogonal to v and re-express them one dimension down.

    A line is kept when its unit representative has overlap magnitude with
    the direction of v below tol.  Kept vectors are rewritten in an
    orthonormal basis of the complement of v, which preserves all their
    pairwise inner products.
    """
    v = np.asarray(v, dtype=ls.vectors.dtype)
    if v.shape != (ls.dimension,):
        raise ValueError(f"restricting vector must have length {ls.dimension}")
    norm = np.linalg.norm(v)
    if norm == 0:
        raise ValueError("restricting vector must be nonzero")
    unit = v / norm
    overlaps = np.abs(ls.vectors @ np.conj(unit))
    keep = overlaps <= tol
    n_keep = int(np.count_nonzero(keep))
    if n_keep == 0:
        raise ValueError(
            f"no lines orthogonal to the given vector at tol={tol:g} "
            f"(0 of {ls.n_lines} kept; smallest overlap {overlaps.min():.3e})"
        )
    basis = orthogonal_complement_basis(unit)
    projected = ls.vectors[keep] @ np.conj(basis).T
    field = COMPLEX if ls.field == COMPLEX else REAL
    return LineSet(dimension=ls.dimension - 1, field=field, vectors=projected)
