"""Line sets, Gram matrices, and equiangularity certification.

A line through the origin is represented by a unit vector; a LineSet is an
ordered family of such representatives in R^d or C^d.  A family is
equiangular when every pairwise overlap magnitude |<v_j, v_k>| (j != k)
equals a single common value alpha.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

REAL = "real"
COMPLEX = "complex"
DEFAULT_TOL = 1e-10

__all__ = [
    "REAL",
    "COMPLEX",
    "DEFAULT_TOL",
    "LineSet",
    "Certificate",
    "gram",
    "certify_equiangular",
    "gerzon_bound",
    "saturating_alpha",
    "psd_rank",
]


@dataclass(frozen=True, eq=False)
class LineSet:
    """An ordered family of line representatives, one vector per row.

    Vectors are stored as an immutable (N, dimension) array of float64
    (field "real") or complex128 (field "complex").  Unit norm is not
    enforced here; it is part of what certification checks, so that
    corrupted inputs can still be loaded and diagnosed.
    """

    dimension: int
    field: str
    vectors: np.ndarray

    def __post_init__(self):
        if self.field not in (REAL, COMPLEX):
            raise ValueError(f"unknown field tag {self.field!r}")
        dtype = np.complex128 if self.field == COMPLEX else np.float64
        try:
            v = np.array(self.vectors, dtype=dtype)
        except (TypeError, ValueError) as exc:
            raise ValueError(f"vectors not interpretable over {self.field}: {exc}") from exc
        if v.ndim != 2:
            raise ValueError("vectors must form a 2-d array, one row per line")
        n, d = v.shape
        if n < 1:
            raise ValueError("a LineSet needs at least one vector")
        if self.dimension < 1 or d != self.dimension:
            raise ValueError(f"vector length {d} does not match dimension {self.dimension}")
        v.setflags(write=False)
        object.__setattr__(self, "vectors", v)

    @property
    def n_lines(self) -> int:
        return int(self.vectors.shape[0])


@dataclass(frozen=True)
class Certificate:
    """Outcome of an equiangularity check.

    alpha is the common overlap magnitude estimate (median of the
    off-diagonal overlap magnitudes, robust to a single bad pair) and
    max_deviation the worst disagreement | |<v_j,v_k>| - alpha | over pairs.
    """

    is_equiangular: bool
    alpha: float
    max_deviation: float
    tolerance_used: float


def gram(ls: LineSet) -> np.ndarray:
    """Pairwise inner products <v_j, v_k>, conjugate-linear in the first slot."""
    v = ls.vectors
    return np.conj(v) @ v.T


def certify_equiangular(ls: LineSet, tol: float = DEFAULT_TOL) -> Certificate:
    """Check the common-angle condition on all pairs of lines.

    Passing requires every off-diagonal overlap magnitude to sit within tol
    of the median magnitude, and every vector norm within tol of 1.
    """
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    n = ls.n_lines
    if n < 2:
        raise ValueError("need at least two lines to compare angles")
    g = gram(ls)
    iu = np.triu_indices(n, k=1)
    mags = np.abs(g[iu])
    alpha = float(np.median(mags))
    max_dev = float(np.max(np.abs(mags - alpha)))
    norms = np.sqrt(np.abs(np.diag(g).real))
    norm_dev = float(np.max(np.abs(norms - 1.0)))
    passed = bool(max_dev <= tol and norm_dev <= tol)
    return Certificate(passed, alpha, max_dev, tol)


def gerzon_bound(d: int, field: str) -> int:
    """Largest conceivable number of equiangular lines in dimension d."""
    if d < 1:
        raise ValueError("dimension must be positive")
    if field == REAL:
        return d * (d + 1) // 2
    if field == COMPLEX:
        return d * d
    raise ValueError(f"unknown field tag {field!r}")


def saturating_alpha(d: int, field: str) -> float:
    """The overlap magnitude forced on any bound-saturating set in dimension d."""
    if d < 2:
        raise ValueError("dimension must be at least 2")
    if field == REAL:
        return 1.0 / np.sqrt(d + 2.0)
    if field == COMPLEX:
        return 1.0 / np.sqrt(d + 1.0)
    raise ValueError(f"unknown field tag {field!r}")


def psd_rank(g: np.ndarray, threshold: float | None = None) -> tuple[bool, int]:
    """Positive-semidefiniteness flag and numerical rank of a Gram matrix.

    Eigenvalues above `threshold` (default 1e-9 * N) count toward the rank;
    any eigenvalue below -threshold fails the PSD check.
    """
    g = np.asarray(g)
    n = g.shape[0]
    if threshold is None:
        threshold = 1e-9 * n
    evals = np.linalg.eigvalsh((g + np.conj(g.T)) / 2.0)
    return bool(evals.min() >= -threshold), int(np.sum(evals > threshold))
