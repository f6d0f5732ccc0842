"""Seidel matrices, graph switching, and line-set reconstruction.

A real equiangular Gram matrix is 1 on the diagonal and +-alpha off it; the
sign pattern alone is the Seidel matrix, and reading entry -1 as "edge"
turns it into a graph.  Negating a line representative complements the
edges across that vertex's cut, so line sets correspond to switching
classes of graphs rather than to single graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .linesets import REAL, LineSet

__all__ = [
    "Graph",
    "seidel_from_gram",
    "seidel_from_graph",
    "graph_from_seidel",
    "switch",
    "negate_line_vector",
    "switching_equivalent",
    "is_strongly_regular",
    "lines_from_seidel",
    "adjacency_matrix",
    "validate_seidel",
]


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph: vertex count plus a set of (u < v) pairs."""

    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph needs at least one vertex")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u}, {v}) out of range for {self.n} vertices")

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        norm = frozenset((min(u, v), max(u, v)) for u, v in edges if u != v)
        if any(u == v for u, v in edges):
            raise ValueError("self-loops are not allowed")
        return Graph(n=n, edges=norm)


def adjacency_matrix(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for u, v in g.edges:
        a[u, v] = a[v, u] = 1
    return a


def validate_seidel(s: np.ndarray) -> np.ndarray:
    s = np.asarray(s)
    if s.ndim != 2 or s.shape[0] != s.shape[1]:
        raise ValueError("Seidel matrix must be square")
    s = s.astype(np.int64)
    if (np.diag(s) != 0).any():
        raise ValueError("Seidel matrix must have zero diagonal")
    off = s[~np.eye(s.shape[0], dtype=bool)]
    if not np.isin(off, (-1, 1)).all():
        raise ValueError("off-diagonal Seidel entries must be +-1")
    if (s != s.T).any():
        raise ValueError("Seidel matrix must be symmetric")
    return s


def seidel_from_gram(g: np.ndarray, alpha: float, tol: float = 1e-10) -> np.ndarray:
    """Sign pattern of an equiangular Gram matrix.

    Every off-diagonal entry must sit within tol of +-alpha, with alpha
    positive; otherwise the Gram matrix does not describe equiangular lines
    and the conversion refuses.
    """
    g = np.asarray(g)
    if np.iscomplexobj(g):
        if np.abs(g.imag).max() > tol:
            raise ValueError("Seidel matrices only exist for real Gram matrices")
        g = g.real
    if alpha <= 0:
        raise ValueError("alpha must be positive (orthonormal sets have no sign pattern)")
    n = g.shape[0]
    off_mask = ~np.eye(n, dtype=bool)
    dev = np.abs(np.abs(g[off_mask]) - alpha)
    if dev.max() > tol:
        raise ValueError(
            f"off-diagonal magnitudes deviate from alpha by up to {dev.max():.3e} "
            f"(tol {tol:g}); Gram matrix is not equiangular at this alpha"
        )
    s = np.sign(g).astype(np.int64)
    np.fill_diagonal(s, 0)
    return s


def graph_from_seidel(s: np.ndarray) -> Graph:
    """Entry -1 means edge; +1 means non-edge (fixed convention)."""
    s = validate_seidel(s)
    n = s.shape[0]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if s[u, v] == -1]
    return Graph.from_edges(n, edges)


def seidel_from_graph(g: Graph) -> np.ndarray:
    s = np.ones((g.n, g.n), dtype=np.int64) - 2 * adjacency_matrix(g)
    np.fill_diagonal(s, 0)
    return s


def switch(g: Graph, subset: Iterable[int]) -> Graph:
    """Complement every edge with exactly one endpoint in the subset."""
    sub = set(subset)
    for u in sub:
        if not (0 <= u < g.n):
            raise ValueError(f"vertex {u} out of range")
    edges = set(g.edges)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if (u in sub) != (v in sub):
                e = (u, v)
                if e in edges:
                    edges.remove(e)
                else:
                    edges.add(e)
    return Graph.from_edges(g.n, edges)


def negate_line_vector(ls: LineSet, i: int) -> LineSet:
    """Flip the sign of one representative; the lines themselves do not move."""
    if not (0 <= i < ls.n_lines):
        raise ValueError(f"line index {i} out of range for {ls.n_lines} lines")
    vecs = ls.vectors.copy()
    vecs[i] = -vecs[i]
    return LineSet(dimension=ls.dimension, field=ls.field, vectors=vecs)


def switching_equivalent(g1: Graph, g2: Graph) -> bool:
    """Whether some subset switch carries g1 onto g2, labels held fixed.

    The subset, if it exists, is forced by the first row of the adjacency
    difference: switching changes exactly the cut edges, so S (taken with
    vertex 0 outside it, which costs nothing since a cut equals its
    complement's cut) must be the set of vertices whose edge to 0 changed.
    One O(N^2) verification settles it.
    """
    if g1.n != g2.n:
        raise ValueError("graphs must have the same vertex count")
    diff = (adjacency_matrix(g1) + adjacency_matrix(g2)) % 2
    in_sub = diff[0].astype(bool)
    in_sub[0] = False
    cut = in_sub[:, None] != in_sub[None, :]
    return bool((diff.astype(bool) == cut).all())


def is_strongly_regular(g: Graph) -> tuple[int, int, int, int] | None:
    """Parameters (N, k, lambda, mu) if the graph is strongly regular.

    Vacuous counts report as 0: a complete graph has no nonadjacent pairs
    (mu = 0 by convention) and an empty graph no adjacent ones; both are
    degenerate-regular rather than interesting.
    """
    a = adjacency_matrix(g)
    degrees = a.sum(axis=1)
    if len(set(degrees.tolist())) != 1:
        return None
    k = int(degrees[0])
    common = a @ a
    off = ~np.eye(g.n, dtype=bool)
    adj = a.astype(bool) & off
    nonadj = ~a.astype(bool) & off
    lams = np.unique(common[adj]) if adj.any() else np.array([0])
    mus = np.unique(common[nonadj]) if nonadj.any() else np.array([0])
    if len(lams) != 1 or len(mus) != 1:
        return None
    return (g.n, k, int(lams[0]), int(mus[0]))


def lines_from_seidel(s: np.ndarray, alpha: float, tol: float = 1e-10) -> LineSet:
    """Reconstruct unit vectors whose Gram matrix is I + alpha * S.

    Requires I + alpha*S to be positive semidefinite within tol.  The
    vectors live in dimension equal to the numerical rank (eigenvalues
    above 1e-9 of the largest), and gram() of the result reproduces
    I + alpha*S up to factorization error.
    """
    s = validate_seidel(s)
    if alpha <= 0:
        raise ValueError("alpha must be positive")
    n = s.shape[0]
    g = np.eye(n) + alpha * s.astype(np.float64)
    evals, evecs = np.linalg.eigh(g)
    if evals.min() < -tol:
        raise ValueError(
            f"I + alpha*S has eigenvalue {evals.min():.3e} < 0; "
            "alpha is too large for this sign pattern"
        )
    cutoff = 1e-9 * max(evals.max(), 0.0)
    keep = evals > cutoff
    rank = int(keep.sum())
    if rank == 0:
        raise ValueError("Gram matrix has rank 0")
    factor = evecs[:, keep] * np.sqrt(evals[keep])
    return LineSet(dimension=rank, field=REAL, vectors=factor)
