"""Leech lattice membership, minimal-vector enumeration, and 276 lines in R^23.

Vectors are stored with unscaled integer coordinates; the lattice inner
product is <u, v> = (sum_i u_i v_i) / 8, so a vector of type t has
sum_i v_i^2 = 16 t.  Membership uses the Golay-code congruence description:
all coordinates share a parity m, the mod-4 pattern ((x - m)/2 mod 2) is a
codeword, and the coordinate sum is congruent to 4m mod 8.

The equiangular construction: for a type-3 vector v3, the 276 unordered
pairs {u, v3 - u} of type-2 vectors summing to v3 each define a line along
w = 2u - v3, which is orthogonal to v3 in exact integer arithmetic.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import numpy as np

from .constructions import orthogonal_complement_basis, restrict_to_hyperplane
from .golay import golay_codewords
from .linesets import REAL, LineSet

__all__ = [
    "default_type3",
    "leech_type",
    "is_leech_vector",
    "leech_type_vectors",
    "leech_276_lines",
    "leech_176_lines",
    "restrictor_for_176",
]


def default_type3() -> np.ndarray:
    """The baked-in type-3 vector (5, 1, ..., 1); validity is re-checked at use."""
    v3 = np.ones(24, dtype=np.int64)
    v3[0] = 5
    return v3


def leech_type(x: np.ndarray) -> float:
    """Half the lattice norm, (sum x_i^2)/16; integral on lattice vectors."""
    x = np.asarray(x, dtype=np.int64)
    return float(np.sum(x * x) / 16.0)


def _leech_mask(arr: np.ndarray) -> np.ndarray:
    """Vectorized membership test for an (M, 24) integer array."""
    code = golay_codewords()
    arr = np.asarray(arr, dtype=np.int64)
    par = arr % 2
    same_parity = (par == par[:, :1]).all(axis=1)
    m = par[:, 0]
    pattern = ((arr - m[:, None]) // 2) % 2
    in_code = code.contains(pattern.astype(np.uint8))
    sum_ok = (arr.sum(axis=1) % 8) == (4 * m) % 8
    return same_parity & in_code & sum_ok


def is_leech_vector(x: np.ndarray) -> bool:
    """Congruence-based membership test for one 24-coordinate integer vector."""
    x = np.asarray(x, dtype=np.int64)
    if x.shape != (24,):
        raise ValueError("a lattice vector has 24 integer coordinates")
    return bool(_leech_mask(x[None, :])[0])


@lru_cache(maxsize=1)
def _type2_array() -> np.ndarray:
    """All 196560 type-2 vectors, assembled shape by shape.

    Shapes: (+-4^2, 0^22) with free signs; (+-2^8, 0^16) supported on an
    octad with an even number of minus signs; (+-3, +-1^23) determined by a
    coordinate position and a codeword.  Each block is verified against the
    membership test before being returned.
    """
    code = golay_codewords()

    blocks = []
    # (+-4^2, 0^22): 276 position pairs x 4 sign choices
    vecs = np.zeros((1104, 24), dtype=np.int16)
    row = 0
    for i, j in itertools.combinations(range(24), 2):
        for si in (4, -4):
            for sj in (4, -4):
                vecs[row, i] = si
                vecs[row, j] = sj
                row += 1
    blocks.append(vecs)

    # (+-2^8, 0^16): octad support, even number of minus signs
    sign_rows = np.array(
        [
            [-2 if (mask >> k) & 1 else 2 for k in range(8)]
            for mask in range(256)
            if bin(mask).count("1") % 2 == 0
        ],
        dtype=np.int16,
    )  # (128, 8)
    octads = code.octads()
    block = np.zeros((len(octads) * 128, 24), dtype=np.int16)
    for n, octad in enumerate(octads):
        support = np.flatnonzero(octad)
        block[n * 128 : (n + 1) * 128, support] = sign_rows
    blocks.append(block)

    # (+-3, +-1^23): for codeword c and position j, entries are -1 where
    # c = 1 and +1 elsewhere, except entry j is negated and tripled
    base = 1 - 2 * code.words.astype(np.int16)
    for j in range(24):
        block = base.copy()
        block[:, j] = -3 * base[:, j]
        blocks.append(block)

    out = np.vstack(blocks)
    if out.shape != (196560, 24):
        raise AssertionError(f"type-2 enumeration produced {out.shape[0]} vectors")
    if not _leech_mask(out).all():
        raise AssertionError("enumerated type-2 vector failed the membership test")
    out.setflags(write=False)
    return out


def leech_type_vectors(t: int, limit: int | None = None) -> np.ndarray:
    """Lattice vectors of type t as rows (unscaled integer coordinates).

    Type 2 is enumerated completely (196560 vectors).  Type 3 yields the
    (+-5, +-1^23) coordinate shape only, up to `limit` vectors; that shape
    alone provides one valid seed per coordinate position and codeword.
    """
    if t == 2:
        vecs = _type2_array()
        return np.array(vecs if limit is None else vecs[:limit])
    if t == 3:
        code = golay_codewords()
        base = 1 - 2 * code.words.astype(np.int16)
        cap = 24 * 4096 if limit is None else limit
        blocks = []
        produced = 0
        for j in range(24):
            if produced >= cap:
                break
            block = base.copy()
            # entry j becomes +-5; codeword bit set there means -5 (3 mod 4)
            block[:, j] = 5 * block[:, j]
            block = block[: cap - produced]
            produced += len(block)
            blocks.append(block)
        out = np.vstack(blocks)
        if not _leech_mask(out).all():
            raise AssertionError("enumerated type-3 vector failed the membership test")
        return out
    raise ValueError("only types 2 and 3 are enumerable here")


def _validate_type3(v3: np.ndarray | None) -> np.ndarray:
    if v3 is None:
        v3 = default_type3()
    v3 = np.asarray(v3, dtype=np.int64)
    if v3.shape != (24,):
        raise ValueError("v3 must have 24 integer coordinates")
    if not is_leech_vector(v3):
        raise ValueError("v3 is not a Leech lattice vector")
    t = leech_type(v3)
    if t != 3:
        raise ValueError(f"v3 has type {t:g}, need type 3")
    return v3


def _line_representatives(v3: np.ndarray) -> np.ndarray:
    """The 276 vectors w = 2u - v3, one per unordered type-2 pair summing to v3."""
    type2 = _type2_array().astype(np.int64)
    dots = type2 @ v3
    # <u, v3> = 3 in lattice units selects exactly the pair members
    candidates = type2[dots == 24]
    keys = {tuple(u) for u in candidates.tolist()}
    reps = []
    for u in candidates.tolist():
        partner = tuple(int(a - b) for a, b in zip(v3.tolist(), u))
        if partner not in keys:
            raise AssertionError("pair partner missing from the type-2 enumeration")
        if tuple(u) < partner:
            reps.append(u)
    if 2 * len(reps) != len(candidates):
        raise AssertionError("type-2 summands did not pair up cleanly")
    if len(reps) != 276:
        raise ValueError(f"expected 276 pairs for a type-3 vector, found {len(reps)}")
    ws = 2 * np.array(sorted(reps), dtype=np.int64) - v3
    # exact integer checks: orthogonal to v3, squared length 80, overlaps +-16
    if (ws @ v3 != 0).any():
        raise AssertionError("line representative not orthogonal to v3")
    if (np.sum(ws * ws, axis=1) != 80).any():
        raise AssertionError("line representative has wrong norm")
    g = ws @ ws.T
    off = g[~np.eye(len(ws), dtype=bool)]
    if not np.isin(off, (-16, 16)).all():
        raise AssertionError("pairwise overlaps of line representatives are off")
    return ws


def leech_276_lines(v3: np.ndarray | None = None) -> LineSet:
    """276 equiangular lines in R^23 from the pairs construction around v3."""
    v3 = _validate_type3(v3)
    ws = _line_representatives(v3)
    basis = orthogonal_complement_basis(v3.astype(np.float64))
    vecs = (ws.astype(np.float64) @ basis.T) / np.sqrt(80.0)
    return LineSet(dimension=23, field=REAL, vectors=vecs)


def restrictor_for_176(v3: np.ndarray | None = None) -> np.ndarray:
    """An integer direction orthogonal to v3 whose hyperplane keeps 176 lines.

    Built as 3x - v3 from a type-2 vector x with <x, v3> = 2; the candidate
    is searched from the enumeration and the 176 count is verified rather
    than assumed.
    """
    v3 = _validate_type3(v3)
    ws = _line_representatives(v3)
    type2 = _type2_array().astype(np.int64)
    for x in type2[type2 @ v3 == 16][:64]:
        c = 3 * x - v3
        if (c @ v3) != 0:
            raise AssertionError("restrictor construction lost orthogonality")
        if int(np.count_nonzero(ws @ c == 0)) == 176:
            return c
    raise ValueError("no restrictor keeping 176 lines found near this v3")


def leech_176_lines(v3: np.ndarray | None = None, tol: float = 1e-8) -> LineSet:
    """The 176-line subset of the 276 that fits one dimension lower, in R^22."""
    v3 = _validate_type3(v3)
    lines = leech_276_lines(v3)
    c = restrictor_for_176(v3)
    basis = orthogonal_complement_basis(v3.astype(np.float64))
    c23 = basis @ c.astype(np.float64)
    restricted = restrict_to_hyperplane(lines, c23, tol=tol)
    if restricted.n_lines != 176:
        raise AssertionError(f"hyperplane restriction kept {restricted.n_lines} lines")
    return restricted
