import numpy as np
import pytest

from equilines import (
    certify_equiangular,
    default_type3,
    golay_codewords,
    gram,
    is_leech_vector,
    leech_176_lines,
    leech_276_lines,
    leech_type,
    leech_type_vectors,
    psd_rank,
)
from equilines.leech import restrictor_for_176


def _vec(*pairs, base=0):
    v = np.full(24, base, dtype=np.int64)
    for i, val in pairs:
        v[i] = val
    return v


def test_membership_examples():
    assert is_leech_vector(_vec((0, 4), (1, 4)))
    assert not is_leech_vector(_vec((0, 1)))  # lone odd coordinate
    octad = np.flatnonzero(golay_codewords().octads()[0])
    v = np.zeros(24, dtype=np.int64)
    v[octad] = 2
    assert is_leech_vector(v)
    # same shape off an octad fails
    w = np.zeros(24, dtype=np.int64)
    w[:8] = 2
    if not golay_codewords().contains((w // 2 % 2).astype(np.uint8)):
        assert not is_leech_vector(w)


def test_membership_catches_sum_condition():
    # odd number of minus signs on an octad breaks the mod-8 sum rule
    octad = np.flatnonzero(golay_codewords().octads()[0])
    v = np.zeros(24, dtype=np.int64)
    v[octad] = 2
    v[octad[0]] = -2
    assert not is_leech_vector(v)


def test_default_type3_is_valid():
    v3 = default_type3()
    assert is_leech_vector(v3)
    assert leech_type(v3) == 3.0


def test_type2_count_and_membership():
    vecs = leech_type_vectors(2)
    assert vecs.shape == (196560, 24)
    norms = np.sum(vecs.astype(np.int64) ** 2, axis=1)
    assert (norms == 32).all()


def test_type2_closed_under_negation():
    vecs = leech_type_vectors(2).astype(np.int64)
    order = np.lexsort(vecs.T)
    neg_order = np.lexsort((-vecs).T)
    assert (vecs[order] == -vecs[neg_order]).all()


def test_type2_vectors_are_unique():
    vecs = leech_type_vectors(2)
    assert len({v.tobytes() for v in np.ascontiguousarray(vecs)}) == 196560


def test_type3_enumeration_valid():
    vecs = leech_type_vectors(3, limit=500)
    assert len(vecs) == 500
    norms = np.sum(vecs.astype(np.int64) ** 2, axis=1)
    assert (norms == 48).all()
    for v in vecs[:20]:
        assert is_leech_vector(v)


def test_type_vectors_rejects_other_types():
    with pytest.raises(ValueError):
        leech_type_vectors(4)


def test_276_lines():
    ls = leech_276_lines()
    assert ls.dimension == 23
    assert ls.n_lines == 276
    cert = certify_equiangular(ls, 1e-10)
    assert cert.is_equiangular
    assert cert.alpha == pytest.approx(0.2, abs=1e-12)
    ok, rank = psd_rank(gram(ls))
    assert ok and rank == 23


def test_276_pairwise_overlaps_two_values():
    # scaled overlaps +-2 against norm 10: cosines exactly +-1/5
    ls = leech_276_lines()
    g = gram(ls)
    off = g[~np.eye(276, dtype=bool)]
    assert np.abs(np.abs(off) - 0.2).max() < 1e-12


def test_pair_involution_flips_representative():
    # u <-> v3 - u negates w = 2u - v3, an identity of pairs not vectors
    v3 = default_type3()
    u = _vec((0, 4), (1, 4))
    partner = v3 - u
    w_u = 2 * u - v3
    w_partner = 2 * partner - v3
    assert (w_u == -w_partner).all()
    assert int(u @ v3) == 24 and int(partner @ v3) == 24


def test_276_rejects_wrong_type():
    t2 = _vec((0, 4), (1, 4))
    with pytest.raises(ValueError, match="type"):
        leech_276_lines(t2)
    with pytest.raises(ValueError):
        leech_276_lines(np.ones(24, dtype=np.int64))  # not in the lattice


def test_restrictor_keeps_176():
    v3 = default_type3()
    c = restrictor_for_176(v3)
    assert int(c @ v3) == 0


def test_176_lines():
    ls = leech_176_lines()
    assert ls.dimension == 22
    assert ls.n_lines == 176
    cert = certify_equiangular(ls, 1e-10)
    assert cert.is_equiangular
    # restriction preserves overlaps, so alpha stays 1/5
    assert cert.alpha == pytest.approx(0.2, abs=1e-12)


def test_alternative_type3_seed_also_works():
    # a permuted variant of the default seed
    v3 = np.ones(24, dtype=np.int64)
    v3[5] = 5
    ls = leech_276_lines(v3)
    assert ls.n_lines == 276
    assert certify_equiangular(ls, 1e-10).is_equiangular
