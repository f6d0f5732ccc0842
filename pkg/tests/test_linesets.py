import numpy as np
import pytest

from equilines import (
    COMPLEX,
    REAL,
    LineSet,
    certify_equiangular,
    gerzon_bound,
    gram,
    hexagon_lines,
    psd_rank,
    saturating_alpha,
)


def test_gram_orthonormal_basis_is_identity():
    ls = LineSet(dimension=3, field=REAL, vectors=np.eye(3))
    assert np.allclose(gram(ls), np.eye(3))


def test_gram_single_vector():
    ls = LineSet(dimension=4, field=REAL, vectors=[[0.5, 0.5, 0.5, 0.5]])
    g = gram(ls)
    assert g.shape == (1, 1)
    assert g[0, 0] == pytest.approx(1.0)


def test_gram_hexagon_offdiagonal_half():
    g = gram(hexagon_lines())
    off = np.abs(g[~np.eye(3, dtype=bool)])
    assert np.allclose(off, 0.5)


def test_gram_complex_conjugate_symmetric():
    rng = np.random.default_rng(3)
    v = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
    v = v / np.linalg.norm(v, axis=1, keepdims=True)
    g = gram(LineSet(dimension=3, field=COMPLEX, vectors=v))
    assert np.allclose(g, np.conj(g.T))
    # conjugate-linear in the first argument
    assert g[0, 1] == pytest.approx(np.vdot(v[0], v[1]))


def test_certify_orthonormal_basis_alpha_zero():
    ls = LineSet(dimension=3, field=REAL, vectors=np.eye(3))
    cert = certify_equiangular(ls, 1e-10)
    assert cert.is_equiangular
    assert cert.alpha == 0.0
    assert cert.max_deviation == 0.0


def test_certify_mixed_angles_fails():
    r = 1 / np.sqrt(2)
    ls = LineSet(dimension=2, field=REAL,
                 vectors=[[1, 0], [0, 1], [r, r], [r, -r]])
    cert = certify_equiangular(ls, 1e-10)
    assert not cert.is_equiangular
    assert cert.max_deviation > 0.5  # overlap magnitudes 0 and 1/sqrt(2) coexist


def test_certify_rejects_single_line():
    ls = LineSet(dimension=2, field=REAL, vectors=[[1.0, 0.0]])
    with pytest.raises(ValueError):
        certify_equiangular(ls, 1e-10)


def test_certify_rejects_bad_tolerance():
    with pytest.raises(ValueError):
        certify_equiangular(hexagon_lines(), 0.0)


def test_certify_detects_norm_violation():
    ls = LineSet(dimension=2, field=REAL, vectors=[[1.0, 0.0], [0.0, 1.1]])
    cert = certify_equiangular(ls, 1e-10)
    assert not cert.is_equiangular


def test_sign_and_phase_invariance():
    rng = np.random.default_rng(11)
    ls = hexagon_lines()
    base = certify_equiangular(ls, 1e-10)
    flipped = LineSet(dimension=2, field=REAL,
                      vectors=ls.vectors * np.array([[1], [-1], [1]]))
    cert = certify_equiangular(flipped, 1e-10)
    assert cert == base

    v = rng.standard_normal((4, 3)) + 1j * rng.standard_normal((4, 3))
    v = v / np.linalg.norm(v, axis=1, keepdims=True)
    cls = LineSet(dimension=3, field=COMPLEX, vectors=v)
    phases = np.exp(1j * rng.uniform(0, 2 * np.pi, size=(4, 1)))
    rotated = LineSet(dimension=3, field=COMPLEX, vectors=v * phases)
    c1, c2 = certify_equiangular(cls, 1e-10), certify_equiangular(rotated, 1e-10)
    assert c1.alpha == pytest.approx(c2.alpha, abs=1e-14)
    assert c1.max_deviation == pytest.approx(c2.max_deviation, abs=1e-14)
    assert c1.is_equiangular == c2.is_equiangular


@pytest.mark.parametrize("d,field,expected", [
    (7, REAL, 28),
    (23, REAL, 276),
    (3, COMPLEX, 9),
    (2, REAL, 3),
    (22, REAL, 253),
])
def test_gerzon_bound_values(d, field, expected):
    assert gerzon_bound(d, field) == expected


@pytest.mark.parametrize("d,field,expected", [
    (7, REAL, 1 / 3),
    (23, REAL, 1 / 5),
    (2, COMPLEX, 1 / np.sqrt(3)),
    (3, REAL, 1 / np.sqrt(5)),
])
def test_saturating_alpha_values(d, field, expected):
    assert saturating_alpha(d, field) == pytest.approx(expected, abs=1e-15)


def test_bound_helpers_validate_input():
    with pytest.raises(ValueError):
        gerzon_bound(0, REAL)
    with pytest.raises(ValueError):
        saturating_alpha(1, REAL)
    with pytest.raises(ValueError):
        gerzon_bound(3, "quaternionic")


def test_psd_rank_of_gram():
    ls = hexagon_lines()
    ok, rank = psd_rank(gram(ls))
    assert ok
    assert rank == 2  # three lines squeezed into the plane


def test_lineset_validation():
    with pytest.raises(ValueError):
        LineSet(dimension=3, field=REAL, vectors=np.eye(2))
    with pytest.raises(ValueError):
        LineSet(dimension=2, field="rational", vectors=np.eye(2))
    with pytest.raises(ValueError):
        LineSet(dimension=2, field=REAL, vectors=np.zeros((0, 2)))


def test_lineset_vectors_immutable():
    ls = hexagon_lines()
    with pytest.raises(ValueError):
        ls.vectors[0, 0] = 5.0
