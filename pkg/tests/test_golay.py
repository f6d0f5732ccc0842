import numpy as np

from equilines import golay_codewords


def test_codeword_count():
    code = golay_codewords()
    assert code.words.shape == (4096, 24)
    assert len({tuple(w) for w in code.words.tolist()}) == 4096


def test_weight_distribution_exact():
    dist = golay_codewords().weight_distribution()
    assert dist == {0: 1, 8: 759, 12: 2576, 16: 759, 24: 1}


def test_zero_and_all_ones_words_present():
    code = golay_codewords()
    assert code.contains(np.zeros(24, dtype=np.uint8))
    assert code.contains(np.ones(24, dtype=np.uint8))


def test_xor_closure_on_random_pairs():
    code = golay_codewords()
    rng = np.random.default_rng(0)
    idx = rng.integers(0, 4096, size=(1000, 2))
    xors = code.words[idx[:, 0]] ^ code.words[idx[:, 1]]
    assert code.contains(xors).all()


def test_minimum_weight_is_eight():
    wts = golay_codewords().words.sum(axis=1)
    assert wts[wts > 0].min() == 8


def test_non_codeword_rejected():
    code = golay_codewords()
    w = np.zeros(24, dtype=np.uint8)
    w[0] = 1
    assert not code.contains(w)
    # flipping one bit of a codeword leaves the code (min distance 8)
    c = code.words[123].copy()
    c[5] ^= 1
    assert not code.contains(c)


def test_generator_shape_and_membership():
    code = golay_codewords()
    assert code.generator.shape == (12, 24)
    assert code.contains(code.generator).all()
    assert (code.generator[:, :12] == np.eye(12, dtype=np.uint8)).all()


def test_octad_count():
    assert len(golay_codewords().octads()) == 759
