"""The extended binary Golay code [24, 12, 8].

Generated from the standard-form matrix [I | B] with B the bordered
circulant used throughout the coding literature.  The weight distribution
(0:1, 8:759, 12:2576, 16:759, 24:1) is the definitive correctness check and
is asserted by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

__all__ = ["GolayCode", "golay_codewords"]

_B = np.array(
    [
        [1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1],
        [1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1],
        [0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 1],
        [1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1],
        [1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1],
        [1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1],
        [0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 1],
        [0, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 1],
        [0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 1],
        [1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1],
        [0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1],
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0],
    ],
    dtype=np.uint8,
)

_POW2 = (np.int64(1) << np.arange(24, dtype=np.int64))


@dataclass(frozen=True, eq=False)
class GolayCode:
    """All 4096 codewords plus the generator they came from."""

    generator: np.ndarray  # (12, 24) over GF(2)
    words: np.ndarray  # (4096, 24) over GF(2)
    _keys: np.ndarray  # sorted 24-bit integer keys for membership tests

    def contains(self, bits: np.ndarray) -> bool | np.ndarray:
        """Membership test for a 24-bit word or a batch of them."""
        bits = np.asarray(bits)
        batched = bits.ndim == 2
        keys = bits.reshape(-1, 24).astype(np.int64) @ _POW2
        idx = np.clip(np.searchsorted(self._keys, keys), 0, len(self._keys) - 1)
        hit = self._keys[idx] == keys
        return hit if batched else bool(hit[0])

    def octads(self) -> np.ndarray:
        """The 759 weight-8 codewords."""
        return self.words[self.words.sum(axis=1) == 8]

    def weight_distribution(self) -> dict[int, int]:
        wts, counts = np.unique(self.words.sum(axis=1), return_counts=True)
        return {int(w): int(c) for w, c in zip(wts, counts)}


@lru_cache(maxsize=1)
def golay_codewords() -> GolayCode:
    """Build the code once; the 4096-word table is shared after that."""
    gen = np.hstack([np.eye(12, dtype=np.uint8), _B])
    msgs = ((np.arange(4096)[:, None] >> np.arange(12)[None, :]) & 1).astype(np.uint8)
    words = (msgs @ gen) % 2
    keys = np.sort(words.astype(np.int64) @ _POW2)
    if len(np.unique(keys)) != 4096:
        raise AssertionError("generator rows are not independent")
    words.setflags(write=False)
    gen.setflags(write=False)
    return GolayCode(generator=gen, words=words, _keys=keys)
