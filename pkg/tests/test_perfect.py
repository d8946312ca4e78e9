"""Perfect codes of length 7 and their parity extensions."""

import numpy as np
import pytest

from pcl.perfect import (ball, enumerate_perfect7, enumerate_zero_codes_by_tiling,
                         enumerate_zero_subspace_codes, extend_even, hamming7,
                         is_extended_perfect8, is_extended_perfect16, is_perfect,
                         puncture, puncture16_np, tiles15)
from pcl.words import weight


def test_hamming7_is_a_linear_perfect_code():
    h = hamming7()
    assert len(h) == 16
    assert h[0] == 0
    assert is_perfect(h)
    s = set(h)
    assert all((a ^ b) in s for a in h for b in h)
    assert sorted(weight(w) for w in h) == [0] + [3] * 7 + [4] * 7 + [7]


def test_ball_size():
    assert weight(ball(0)) == 8
    assert weight(ball(0b1010101)) == 8


def test_zero_code_census_two_routes():
    via_subspaces = enumerate_zero_subspace_codes()
    via_tiling = enumerate_zero_codes_by_tiling()
    assert len(via_subspaces) == 30
    assert len(via_tiling) == 30
    assert sorted(map(tuple, via_subspaces)) == sorted(map(tuple, via_tiling))
    for c in via_subspaces:
        assert c[0] == 0
        assert is_perfect(c)


def test_full_census():
    codes = enumerate_perfect7()
    assert len(codes) == 240
    assert len({tuple(c) for c in codes}) == 240
    for c in codes[::17]:
        assert is_perfect(c)
    # every code is one of 128 translates of a zero code, each translate
    # hitting 16 of the 128 words, so 240 * 16 / 128 = 30 contain zero
    assert sum(1 for c in codes if c[0] == 0) == 30


def test_extend_even_and_puncture():
    h = hamming7()
    e = extend_even(h)
    assert all(weight(w) % 2 == 0 for w in e)
    assert puncture(e, 7) == tuple(sorted(h))
    assert is_extended_perfect8(e)


def test_is_extended_perfect8_rejects():
    h = hamming7()
    e = list(extend_even(h))
    e[0] ^= 0b11  # still even weight, no longer distance 4
    assert not is_extended_perfect8(tuple(e))
    assert not is_extended_perfect8(e[:15])


def test_is_perfect_rejects():
    h = list(hamming7())
    h[0] = 1
    assert not is_perfect(tuple(h))


def test_extended_perfect16_and_tiling(witnesses):
    code = witnesses[11]
    words = [int(w) for w in code.words]
    assert is_extended_perfect16(words, thorough=True)
    pw = puncture16_np(code.words, 0)
    assert tiles15(pw)
    assert not is_extended_perfect16(words[:-1], thorough=False)


def test_extended_perfect16_rejects_odd_tamper(witnesses):
    words = [int(w) for w in witnesses[9].words]
    words[3] ^= 0b111
    assert not is_extended_perfect16(sorted(words), thorough=False)
