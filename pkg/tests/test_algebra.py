"""Kernel, rank and coset machinery on the doubled codes."""

import numpy as np
import pytest

from pcl.algebra import (LinearSpan, cosets, coset_reps, half_pure_subgroup,
                         index2_subspaces, intersection_kernel, kernel,
                         kernel_dim, kernel_of_component, kernel_words,
                         pure_parts, rank, rank_of, translate, weight4_split,
                         weight4_words)
from pcl.doubling import normalize
from pcl.words import popcounts16, rank_gf2, swap_halves, weight

EXPECTED = {
    # kappa: (rank, weight4 split (left, right, mixed), half-pure dim)
    5: (13, (6, 2, 0), 5),
    6: (13, (14, 2, 0), 6),
    7: (14, (14, 6, 0), 7),
    8: (13, (14, 14, 0), 8),
    9: (12, (14, 14, 16), 8),
    11: (11, (14, 14, 112), 8),
}


def test_witness_invariants(witnesses):
    for kappa, (rk, split, hp_dim) in EXPECTED.items():
        code = witnesses[kappa]
        kw = kernel_words(code)
        assert kernel_dim(kw) == kappa
        assert rank_of(code) == rk
        assert weight4_split(kw) == split
        hp = half_pure_subgroup(kw)
        assert rank_gf2([int(x) for x in hp]) == hp_dim


def test_kernel_is_a_subspace(witnesses):
    kw = kernel_words(witnesses[7])
    s = {int(w) for w in kw}
    assert 0 in s
    assert all((a ^ b) in s for a in s for b in s)


def test_kernel_translate_invariance(witnesses):
    code = witnesses[6]
    moved = translate(code, 0x5AA5)
    assert np.array_equal(kernel_words(code), kernel_words(moved))
    assert sorted(int(w) for w in moved.words) == \
        sorted(int(w) ^ 0x5AA5 for w in code.words)


def test_weight4_words_and_pure_parts(witnesses):
    kw = kernel_words(witnesses[9])
    w4 = weight4_words(kw)
    assert (popcounts16(w4) == 4).all()
    assert len(w4) == sum(weight4_split(kw))
    lo, hi = pure_parts(kw)
    # both halves come back as byte values
    assert all(int(w) <= 0xFF for w in lo)
    assert all(int(w) <= 0xFF for w in hi)
    assert len(lo) == len(hi) == 16
    # pure weight-4 kernel parts come in complementary pairs per half
    for part in (lo, hi):
        w4 = {int(w) for w in part if weight(int(w)) == 4}
        assert len(w4) == 14
        assert all((w ^ 0xFF) in w4 for w in w4)


def test_rank_and_kernel_require_zero(witnesses):
    raw = witnesses[9]
    assert int(raw.words[0]) != 0
    with pytest.raises(ValueError):
        kernel(raw)
    with pytest.raises(ValueError):
        rank(raw)
    norm = normalize(raw)[0]
    span = kernel(norm)
    assert span.dimension == 9
    assert rank(norm) == rank_of(raw) == 12


def test_linear_span_basics():
    span = LinearSpan.from_words([0b0110, 0b0011, 0b0101, 0])
    assert span.dimension == 2
    assert len(span) == 4
    assert sorted(int(w) for w in span.words()) == [0, 0b0011, 0b0101, 0b0110]
    assert 0b0110 in span
    assert 0b0111 not in span


def test_cosets(witnesses):
    code = normalize(witnesses[9])[0]
    span = kernel(code)
    dec = cosets(code, span)
    assert len(dec) == 4
    assert int(dec.reps[0]) == 0
    assert dec.coset_of(0) == 0
    with pytest.raises(KeyError):
        dec.coset_of(1)
    # every codeword's coset contains it
    for w in code.words[::311]:
        i = dec.coset_of(int(w))
        assert (int(w) ^ int(dec.reps[i])) in span


def test_coset_counts_scale_with_kappa(witnesses):
    for kappa in (5, 6, 7, 8, 9, 11):
        code = witnesses[kappa]
        span = LinearSpan.from_words(kernel_words(code))
        dec = cosets(code, span)
        assert len(dec) == 2048 >> kappa


def test_cosets_reject_non_kernel_subspace(witnesses):
    code = witnesses[8]
    bad = LinearSpan.from_words([0b11])
    with pytest.raises(ValueError):
        cosets(code, bad)


def test_coset_reps_helper(witnesses):
    code = witnesses[8]
    kw = kernel_words(code)
    reps = coset_reps(code, kw)
    assert len(reps) == 8
    assert len({int(r) for r in reps}) == 8


def test_index2_subspaces(witnesses):
    span = LinearSpan.from_words(kernel_words(witnesses[9]))
    subs = index2_subspaces(span)
    assert len(subs) == 511
    assert all(s.dimension == 8 for s in subs)
    whole = {int(w) for w in span.words()}
    sample = subs[::64]
    for s in sample:
        ws = {int(w) for w in s.words()}
        assert ws < whole
    assert len({frozenset(int(w) for w in s.words()) for s in subs}) == 511


def test_half_pure_subgroup_is_swap_stable(witnesses):
    kw = kernel_words(witnesses[9])
    hp = {int(w) for w in half_pure_subgroup(kw)}
    kws = {int(w) for w in kw}
    assert hp <= kws
    assert all((a ^ b) in hp for a in list(hp)[:16] for b in list(hp)[:16])
    mixed = kws - hp
    assert len(mixed) == len(hp)  # index 2 when mixed words exist


def test_component_kernels(atlas):
    comps0 = atlas.classes[0].components
    assert len(kernel_of_component(comps0[0])) == 16
    assert len(intersection_kernel(comps0)) == 16
    assert len(intersection_kernel(atlas.classes[1].components)) == 8
    assert len(intersection_kernel(atlas.classes[3].components)) == 4
