"""Enumeration and checks for 1-perfect codes of length 7 and their extensions.

A 1-perfect code of length 7 is a 16-subset of F_2^7 whose radius-1 balls
tile the space.  There are 30 such codes through the zero word and 240 in
total.  Parity extension and puncturing move between lengths 7 and 8, and
the doubled codes of length 16 are recognized by puncturing down to
length 15 and checking the same tiling property there.
"""

from __future__ import annotations

from itertools import combinations

import numpy as np

from .words import popcounts16, weight

N7 = 7
SPACE7 = 1 << N7


def ball(w: int, n: int = N7) -> int:
    """Occupancy mask (as a 2^n-bit int) of the radius-1 ball around w."""
    m = 1 << w
    for i in range(n):
        m |= 1 << (w ^ (1 << i))
    return m


def hamming7() -> tuple:
    """The linear perfect code whose check matrix columns are 1..7 in binary."""
    out = []
    for w in range(SPACE7):
        s = 0
        for i in range(N7):
            if (w >> i) & 1:
                s ^= i + 1
        if s == 0:
            out.append(w)
    return tuple(out)


def is_perfect(words, n: int = N7) -> bool:
    """Radius-1 balls around the words tile F_2^n exactly."""
    if len(words) * (n + 1) != (1 << n):
        return False
    cover = 0
    for w in words:
        b = ball(w, n)
        if cover & b:
            return False
        cover |= b
    return cover == (1 << (1 << n)) - 1


def enumerate_zero_subspace_codes() -> list:
    """All 4-dimensional subspaces of F_2^7 with minimum weight 3, via RREF bases.

    Every such subspace is a perfect code through zero; the enumeration walks
    all reduced echelon bases (one per subspace) and keeps those whose nonzero
    words all have weight at least 3.
    """
    out = []
    for pivots in combinations(range(N7), 4):
        nonpiv = [c for c in range(N7) if c not in pivots]
        free_slots = [[c for c in nonpiv if c > p] for p in pivots]
        total_free = sum(len(s) for s in free_slots)
        for bits in range(1 << total_free):
            rows = []
            k = 0
            for i, p in enumerate(pivots):
                r = 1 << p
                for c in free_slots[i]:
                    if (bits >> k) & 1:
                        r |= 1 << c
                    k += 1
                rows.append(r)
            span = [0]
            for r in rows:
                span += [w ^ r for w in span]
            if all(weight(w) >= 3 for w in span if w):
                out.append(tuple(sorted(span)))
    return sorted(out)


def enumerate_zero_codes_by_tiling() -> list:
    """All perfect codes through zero, found by exact ball tiling.

    Independent of the subspace route: backtracking on the lowest uncovered
    word, no linearity assumed.  Used as the oracle for the subspace count.
    """
    balls = [ball(w) for w in range(SPACE7)]
    full = (1 << SPACE7) - 1
    sols = []

    def search(cover, chosen):
        if cover == full:
            sols.append(tuple(sorted(chosen)))
            return
        w = (cover + 1 & ~cover).bit_length() - 1
        for c in [w] + [w ^ (1 << i) for i in range(N7)]:
            b = balls[c]
            if not (cover & b):
                chosen.append(c)
                search(cover | b, chosen)
                chosen.pop()

    search(balls[0], [0])
    return sorted(set(sols))


def enumerate_perfect7() -> list:
    """The 240 distinct perfect codes of length 7 (translate closure of the 30)."""
    seen = set()
    for code in enumerate_zero_subspace_codes():
        for t in range(SPACE7):
            seen.add(tuple(sorted(w ^ t for w in code)))
    return sorted(seen)


def extend_even(words7) -> tuple:
    """Append an overall parity coordinate (position 7)."""
    return tuple(sorted(w | ((weight(w) & 1) << N7) for w in words7))


def puncture(words, i: int) -> tuple:
    """Delete coordinate i (words become one bit shorter)."""
    out = []
    for w in words:
        out.append(((w >> (i + 1)) << i) | (w & ((1 << i) - 1)))
    return tuple(sorted(out))


def puncture16_np(words: np.ndarray, i: int) -> np.ndarray:
    """Vectorized coordinate deletion for length-16 word arrays."""
    w = words.astype(np.uint32)
    return (((w >> (i + 1)) << i) | (w & ((1 << i) - 1))).astype(np.uint16)


def tiles15(pw: np.ndarray) -> bool:
    """Do radius-1 balls around these length-15 words tile F_2^15?"""
    shifts = np.array([0] + [1 << i for i in range(15)], dtype=np.uint16)
    hits = (pw[:, None] ^ shifts[None, :]).ravel()
    counts = np.bincount(hits, minlength=1 << 15)
    return bool((counts == 1).all())


def is_extended_perfect8(words) -> bool:
    """16 words of length 8, even weights, pairwise distance at least 4."""
    ws = sorted(set(int(w) for w in words))
    if len(ws) != 16 or any(weight(w) & 1 for w in ws):
        return False
    return all(weight(a ^ b) >= 4 for a, b in combinations(ws, 2))


def is_extended_perfect16(words, thorough: bool = True) -> bool:
    """2048 even words of length 16 whose punctures tile F_2^15.

    The quick form (thorough=False) punctures at coordinate 0 only; with
    16 even-weight words per ball column that already forces distance 4.
    """
    ws = np.asarray(words, dtype=np.uint16)
    if len(ws) != 2048 or len(np.unique(ws)) != 2048:
        return False
    if (popcounts16(ws) % 2).any():
        return False
    coords = range(16) if thorough else (0,)
    return all(tiles15(puncture16_np(ws, i)) for i in coords)


def is_extended_perfect(words, n: int) -> bool:
    """Extended 1-perfect recognition for lengths 8 and 16."""
    if n == 8:
        if len(set(int(w) for w in words)) != 16:
            return False
        if any(weight(w) & 1 for w in words):
            return False
        return all(is_perfect(puncture(words, i)) for i in range(8))
    if n == 16:
        return is_extended_perfect16(words, thorough=True)
    raise ValueError("unsupported length %d" % n)
