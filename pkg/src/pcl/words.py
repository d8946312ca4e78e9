"""Bit-level primitives for binary words of length up to 16.

Words are plain ints; coordinates are numbered 0..f and rendered as hex
digits.  The left half of a length-16 word is coordinates 0-7 (low byte),
the right half is 8-f (high byte).  Bulk operations work on numpy arrays
of word values with table lookups for popcounts.
"""

from __future__ import annotations

import numpy as np

POP8 = np.array([bin(i).count("1") for i in range(256)], dtype=np.uint8)

_IDX16 = np.arange(1 << 16)
POP16 = (POP8[_IDX16 & 0xFF] + POP8[_IDX16 >> 8]).astype(np.uint8)
del _IDX16

HEX_DIGITS = "0123456789abcdef"


def weight(x: int) -> int:
    return int(x).bit_count()


def distance(v: int, w: int) -> int:
    return weight(v ^ w)


def diff_quadruple(v: int, w: int) -> tuple:
    """The four coordinates where v and w differ, ascending."""
    d = v ^ w
    if weight(d) != 4:
        raise ValueError("words are at distance %d, not 4" % weight(d))
    return tuple(points_of(d))


def popcounts16(a: np.ndarray) -> np.ndarray:
    """Weights of an array of 16-bit words."""
    return POP16[a]


def left(m: int) -> int:
    return m & 0xFF


def right(m: int) -> int:
    return m >> 8


def join(lo: int, hi: int) -> int:
    return lo | (hi << 8)


def points_of(mask: int):
    """Sorted coordinate list of a support mask."""
    return [i for i in range(16) if (mask >> i) & 1]


def mask_of(points) -> int:
    m = 0
    for p in points:
        m |= 1 << p
    return m


def quad_name(mask: int) -> str:
    """Render a support mask as its sorted hex coordinate string, e.g. 0x0f -> '0123'."""
    return "".join(HEX_DIGITS[i] for i in points_of(mask))


def parse_quad(name: str) -> int:
    return mask_of(HEX_DIGITS.index(ch) for ch in name)


def word_hex(w: int, n: int = 16) -> str:
    return format(w, "0%dx" % ((n + 3) // 4))


def parse_word(s: str) -> int:
    return int(s, 16)


def parse_sigma(s: str) -> tuple:
    """An 8-digit permutation string like '51304276'."""
    sigma = tuple(int(ch) for ch in s)
    if sorted(sigma) != list(range(8)):
        raise ValueError("not a permutation of 0..7: %r" % s)
    return sigma


def sigma_str(sigma) -> str:
    return "".join(str(i) for i in sigma)


def perm_word_map(perm, n: int) -> np.ndarray:
    """Word-level remap table for a coordinate permutation.

    Entry w of the result is the word obtained from w by moving bit i to
    position perm[i], for all words of n bits at once.
    """
    idx = np.arange(1 << n)
    out = np.zeros(1 << n, dtype=np.uint32 if n > 8 else np.uint8)
    for i in range(n):
        out |= (((idx >> i) & 1) << perm[i]).astype(out.dtype)
    return out


def apply_perm_mask(mask: int, perm) -> int:
    """Image of a support mask under a coordinate permutation."""
    out = 0
    for i in range(16):
        if (mask >> i) & 1:
            out |= 1 << perm[i]
    return out


def drop_bit(m: int, i: int) -> int:
    """Delete coordinate i from a mask, shifting higher coordinates down."""
    return ((m >> (i + 1)) << i) | (m & ((1 << i) - 1))


def swap_halves(m: int) -> int:
    return ((m & 0xFF) << 8) | (m >> 8)


def xor_closure(gens) -> list:
    """Span of a set of words under xor, as a sorted list (includes 0)."""
    span = {0}
    for g in gens:
        span |= {g ^ s for s in span}
    return sorted(span)


def rank_gf2(words) -> int:
    """Rank of a set of words viewed as GF(2) vectors."""
    basis = {}
    for w in words:
        w = int(w)
        while w:
            lead = w.bit_length() - 1
            if lead in basis:
                w ^= basis[lead]
            else:
                basis[lead] = w
                break
    return len(basis)
