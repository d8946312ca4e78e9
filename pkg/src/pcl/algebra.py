"""Kernel and rank invariants of length-16 codes.

The kernel of a code C is the group of words k with C + k = C.  It is
invariant under translation of C, always contains 0, and for the codes
built here always contains ffff.  Weight-4 kernel words split by
support: left means support inside coordinates 0-7, right means inside
8-15, mixed means both halves are touched.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .doubling import SPACE16, Code
from .words import popcounts16, rank_gf2, xor_closure


def _words_occ(code) -> tuple[np.ndarray, np.ndarray]:
    if isinstance(code, Code):
        return code.words, code.occ
    words = np.asarray(code, dtype=np.uint16)
    occ = np.zeros(SPACE16, dtype=bool)
    occ[words] = True
    return words, occ


def kernel_words(code) -> np.ndarray:
    """All k with C + k = C, sorted, starting with 0.

    Any kernel word is a difference of codewords, so only the 2048
    differences against one fixed codeword are tested.
    """
    words, occ = _words_occ(code)
    cand = words ^ words[0]
    good = occ[words[None, :] ^ cand[:, None]].all(axis=1)
    return np.sort(cand[good])


def kernel_dim(kw: np.ndarray) -> int:
    n = len(kw)
    if n & (n - 1):
        raise ValueError("kernel size %d is not a power of two" % n)
    return n.bit_length() - 1


def rank_of(code) -> int:
    words, _ = _words_occ(code)
    return rank_gf2(words ^ words[0])


def coset_reps(code, kw: np.ndarray) -> np.ndarray:
    """One representative per kernel coset inside C, in word order."""
    words, _ = _words_occ(code)
    seen = np.zeros(SPACE16, dtype=bool)
    reps = []
    for w in words:
        if not seen[w]:
            reps.append(int(w))
            seen[w ^ kw] = True
    return np.array(reps, dtype=np.uint16)


def weight4_words(kw: np.ndarray) -> np.ndarray:
    return kw[popcounts16(kw) == 4]


def weight4_split(kw: np.ndarray) -> tuple[int, int, int]:
    """Counts of (left, right, mixed) weight-4 kernel words."""
    w4 = weight4_words(kw)
    l = int(((w4 & 0xFF00) == 0).sum())
    r = int(((w4 & 0x00FF) == 0).sum())
    return l, r, len(w4) - l - r


def pure_parts(kw: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Kernel words supported in one half, as 8-bit groups (left, right)."""
    pl = np.sort(kw[(kw & 0xFF00) == 0])
    pr = np.sort(kw[(kw & 0x00FF) == 0] >> 8)
    return pl.astype(np.uint16), pr.astype(np.uint16)


def half_pure_subgroup(kw: np.ndarray) -> np.ndarray:
    """Span of the half-supported weight-4 kernel words, inside the kernel."""
    w4 = weight4_words(kw)
    half = w4[((w4 & 0xFF00) == 0) | ((w4 & 0x00FF) == 0)]
    span = np.array(xor_closure(int(w) for w in half), dtype=np.uint16)
    ks = frozenset(int(k) for k in kw)
    if any(int(s) not in ks for s in span):
        raise AssertionError("half-pure span left the kernel")
    return span


def kernel_of_component(comp) -> tuple[int, ...]:
    """Kernel of a 16-word length-8 code, over even translations."""
    cs = frozenset(comp)
    return tuple(k for k in range(256)
                 if bin(k).count("1") % 2 == 0
                 and all((w ^ k) in cs for w in comp))


def intersection_kernel(components) -> tuple[int, ...]:
    """Words fixing every component of a partition by translation."""
    common = None
    for comp in components:
        ks = set(kernel_of_component(comp))
        common = ks if common is None else common & ks
    return tuple(sorted(common))


def translate(code: Code, t: int) -> Code:
    return Code(np.sort(code.words ^ np.uint16(t)), code.left, code.right, code.sigma)


@dataclass(frozen=True)
class LinearSpan:
    """A GF(2) subspace held by an independent basis."""

    basis: tuple

    @classmethod
    def from_words(cls, words) -> "LinearSpan":
        basis: dict = {}
        for w in words:
            w = int(w)
            while w:
                lead = w.bit_length() - 1
                if lead in basis:
                    w ^= basis[lead]
                else:
                    basis[lead] = w
                    break
        return cls(tuple(basis[k] for k in sorted(basis)))

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def words(self) -> np.ndarray:
        return np.array(xor_closure(self.basis), dtype=np.uint16)

    def __len__(self) -> int:
        return 1 << len(self.basis)

    def __contains__(self, w: int) -> bool:
        w = int(w)
        by_lead = {b.bit_length() - 1: b for b in self.basis}
        while w:
            lead = w.bit_length() - 1
            if lead not in by_lead:
                return False
            w ^= by_lead[lead]
        return True


def kernel(code) -> LinearSpan:
    """The kernel as a span; requires 0 to be a codeword.

    Closure under xor is asserted, not assumed: the full table of
    pairwise sums is checked against the kernel occupancy.
    """
    words, occ = _words_occ(code)
    if not occ[0]:
        raise ValueError("0 is not a codeword; normalize first")
    kw = kernel_words(code)
    kocc = np.zeros(SPACE16, dtype=bool)
    kocc[kw] = True
    if not kocc[kw[:, None] ^ kw[None, :]].all():
        raise AssertionError("kernel is not xor-closed")
    span = LinearSpan.from_words(kw)
    if len(span) != len(kw):
        raise AssertionError("kernel basis does not regenerate the kernel")
    return span


def rank(code) -> int:
    """Dimension of the xor-span of the code; requires 0 to be a codeword."""
    words, occ = _words_occ(code)
    if not occ[0]:
        raise ValueError("0 is not a codeword; normalize first")
    return rank_gf2(words)


@dataclass(eq=False)
class CosetDecomposition:
    """Cosets of a kernel subspace inside a code."""

    subspace: LinearSpan
    reps: np.ndarray
    index: np.ndarray

    def coset_of(self, w: int) -> int:
        i = int(self.index[w])
        if i < 0:
            raise KeyError("word %04x is not in the code" % w)
        return i

    def __len__(self) -> int:
        return len(self.reps)


def cosets(code, span: LinearSpan) -> CosetDecomposition:
    """Decompose the code into cosets of a subspace of its kernel.

    Representatives are the lexicographic minima; every coset is checked
    to have full size.
    """
    words, occ = _words_occ(code)
    lw = span.words()
    for b in span.basis:
        if not occ[words ^ np.uint16(b)].all():
            raise ValueError("subspace is not contained in the kernel")
    index = np.full(SPACE16, -1, dtype=np.int32)
    reps = []
    for w in words:
        if index[w] < 0:
            index[w ^ lw] = len(reps)
            reps.append(int(w))
    if len(reps) * len(lw) != len(words):
        raise AssertionError("cosets do not partition the code")
    return CosetDecomposition(span, np.array(reps, dtype=np.uint16), index)


def index2_subspaces(span: LinearSpan) -> list[LinearSpan]:
    """All hyperplanes (index-2 subspaces) of a span."""
    k = span.dimension
    if k == 0:
        raise ValueError("the trivial space has no hyperplanes")
    out = []
    for phi in range(1, 1 << k):
        j = (phi & -phi).bit_length() - 1
        bj = span.basis[j]
        gens = []
        for i, b in enumerate(span.basis):
            if i == j:
                continue
            gens.append(b ^ bj if (phi >> i) & 1 else b)
        out.append(LinearSpan.from_words(gens))
    return out
