"""Named quadruple families and pair-partition algebra on coordinates 0..f.

The left-half families X and Y are the 14 weight-4 codeword supports of
the extended Hamming code on [0,7] whose weight-4 lines through 0 are X;
Y collects the complements of X inside [0,7], and Z mirrors X and Y
into [8,f] by the involution p -> f-p.  Loops and links of folded codes
are described by unions of these families and by products of pair
partitions of the two halves.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .words import mask_of, parse_quad, points_of, quad_name

X = tuple(parse_quad(s) for s in
          ("0123", "0145", "0167", "0247", "0256", "0346", "0357"))


def left_complement(q: int) -> int:
    """Complement of a left-half quadruple within [0,7]."""
    if q & ~0xFF:
        raise ValueError("not a left-half quadruple: %s" % quad_name(q))
    return q ^ 0xFF


def supplement(quads, s: int) -> tuple:
    """Image of a quadruple set under p -> s-p, sorted."""
    out = []
    for q in quads:
        pts = points_of(q)
        if max(pts) > s:
            raise ValueError("coordinate above %x in %s" % (s, quad_name(q)))
        out.append(mask_of(s - p for p in pts))
    return tuple(sorted(out, key=points_of))


Y = tuple(left_complement(q) for q in X)
Z = supplement(X + Y, 0xF)

A = X[:3]
B = X[3:]
A_PRIME = tuple(left_complement(q) for q in A)
B_PRIME = tuple(left_complement(q) for q in B)
A0 = X[:1]
A1 = X[1:3]
B0 = X[3:5]
B1 = X[5:7]
A0_PRIME = tuple(left_complement(q) for q in A0)
A1_PRIME = tuple(left_complement(q) for q in A1)
B0_PRIME = tuple(left_complement(q) for q in B0)
B1_PRIME = tuple(left_complement(q) for q in B1)

X_PRIME = tuple(sorted(Y + Z, key=points_of))       # loop family for kappa=7
Z_PRIME = tuple(sorted(Z + A_PRIME, key=points_of))  # kappa=6
Z0 = tuple(sorted(Z + A0_PRIME, key=points_of))      # kappa=5


def fano_families() -> dict:
    return {
        "X": X, "Y": Y, "Z": Z, "X'": X_PRIME,
        "A": A, "B": B, "A'": A_PRIME, "B'": B_PRIME,
        "A_0": A0, "A_1": A1, "B_0": B0, "B_1": B1,
        "A_0'": A0_PRIME, "A_1'": A1_PRIME, "B_0'": B0_PRIME, "B_1'": B1_PRIME,
        "Z'": Z_PRIME, "Z_0": Z0,
    }


def quad_key(q: int):
    return tuple(points_of(q))


def s_partition(quads, sizes, descending: bool = True) -> list:
    """Split a quadruple set into lexicographic blocks of the given sizes.

    Descending means earlier blocks hold lexicographically larger
    quadruples; ascending the opposite.
    """
    if sum(sizes) != len(quads):
        raise ValueError("block sizes %s do not sum to %d" % (sizes, len(quads)))
    ordered = sorted(quads, key=quad_key, reverse=descending)
    out = []
    at = 0
    for s in sizes:
        out.append(tuple(ordered[at:at + s]))
        at += s
    return out


def expected_loop(kappa: int) -> tuple:
    """Loop label set prescribed for a fold over the kernel.

    Z plus the 2^(kappa-4)-1 lexicographically largest elements of Y,
    plus X from kappa=8 on.  The kappa=9 loop additionally holds one
    full product, checked separately since its identity is free.
    """
    if kappa not in (5, 6, 7, 8, 9):
        raise ValueError("kappa %d outside [5,9]" % kappa)
    ytop = min(len(Y), (1 << (kappa - 4)) - 1)
    fam = Z + tuple(sorted(Y, key=quad_key, reverse=True)[:ytop])
    if kappa >= 8:
        fam = fam + X
    return tuple(sorted(fam, key=quad_key))


LOOP_MULTIPLICITY = {5: 15, 6: 17, 7: 21, 8: 28, 9: 44}

# Intra-link families per vertex, keyed by the xor of paired vertex labels
# inside one block of the fold; discovered labelings must realize these.
INTRA_TABLE = {
    7: {1: X},
    6: {1: B_PRIME, 2: B, 3: A},
    5: {1: A1_PRIME, 2: B0_PRIME, 3: B1_PRIME,
        4: B1, 5: B0, 6: A1, 7: A0},
}

@dataclass(frozen=True)
class PairPartition:
    """A partition of [0,7] into four pairs, pairs sorted by minimum."""

    pairs: tuple

    def __post_init__(self):
        flat = sorted(p for ab in self.pairs for p in ab)
        if flat != list(range(8)):
            raise ValueError("pairs %s do not partition [0,7]" % (self.pairs,))
        if list(self.pairs) != sorted((min(ab), max(ab)) for ab in self.pairs):
            raise ValueError("pairs must be stored sorted by minimum")

    @property
    def name(self) -> str:
        (_, k), (_, l), (_, m), _ = self.pairs
        return "%d_%d^%d" % (k, l, m)

    def masks(self) -> tuple:
        return tuple(mask_of(ab) for ab in self.pairs)

    def __str__(self) -> str:
        return self.name


def pair_partition(k: int, l: int, m: int) -> PairPartition:
    """Decode a k_l^m tag: pair 0 with k, then the least free point with
    l, then the least free with m; the last pair is forced."""
    pairs = []
    free = set(range(8))
    for partner in (k, l, m):
        a = min(free)
        if partner not in free or partner == a:
            raise ValueError("tag %d_%d^%d has no consistent pairing" % (k, l, m))
        pairs.append((a, partner))
        free -= {a, partner}
    pairs.append((min(free), max(free)))
    return PairPartition(tuple(pairs))


def parse_pair_name(s: str) -> PairPartition:
    k, rest = s.split("_")
    l, m = rest.split("^")
    return pair_partition(int(k), int(l), int(m))


def enumerate_pair_partitions() -> list[PairPartition]:
    """All 105 pair partitions of [0,7], sorted by name tag."""
    out = []

    def rec(free, pairs):
        if not free:
            out.append(PairPartition(tuple(pairs)))
            return
        a = min(free)
        for b in sorted(free - {a}):
            rec(free - {a, b}, pairs + [(a, b)])

    rec(frozenset(range(8)), [])
    return out


REGISTRY_TAGS = """
1_a=1_3^5 2_a=2_3^7 3_a=3_2^7 4_a=4_5^7 5_a=5_4^6 6_a=6_7^4 7_a=7_6^5
1_b=1_3^6 2_b=2_3^6 3_b=3_2^6 4_b=4_5^6 5_b=5_4^7 6_b=6_7^5 7_b=7_6^4
1_c=1_3^7 2_c=2_3^5 3_c=3_2^5 4_c=4_6^5 4_d=4_6^7 4_e=4_7^6 5_c=5_7^4
5_d=5_7^6 5_e=5_6^7 6_c=6_4^7 6_d=6_4^5 6_e=6_5^4 7_c=7_5^6 7_d=7_5^4
7_e=7_4^5
1_d=1_5^4 1_e=1_6^7 1_f=1_4^5 2_d=2_5^7 2_e=2_4^6 2_f=2_6^4
3_d=3_4^7 3_e=3_7^4 3_f=3_5^6 4_f=4_3^6 4_g=4_2^7 4_h=4_5^3
5_f=5_2^6 5_g=5_3^7 6_f=6_2^5 6_g=6_7^3 7_f=7_6^3 7_g=7_3^5
1_g=1_4^7 1_h=1_4^6 1_i=1_7^6 1_j=1_5^7 1_k=1_6^5 2_g=2_7^6 2_h=2_5^6
2_i=2_4^7 2_j=2_7^5 2_k=2_4^5 3_g=3_7^6 3_h=3_7^5 3_i=3_4^6 3_j=3_6^7
4_i=4_2^6 4_j=4_3^5 5_h=5_6^4 5_i=5_4^3 5_j=5_2^4 5_k=5_6^3 6_h=6_3^5
6_i=6_3^4 6_j=6_5^7 6_k=6_5^3 7_h=7_5^3 7_i=7_2^5 7_j=7_3^4
""".split()


def partition_registry() -> dict:
    """Short letter names for the pair partitions used in link tables.

    The tag 7_2^3 admits no consistent pairing under the decode rule, so
    its would-be short name 7_k is not registered.
    """
    reg = {}
    for entry in REGISTRY_TAGS:
        alias, tag = entry.split("=")
        reg[alias] = parse_pair_name(tag)
    return reg


def product(a: PairPartition, b: PairPartition) -> tuple:
    """The 16 quadruples (left pair of a) + (right pair of b shifted by 8)."""
    quads = []
    for am in a.masks():
        for bm in b.masks():
            quads.append(am | (bm << 8))
    return tuple(sorted(quads, key=quad_key))


def loq_split(p) -> list:
    """Quarters of a product: one per left pair, in lexicographic order."""
    rec = recognize_product(p)
    if rec is None or rec[0] != "product":
        raise ValueError("not a product of pair partitions")
    groups: dict = {}
    for q in p:
        groups.setdefault(q & 0xFF, []).append(q)
    return [tuple(sorted(groups[lp], key=quad_key))
            for lp in sorted(groups, key=points_of)]


def recognize_product(quads):
    """Identify a full product or a single quarter.

    Returns ("product", a, b) for a 16-set, ("quarter", leftPair, b) for
    a 4-set with one left pair, or None.
    """
    quads = tuple(quads)
    pts = [points_of(q) for q in quads]
    if any(len(p) != 4 for p in pts):
        return None
    lefts = sorted(set(q & 0xFF for q in quads))
    rights = sorted(set(q >> 8 for q in quads))
    if any(bin(l).count("1") != 2 for l in lefts):
        return None
    if any(bin(r).count("1") != 2 for r in rights):
        return None
    try:
        bpp = PairPartition(tuple(sorted((min(points_of(r)), max(points_of(r)))
                                         for r in rights)))
    except ValueError:
        return None
    if len(quads) == 16 and len(lefts) == 4 and len(rights) == 4:
        try:
            app = PairPartition(tuple(sorted((min(points_of(l)), max(points_of(l)))
                                             for l in lefts)))
        except ValueError:
            return None
        if set(quads) == set(product(app, bpp)):
            return ("product", app, bpp)
        return None
    if len(quads) == 4 and len(lefts) == 1 and len(rights) == 4:
        return ("quarter", lefts[0], bpp)
    return None
