"""Partitions of F_2^7 into perfect codes and their even extensions.

The pipeline enumerates every partition of the 128 length-7 words into
eight perfect codes, classifies them up to coordinate permutation and
translation, extends the class representatives by a parity bit, and
classifies the extensions up to coordinate permutation and even
translation.  Two length-7 classes merge under extension, leaving ten
extended classes.  The Atlas bundles the extended representatives for
downstream pairing.

Class ids are the rank of the class canonical form (minimal image byte
string), so the numbering is independent of enumeration order.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .canon import UNASSIGNED, minimal_image7, minimal_image8, relabel_np
from .perfect import enumerate_perfect7, extend_even, is_perfect
from .words import parse_word, word_hex

N7 = 7
SPACE7 = 128

Partition7 = tuple  # 8 components, each a sorted tuple of 16 length-7 words
Partition8 = tuple  # 8 components, each a sorted tuple of 16 length-8 words


def enumerate_partitions7() -> list[Partition7]:
    """All partitions of F_2^7 into eight perfect codes, in branching order.

    Branches on the component containing the lowest uncovered word, so
    each partition appears exactly once with components ordered by their
    minimum element.
    """
    codes = enumerate_perfect7()
    masks = []
    for c in codes:
        m = 0
        for w in c:
            m |= 1 << w
        masks.append(m)
    through = [[] for _ in range(SPACE7)]
    for i, c in enumerate(codes):
        for w in c:
            through[w].append(i)
    out: list[Partition7] = []
    full = (1 << SPACE7) - 1

    def rec(covered: int, chosen: list[int]) -> None:
        if covered == full:
            out.append(tuple(tuple(sorted(codes[i])) for i in chosen))
            return
        w = ((covered + 1) & ~covered).bit_length() - 1
        for i in through[w]:
            if masks[i] & covered == 0:
                chosen.append(i)
                rec(covered | masks[i], chosen)
                chosen.pop()

    rec(0, [])
    return out


def check_partition7(p: Partition7) -> None:
    seen: set = set()
    for comp in p:
        if not is_perfect(comp):
            raise ValueError("component is not a perfect code")
        seen.update(comp)
    if len(seen) != SPACE7 or len(p) != 8:
        raise ValueError("components do not partition F_2^7")


def partition_col(p: Partition7) -> np.ndarray:
    col = np.full(SPACE7, UNASSIGNED, dtype=np.uint8)
    for i, comp in enumerate(p):
        col[list(comp)] = i
    return col


def extended_col(p8: Partition8) -> np.ndarray:
    col = np.full(256, UNASSIGNED, dtype=np.uint8)
    for i, comp in enumerate(p8):
        col[list(comp)] = i
    return col


def canonical_form(p, extended: bool = False) -> bytes:
    """Minimal-image byte string; equal exactly for equivalent partitions."""
    if extended:
        return bytes(minimal_image8(extended_col(p)))
    return bytes(minimal_image7(partition_col(p)))


def classify_partitions(parts: list, extended: bool = False) -> list[int]:
    """Class id per partition; ids are dense ranks of the canonical forms."""
    forms = {}
    for p in parts:
        key = tuple(tuple(sorted(comp)) for comp in p)
        if key not in forms:
            forms[key] = canonical_form(p, extended)
    ranked = {f: i for i, f in enumerate(sorted(set(forms.values())))}
    return [ranked[forms[tuple(tuple(sorted(c)) for c in p)]] for p in parts]


def _generators7() -> list[np.ndarray]:
    idx = np.arange(SPACE7)
    swap01 = ((idx & ~3) | ((idx & 1) << 1) | ((idx >> 1) & 1)).astype(np.uint8)
    cyc = np.zeros(SPACE7, dtype=np.uint8)
    for i in range(N7):
        cyc |= (((idx >> i) & 1) << ((i + 1) % N7)).astype(np.uint8)
    gens = [swap01, cyc]
    for i in range(N7):
        gens.append((idx ^ (1 << i)).astype(np.uint8))
    return gens


def orbit_classify7(parts: list[Partition7]) -> tuple[list[int], list[int], list[int]]:
    """Orbit-search classification of the full length-7 enumeration.

    Faster than per-partition canonical forms at census scale, and doubles
    as a completeness check: every generator image must land back inside
    the enumerated set.  Returns (class id per partition, representative
    index per class, orbit size per class), classes in first-seen order.
    """
    gens = _generators7()
    key_to_idx: dict[bytes, int] = {}
    cols = []
    for i, p in enumerate(parts):
        col = relabel_np(partition_col(p))
        cols.append(col)
        key_to_idx[col.tobytes()] = i
    if len(key_to_idx) != len(parts):
        raise AssertionError("duplicate partitions in enumeration")
    class_of = [-1] * len(parts)
    reps: list[int] = []
    sizes: list[int] = []
    for i in range(len(parts)):
        if class_of[i] >= 0:
            continue
        cid = len(reps)
        reps.append(i)
        frontier = [cols[i]]
        class_of[i] = cid
        size = 1
        while frontier:
            nxt = []
            for col in frontier:
                for g in gens:
                    img = np.empty(SPACE7, dtype=np.uint8)
                    img[g] = col
                    img = relabel_np(img)
                    j = key_to_idx.get(img.tobytes())
                    if j is None:
                        raise AssertionError("orbit left the enumerated set")
                    if class_of[j] < 0:
                        class_of[j] = cid
                        size += 1
                        nxt.append(img)
            frontier = nxt
        sizes.append(size)
    return class_of, reps, sizes


def extend_partition(p: Partition7) -> Partition8:
    return tuple(tuple(sorted(extend_even(comp))) for comp in p)


def is_linear_partition(p8: Partition8) -> bool:
    """True when the components are the cosets of one linear code."""
    base = next(comp for comp in p8 if 0 in comp)
    bs = frozenset(base)
    if any((a ^ b) not in bs for a in base for b in base):
        return False
    return all(frozenset(w ^ comp[0] for w in comp) == bs for comp in p8)


@dataclass
class ExtClass:
    """One extended partition class: a representative and its ancestry."""

    components: Partition8
    length7_classes: tuple[int, ...]
    linear: bool
    alias: str | None = None

    def to_json(self) -> dict:
        return {
            "alias": self.alias,
            "representative": [
                {"length": 8, "codewords": [word_hex(w, 8) for w in comp]}
                for comp in self.components
            ],
            "length7Classes": list(self.length7_classes),
            "linear": self.linear,
        }

    @classmethod
    def from_json(cls, d: dict) -> "ExtClass":
        comps = tuple(
            tuple(parse_word(s) for s in comp["codewords"])
            for comp in d["representative"]
        )
        return cls(comps, tuple(d["length7Classes"]), bool(d["linear"]), d.get("alias"))


@dataclass
class Atlas:
    """Extended partition classes plus length-7 census metadata."""

    classes: list[ExtClass]
    partition7_count: int
    orbit_sizes7: list[int]
    merged: list[tuple[int, ...]] = field(default_factory=list)

    @property
    def linear_class(self) -> int:
        return next(i for i, c in enumerate(self.classes) if c.linear)

    def to_json(self) -> dict:
        return {
            "classes": [dict(c.to_json(), id=i) for i, c in enumerate(self.classes)],
            "partition7Count": self.partition7_count,
            "orbitSizes7": self.orbit_sizes7,
            "merged": [list(m) for m in self.merged],
        }

    @classmethod
    def from_json(cls, d: dict) -> "Atlas":
        entries = sorted(d["classes"], key=lambda c: c["id"])
        return cls(
            [ExtClass.from_json(c) for c in entries],
            d["partition7Count"],
            list(d["orbitSizes7"]),
            [tuple(m) for m in d["merged"]],
        )

    def save(self, path: str) -> None:
        from .ioutil import atomic_write
        atomic_write(path, json.dumps(self.to_json(), indent=1) + "\n")

    @classmethod
    def load(cls, path: str) -> "Atlas":
        with open(path) as fh:
            return cls.from_json(json.load(fh))


def build_atlas() -> Atlas:
    """Enumerate, classify, extend and reclassify; the full desk census.

    Length-7 classes are found by orbit search and then renumbered by
    canonical form rank; the extended classes inherit the same rule.
    """
    parts = enumerate_partitions7()
    _, reps, sizes = orbit_classify7(parts)
    forms7 = [canonical_form(parts[r]) for r in reps]
    order7 = sorted(range(len(reps)), key=lambda i: forms7[i])
    sizes = [sizes[old] for old in order7]
    ext_reps = [extend_partition(parts[reps[old]]) for old in order7]
    groups: dict[bytes, list[int]] = {}
    for cid7, p8 in enumerate(ext_reps):
        key = canonical_form(p8, extended=True)
        groups.setdefault(key, []).append(cid7)
    classes = []
    merged = []
    for key in sorted(groups):
        members = groups[key]
        comps = tuple(sorted(ext_reps[members[0]]))
        classes.append(ExtClass(comps, tuple(members), is_linear_partition(comps)))
        if len(members) > 1:
            merged.append(tuple(members))
    return Atlas(classes, len(parts), sizes, merged)
