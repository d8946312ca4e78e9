"""Verdicts on the loop and link structure of folded codes.

A quotient graph carries three kinds of label sets: the loop shared by
every vertex (the weight-4 words of the fold subspace), pure links whose
labels live in a single half, and mixed links whose labels straddle the
halves.  Each subject is compared against the prescribed quadruple
families at one of four levels:

  exact      set equality in construction coordinates,
  relabeled  equality after relabeling points inside each half
             (independent permutations, optionally exchanging halves),
  spectrum   cardinalities agree but the sets could not be identified,
  fail       multiplicity mismatch or no decomposition at all.

Relabelings are certified subject by subject; no attempt is made to pin
one simultaneous relabeling for the whole graph, only existence per
loop or link.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import fano
from .algebra import LinearSpan, half_pure_subgroup, kernel_dim, kernel_words
from .canon import minimal_quadset8
from .doubling import Code
from .fold import SqsGraph, quotient_graph
from .words import points_of

LEVELS = ("exact", "relabeled", "spectrum", "fail")


@dataclass(frozen=True)
class Verdict:
    """Finding for one subject: a loop, a link, or a per-vertex invariant."""

    subject: str
    level: str
    expected: str
    observed: str
    detail: str = ""

    def __post_init__(self):
        if self.level not in LEVELS:
            raise ValueError("unknown verdict level %r" % (self.level,))

    def to_json(self) -> dict:
        d = {"subject": self.subject, "level": self.level,
             "expected": self.expected, "observed": self.observed}
        if self.detail:
            d["detail"] = self.detail
        return d


def worst(levels) -> str:
    at = 0
    for lv in levels:
        at = max(at, LEVELS.index(lv))
    return LEVELS[at]


def split_sides(labels) -> tuple[tuple, tuple, tuple]:
    """Split labels into (left 8-bit, right 8-bit, mixed 16-bit) masks."""
    left, right, mixed = [], [], []
    for m in labels:
        m = int(m)
        if m & 0xFF00 == 0:
            left.append(m)
        elif m & 0x00FF == 0:
            right.append(m >> 8)
        else:
            mixed.append(m)
    return tuple(left), tuple(right), tuple(mixed)


def _half_canons_match(aL, aR, bL, bR) -> bool:
    ca, cb = minimal_quadset8(aL), minimal_quadset8(aR)
    da, db = minimal_quadset8(bL), minimal_quadset8(bR)
    return (ca, cb) == (da, db) or (ca, cb) == (db, da)


def _pair_name(mask8: int) -> str:
    return "".join("%x" % p for p in points_of(mask8))


def _as_pair_partition(masks8):
    if len(masks8) != 4:
        return None
    try:
        return fano.PairPartition(tuple(sorted(
            (min(points_of(m)), max(points_of(m))) for m in masks8)))
    except ValueError:
        return None


def decompose_mixed(labels):
    """Split an all-mixed label set into whole products or whole quarters.

    Returns ("products", [(a, b), ...]) when the left pairs group by
    identical right sides into full pair partitions, ("quarters",
    [(leftPair, b), ...]) when every left pair carries a full right
    partition on its own, ("quarters-swapped", [(a, rightPair), ...])
    for the mirrored orientation, or None when none of the three fits.
    """
    by_left: dict[int, set] = {}
    by_right: dict[int, set] = {}
    for m in labels:
        m = int(m)
        lp, rp = m & 0xFF, m >> 8
        if bin(lp).count("1") != 2 or bin(rp).count("1") != 2:
            return None
        by_left.setdefault(lp, set()).add(rp)
        by_right.setdefault(rp, set()).add(lp)

    groups: dict[frozenset, list] = {}
    for lp, rs in by_left.items():
        groups.setdefault(frozenset(rs), []).append(lp)
    prods = []
    for rs, ls in groups.items():
        a = _as_pair_partition(sorted(ls))
        b = _as_pair_partition(sorted(rs))
        if a is None or b is None:
            prods = None
            break
        prods.append((a, b))
    if prods is not None:
        return ("products",
                sorted(prods, key=lambda ab: (ab[0].name, ab[1].name)))

    quarters = []
    for lp in sorted(by_left, key=points_of):
        b = _as_pair_partition(sorted(by_left[lp]))
        if b is None:
            quarters = None
            break
        quarters.append((lp, b))
    if quarters is not None:
        return ("quarters", quarters)

    swapped = []
    for rp in sorted(by_right, key=points_of):
        a = _as_pair_partition(sorted(by_right[rp]))
        if a is None:
            return None
        swapped.append((a, rp))
    return ("quarters-swapped", swapped)


_LOOP_NAME = {5: "Z_0", 6: "Z'", 7: "X'", 8: "X+Y+Z",
              9: "X+Y+Z and one full product"}


def verify_loops(G: SqsGraph, kappa: int) -> list[Verdict]:
    """Per-vertex verdicts for the loop label set.

    Every vertex shares one loop set by construction, so a single
    comparison is replicated across the graph.
    """
    fam = fano.expected_loop(kappa)
    want = fano.LOOP_MULTIPLICITY[kappa]
    obs = tuple(int(m) for m in G.loop_labels)
    obsL, obsR, obsM = split_sides(obs)
    famL, famR, famM = split_sides(fam)
    expected = "%s, %d labels" % (_LOOP_NAME[kappa], want)
    observed = "%d labels (%d left, %d right, %d mixed)" % (
        len(obs), len(obsL), len(obsR), len(obsM))
    detail = ""
    prod = None
    if len(obsM) == 16:
        rec = fano.recognize_product(obsM)
        if rec is not None and rec[0] == "product":
            prod = rec
    if len(obs) != want:
        level = "fail"
        if len(famL) % 2:
            detail = ("half-supported loop labels pair up under the "
                      "half complement, so the odd prescribed half "
                      "count cannot occur")
    else:
        pure_raw = tuple(m for m in obs
                         if (m & 0xFF00) == 0 or (m & 0x00FF) == 0)
        mixed_ok = prod is not None if kappa == 9 else not obsM
        if mixed_ok and set(pure_raw) == set(fam):
            level = "exact"
        elif mixed_ok and _half_canons_match(obsL, obsR, famL, famR):
            level = "relabeled"
        else:
            level = "spectrum"
        if prod is not None:
            detail = "mixed part is the product %s x %s" % (
                prod[1].name, prod[2].name)
    return [Verdict("loop@v%d" % v, level, expected, observed, detail)
            for v in range(G.order)]


def _family_names() -> dict:
    return {masks: name for name, masks in fano.fano_families().items()}


def verify_intra_links(G: SqsGraph, kappa: int) -> list[Verdict]:
    """Pure links against the prescribed per-vertex families, plus the
    28-label block invariant of loop and pure links at every vertex."""
    if kappa not in fano.INTRA_TABLE:
        raise ValueError(
            "intra-link prescriptions exist for kappa 5..7, got %d" % kappa)
    table = [fam for _, fam in sorted(fano.INTRA_TABLE[kappa].items())]
    names = _family_names()
    expected = "one of " + ", ".join(
        "%s(%d)" % (names[f], len(f)) for f in table)
    out = []
    incident: dict[int, list] = {v: [] for v in range(G.order)}
    for (i, j), labels in sorted(G.labels.items()):
        L, R, M = split_sides(labels)
        if M:
            continue
        incident[i].append(labels)
        incident[j].append(labels)
        subject = "link(%d,%d)" % (i, j)
        if L and R:
            out.append(Verdict(subject, "fail", expected,
                               "%d left and %d right labels on one link"
                               % (len(L), len(R))))
            continue
        side, masks8 = ("left", L) if L else ("right", R)
        obs_desc = "%d %s-half labels" % (len(masks8), side)
        got = None
        for fam in table:
            if side == "left" and set(masks8) == set(fam):
                got = ("exact", fam)
                break
        if got is None:
            canon = minimal_quadset8(masks8)
            for fam in table:
                if canon == minimal_quadset8(fam):
                    got = ("relabeled", fam)
                    break
        if got is None:
            for fam in table:
                if len(masks8) == len(fam):
                    got = ("spectrum", fam)
                    break
        if got is None:
            out.append(Verdict(subject, "fail", expected, obs_desc,
                               "no prescribed family of this size"))
        else:
            lv, fam = got
            note = ("size matches %s only" if lv == "spectrum"
                    else "matches %s") % names[fam]
            out.append(Verdict(subject, lv, expected, obs_desc, note))

    blk_exp = set(fano.X) | set(fano.Y) | set(fano.Z)
    expL, expR, _ = split_sides(sorted(blk_exp))
    for v in range(G.order):
        blk = set(int(m) for m in G.loop_labels)
        for labels in incident[v]:
            blk |= set(int(m) for m in labels)
        bL, bR, bM = split_sides(sorted(blk))
        observed = "%d labels (%d left, %d right, %d mixed)" % (
            len(blk), len(bL), len(bR), len(bM))
        if blk == blk_exp:
            lv = "exact"
        elif len(blk) == 28 and not bM and _half_canons_match(
                bL, bR, expL, expR):
            lv = "relabeled"
        elif len(blk) == 28:
            lv = "spectrum"
        else:
            lv = "fail"
        out.append(Verdict("block@v%d" % v, lv,
                           "loop and pure links union to X+Y+Z, 28 labels",
                           observed))
    return out


_CROSS_RULE = {9: "two full products", 8: "one full product",
               7: "at most three quarters", 6: "at most three quarters",
               5: "at most three quarters"}


def verify_cross_links(G: SqsGraph, kappa: int) -> list[Verdict]:
    """Mixed links decomposed into products or quarters, plus the
    112-label cross budget at every vertex."""
    if kappa not in _CROSS_RULE:
        raise ValueError(
            "cross-link prescriptions exist for kappa 5..9, got %d" % kappa)
    expected = _CROSS_RULE[kappa]
    out = []
    totals = [0] * G.order
    for (i, j), labels in sorted(G.labels.items()):
        L, R, M = split_sides(labels)
        if not M:
            continue
        subject = "link(%d,%d)" % (i, j)
        totals[i] += len(M)
        totals[j] += len(M)
        if L or R:
            out.append(Verdict(subject, "fail", expected,
                               "%d labels with %d half-supported among them"
                               % (len(labels), len(L) + len(R))))
            continue
        dec = decompose_mixed(M)
        if dec is None:
            profile = sorted(
                len(set(m >> 8 for m in M if (m & 0xFF) == lp))
                for lp in set(m & 0xFF for m in M))
            out.append(Verdict(subject, "fail", expected,
                               "%d labels, no whole-product or whole-quarter"
                               " split" % len(M),
                               "right fan-out per left pair: %s" % profile))
            continue
        kind, parts = dec
        if kind == "products":
            desc = "products " + ", ".join(
                "%sx%s" % (a.name, b.name) for a, b in parts)
            lv = ("exact" if kappa >= 8 and len(parts) == (kappa - 7)
                  else "spectrum")
        elif kind == "quarters":
            desc = "quarters " + ", ".join(
                "(%s)x%s" % (_pair_name(lp), b.name) for lp, b in parts)
            lv = "exact" if kappa <= 7 and len(parts) <= 3 else "spectrum"
        else:
            desc = "half-swapped quarters " + ", ".join(
                "%sx(%s)" % (a.name, _pair_name(rp)) for a, rp in parts)
            lv = "relabeled" if kappa <= 7 and len(parts) <= 3 else "spectrum"
        out.append(Verdict(subject, lv, expected, desc))

    in_loop = 16 if kappa == 9 else 0
    want = 112 - in_loop
    exp_sum = ("112 cross labels, %d on links and %d in the loop"
               % (want, in_loop) if in_loop else "112 cross labels on links")
    for v in range(G.order):
        out.append(Verdict("cross-sum@v%d" % v,
                           "exact" if totals[v] == want else "fail",
                           exp_sum, "%d" % totals[v]))
    return out


def _degree_verdicts(G: SqsGraph) -> list[Verdict]:
    rows = G.mult.sum(axis=1)
    return [Verdict("degree@v%d" % v, "exact" if int(r) == 140 else "fail",
                    "140", "%d" % int(r))
            for v, r in enumerate(rows)]


def _no_pure_link_verdicts(G: SqsGraph) -> list[Verdict]:
    pure = [e for e, labels in sorted(G.labels.items())
            if not split_sides(labels)[2]]
    if not pure:
        return [Verdict("pure-links", "exact",
                        "no pure links outside the loop", "none")]
    return [Verdict("pure-links", "fail", "no pure links outside the loop",
                    "%d pure links at %s" % (len(pure), pure))]


def _index2_verdicts(code: Code, kw: np.ndarray,
                     GK: SqsGraph) -> list[Verdict]:
    """Fold over the half-supported index-2 subgroup of a dimension-9
    kernel: loop of 28, and a perfect matching of product links whose
    labels rejoin the full-kernel loop."""
    L = LinearSpan.from_words(half_pure_subgroup(kw))
    GL = quotient_graph(code, span=L)
    out = []
    loop = tuple(int(m) for m in GL.loop_labels)
    oL, oR, oM = split_sides(loop)
    fam = fano.expected_loop(8)
    fL, fR, _ = split_sides(fam)
    observed = "%d labels (%d left, %d right, %d mixed)" % (
        len(loop), len(oL), len(oR), len(oM))
    if len(loop) != 28:
        lv = "fail"
    elif set(loop) == set(fam):
        lv = "exact"
    elif not oM and _half_canons_match(oL, oR, fL, fR):
        lv = "relabeled"
    else:
        lv = "spectrum"
    out.append(Verdict("half-fold loop", lv, "X+Y+Z, 28 labels", observed))

    kloop = set(int(m) for m in GK.loop_labels)
    met: dict[int, list] = {}
    for (i, j), labels in sorted(GL.labels.items()):
        ls = set(int(m) for m in labels)
        if not ls <= kloop:
            continue
        met.setdefault(i, []).append(j)
        met.setdefault(j, []).append(i)
        subject = "half-fold link(%d,%d)" % (i, j)
        rec = fano.recognize_product(sorted(ls)) if len(ls) == 16 else None
        is_prod = rec is not None and rec[0] == "product"
        folds = (ls | set(loop)) == kloop
        if is_prod and folds:
            out.append(Verdict(subject, "exact",
                               "one product rejoining the full-kernel loop",
                               "product %sx%s" % (rec[1].name, rec[2].name)))
        else:
            out.append(Verdict(subject, "fail",
                               "one product rejoining the full-kernel loop",
                               "%d labels, product=%s, rejoins=%s"
                               % (len(ls), is_prod, folds)))
    degrees = sorted(len(v) for v in met.values())
    matched = len(met) == GL.order and degrees == [1] * GL.order
    out.append(Verdict("half-fold matching",
                       "exact" if matched else "fail",
                       "every vertex on exactly one kernel-label link",
                       "degrees %s over %d vertices"
                       % (sorted(set(degrees)) or [0], len(met))))
    return out


def _assert_even_left_support(G: SqsGraph) -> None:
    sets = [G.loop_labels] + list(G.labels.values())
    for labels in sets:
        for m in labels:
            if bin(int(m) & 0xFF).count("1") % 2:
                raise AssertionError(
                    "label %04x has odd left support" % int(m))


@dataclass
class StructureReport:
    """Aggregated verdicts for one folded code."""

    kappa: int
    verdicts: tuple
    mult: np.ndarray

    @property
    def overall(self) -> str:
        return worst(v.level for v in self.verdicts)

    @property
    def passed(self) -> bool:
        return all(v.level != "fail" for v in self.verdicts)

    def counts(self) -> dict:
        c = dict.fromkeys(LEVELS, 0)
        for v in self.verdicts:
            c[v.level] += 1
        return c

    def failures(self) -> list:
        return [v for v in self.verdicts if v.level == "fail"]

    def summary(self) -> str:
        c = self.counts()
        return ("kappa=%d %s (%d exact, %d relabeled, %d spectrum, %d fail)"
                % (self.kappa, "pass" if self.passed else "FAIL",
                   c["exact"], c["relabeled"], c["spectrum"], c["fail"]))

    def to_json(self) -> dict:
        return {"kappa": self.kappa, "overall": self.overall,
                "passed": self.passed, "levelCounts": self.counts(),
                "verdicts": [v.to_json() for v in self.verdicts],
                "multiplicityMatrix": self.mult.tolist()}


def full_report(code: Code) -> StructureReport:
    """Run every structural check against the quotient graph of a code.

    Prescribed loop and link families exist for kernel dimensions 5
    through 9 only; anything else raises.
    """
    kw = kernel_words(code)
    kappa = kernel_dim(kw)
    if not 5 <= kappa <= 9:
        raise ValueError("loop and link prescriptions cover kernel "
                         "dimensions 5..9, got %d" % kappa)
    G = quotient_graph(code)
    _assert_even_left_support(G)
    verdicts = list(verify_loops(G, kappa))
    if kappa <= 7:
        verdicts += verify_intra_links(G, kappa)
    else:
        verdicts += _no_pure_link_verdicts(G)
    verdicts += verify_cross_links(G, kappa)
    verdicts += _degree_verdicts(G)
    if kappa == 9:
        verdicts += _index2_verdicts(code, kw, G)
    return StructureReport(kappa, tuple(verdicts), G.mult)
