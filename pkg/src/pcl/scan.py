"""Invariant scans over the doubling permutation.

Doubling two fixed partition classes under different permutations
yields codes whose rank and kernel dimension depend on the permutation.
The scan walks permutations deterministically (an explicit list, a
seeded sample without replacement, or all 40320 in lexicographic
order), tabulates the invariants, and can keep the first code found per
kernel dimension.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .algebra import kernel_dim, kernel_words, rank_of
from .doubling import Code, double
from .partitions import Atlas
from .sts import fully_tabulated
from .words import sigma_str

FACT8 = 40320

# Class pairs and permutations recovered by earlier scans; each yields
# the stated kernel dimension and is exercised end to end in the tests.
KAPPA_WITNESSES: dict[int, tuple[int, int, str]] = {
    11: (0, 0, "01234567"),
    9: (0, 0, "45026713"),
    8: (0, 0, "15437062"),
    7: (0, 1, "51304276"),
    6: (0, 3, "52637140"),
    5: (1, 3, "41056327"),
}

# Scan order: the first pair produces kernel dimensions 8, 9 and 11 in
# quantity, the later pairs lead with 7, 6 and 5 respectively.
PRIORITY_PAIRS: tuple[tuple[int, int], ...] = ((0, 0), (0, 1), (0, 3), (1, 3))


@dataclass(frozen=True)
class ScanRow:
    """Invariants of one doubled code."""

    left: int
    right: int
    sigma: tuple
    rank: int
    kernel: int

    def to_json(self) -> dict:
        return {"sourceClass": self.left, "targetClass": self.right,
                "sigma": sigma_str(self.sigma),
                "rank": self.rank, "kernelDim": self.kernel}


def iter_sigmas(sample: int | None = None, seed: int = 0, explicit=None):
    """Permutations of [0,7] under the configured enumeration mode."""
    if explicit is not None:
        for s in explicit:
            yield tuple(s)
        return
    if sample is None or sample >= FACT8:
        yield from permutations(range(8))
        return
    rng = np.random.default_rng(seed)
    seen: set = set()
    while len(seen) < sample:
        s = tuple(int(x) for x in rng.permutation(8))
        if s not in seen:
            seen.add(s)
            yield s


def make_code(atlas: Atlas, left: int, right: int, sigma) -> Code:
    return double(atlas.classes[left].components,
                  atlas.classes[right].components,
                  tuple(sigma), left, right)


def witness_code(atlas: Atlas, kappa: int) -> Code:
    left, right, sigma = KAPPA_WITNESSES[kappa]
    return make_code(atlas, left, right, tuple(int(c) for c in sigma))


def scan_pair(atlas: Atlas, left: int, right: int,
              sample: int | None = None, seed: int = 0,
              sigmas=None) -> list[ScanRow]:
    """One invariant row per permutation, in enumeration order."""
    rows = []
    for sig in iter_sigmas(sample, seed, sigmas):
        code = make_code(atlas, left, right, sig)
        rows.append(ScanRow(left, right, sig, rank_of(code),
                            kernel_dim(kernel_words(code))))
    return rows


def find_representatives(atlas: Atlas, targets=(5, 6, 7, 8, 9),
                         pairs=PRIORITY_PAIRS, per_pair: int = 400,
                         seed: int = 0, time_budget: float | None = None,
                         prefer_tabulated: bool = True,
                         ) -> dict[int, tuple[int, int, tuple, Code]]:
    """One code per kernel dimension from a seeded permutation scan.

    Pairs are scanned in order with a fresh sample each; the result maps
    kernel dimension to (left, right, sigma, code).  Some codes with
    small kernels puncture to triple systems whose Pasch profiles match
    no type-table row; with prefer_tabulated the scan keeps the first
    code whose profiles all classify and falls back to the first found
    otherwise.  Deterministic for fixed atlas, pair list, sample size
    and seed; the optional time budget only cuts the scan short, never
    reorders it.
    """
    want = set(targets)
    found: dict[int, tuple[int, int, tuple, Code]] = {}
    settled: set[int] = set()
    start = time.monotonic()
    for left, right in pairs:
        for sig in iter_sigmas(per_pair, seed):
            if want <= settled:
                return found
            if time_budget is not None and time.monotonic() - start > time_budget:
                return found
            code = make_code(atlas, left, right, sig)
            kap = kernel_dim(kernel_words(code))
            if kap not in want or kap in settled:
                continue
            if not prefer_tabulated:
                found[kap] = (left, right, sig, code)
                settled.add(kap)
            elif fully_tabulated(code):
                found[kap] = (left, right, sig, code)
                settled.add(kap)
            elif kap not in found:
                found[kap] = (left, right, sig, code)
    return found
