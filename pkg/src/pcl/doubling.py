"""Length-16 codes from pairs of length-8 partitions.

Given two extended partitions (C_0..C_7) and (D_0..D_7) and a matching
sigma, the doubled code is the union over i of all words x | (y << 8)
with x in C_i and y in D_sigma(i).  Coordinates 0-7 are the low byte,
8-15 the high byte.  The result is an extended perfect code of length
16 with 2048 words, minimum distance 4 and all weights even.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .words import sigma_str

SPACE16 = 1 << 16


@dataclass(eq=False)
class Code:
    """A doubled code plus the recipe that produced it."""

    words: np.ndarray
    left: int | None = None
    right: int | None = None
    sigma: tuple | None = field(default=None)

    @cached_property
    def occ(self) -> np.ndarray:
        occ = np.zeros(SPACE16, dtype=bool)
        occ[self.words] = True
        return occ

    @cached_property
    def word_set(self) -> frozenset:
        return frozenset(int(w) for w in self.words)

    @property
    def label(self) -> str:
        s = sigma_str(self.sigma) if self.sigma is not None else "?"
        return "(%s,%s,%s)" % (self.left, self.right, s)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: int) -> bool:
        return bool(self.occ[w])


def double(left_components, right_components, sigma,
           left_id: int | None = None, right_id: int | None = None) -> Code:
    words = []
    for i, comp in enumerate(left_components):
        d = right_components[sigma[i]]
        lo = np.array(comp, dtype=np.uint16)
        hi = np.array(d, dtype=np.uint16) << 8
        words.append((lo[:, None] | hi[None, :]).ravel())
    allw = np.sort(np.concatenate(words))
    return Code(allw, left_id, right_id, tuple(sigma))


def normalize(code: Code) -> tuple[Code, int]:
    """Translate by the least codeword so 0 is a codeword; returns (code, t)."""
    if len(code.words) == 0:
        raise ValueError("empty code")
    t = int(code.words[0])
    if t == 0:
        return code, 0
    moved = Code(np.sort(code.words ^ np.uint16(t)),
                 code.left, code.right, code.sigma)
    return moved, t
