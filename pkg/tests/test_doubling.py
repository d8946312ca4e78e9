"""Doubling two extended partitions into a length-16 code."""

import numpy as np
import pytest

from pcl.doubling import Code, double, normalize
from pcl.perfect import is_extended_perfect16
from pcl.scan import make_code
from pcl.words import left, parse_sigma, popcounts16, right


def test_double_shape_and_metadata(atlas):
    sigma = parse_sigma("45026713")
    code = make_code(atlas, 0, 0, sigma)
    assert len(code) == 2048
    assert code.words.dtype == np.uint16
    assert (np.diff(code.words.astype(np.int32)) > 0).all()
    assert (popcounts16(code.words) % 2 == 0).all()
    assert (code.left, code.right, code.sigma) == (0, 0, sigma)
    assert code.label == "(0,0,45026713)"


def test_double_is_extended_perfect(atlas):
    code = make_code(atlas, 1, 3, parse_sigma("41056327"))
    assert is_extended_perfect16(code.words, thorough=True)


def test_double_respects_sigma(atlas):
    sigma = parse_sigma("52637140")
    code = make_code(atlas, 0, 3, sigma)
    lows = [set(c) for c in atlas.classes[0].components]
    highs = [set(c) for c in atlas.classes[3].components]
    for w in code.words[::97]:
        w = int(w)
        i = next(k for k, c in enumerate(lows) if left(w) in c)
        assert right(w) in highs[sigma[i]]


def test_membership_helpers(atlas):
    code = make_code(atlas, 0, 0, tuple(range(8)))
    w = int(code.words[5])
    assert w in code
    assert len(code.word_set) == 2048
    hole = next(x for x in range(1 << 16) if not code.occ[x])
    assert hole not in code


def test_normalize(atlas):
    base = make_code(atlas, 0, 1, parse_sigma("51304276"))
    norm, t = normalize(base)
    assert t == int(base.words[0])
    assert int(norm.words[0]) == 0
    assert norm.sigma == base.sigma
    again, t0 = normalize(norm)
    assert t0 == 0 and again is norm
    shifted = Code(np.sort(norm.words ^ np.uint16(0x1342)),
                   base.left, base.right, base.sigma)
    norm2, t2 = normalize(shifted)
    assert t2 == int(shifted.words[0])
    assert int(norm2.words[0]) == 0
    with pytest.raises(ValueError):
        normalize(Code(np.array([], dtype=np.uint16)))


def test_label_without_metadata():
    c = Code(np.arange(16, dtype=np.uint16))
    assert c.label == "(None,None,?)"
