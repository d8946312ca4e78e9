"""SQS extraction and folding over kernel subspaces."""

import numpy as np
import pytest

from pcl.algebra import LinearSpan, half_pure_subgroup, kernel_words
from pcl.fold import (SqsGraph, check_sqs, foldable, graph_from_json, is_sqs,
                      quotient_graph, sqs_of, vertex_sum_check)
from pcl.words import popcounts16, quad_name

# kappa -> (vertex count, loop multiplicity) of the whole-kernel fold
FOLD_SHAPE = {5: (64, 8), 6: (32, 16), 7: (16, 20), 8: (8, 28), 9: (4, 44)}


def test_sqs_of_witness(witnesses):
    code = witnesses[9]
    v = int(code.words[0])
    sqs = sqs_of(code, v)
    assert len(sqs) == 140
    assert all(bin(b).count("1") == 4 for b in sqs.blocks)
    assert is_sqs(sqs.blocks)
    with pytest.raises(ValueError):
        sqs_of(code, v ^ 1)


def test_sqs_constant_on_kernel_cosets(witnesses):
    code = witnesses[8]
    v0 = int(code.words[0])
    kw = kernel_words(code)
    v1 = v0 ^ int(kw[1])
    assert v1 != v0
    assert sqs_of(code, v0).blocks == sqs_of(code, v1).blocks


def test_check_sqs_rejects():
    with pytest.raises(ValueError):
        check_sqs((0b1111,) * 140)
    with pytest.raises(ValueError):
        check_sqs((0b111,) + (0b1111,) * 139)
    assert not is_sqs(())


def test_foldable_over_kernel(witnesses):
    for kappa in (8, 9):
        code = witnesses[kappa]
        span = LinearSpan.from_words(kernel_words(code))
        assert foldable(code, span)


def test_foldable_over_half_pure_subgroup(witnesses):
    code = witnesses[9]
    span = LinearSpan.from_words(half_pure_subgroup(kernel_words(code)))
    assert span.dimension == 8
    assert foldable(code, span)
    g = quotient_graph(code, span)
    assert g.order == 8
    assert vertex_sum_check(g)


def test_quotient_graph_shapes(witnesses):
    for kappa, (order, loop) in FOLD_SHAPE.items():
        g = quotient_graph(witnesses[kappa])
        assert g.order == order
        assert g.loop_count == loop
        assert (g.row_sums() == 140).all()
        assert vertex_sum_check(g)
        assert np.array_equal(g.mult, g.mult.T)
        assert (np.diag(g.mult) == loop).all()


def test_edge_labels_accessors(witnesses):
    g = quotient_graph(witnesses[9])
    assert g.edge_labels(0, 0) == g.loop_labels
    assert g.edge_labels(1, 2) == g.edge_labels(2, 1)
    lab = g.edge_labels(0, 1)
    assert len(lab) == g.mult[0, 1]
    assert all(bin(b).count("1") == 4 for b in lab)


def test_graph_json_roundtrip(witnesses):
    g = quotient_graph(witnesses[8])
    g.vertex_sts = ["3" * 16] * g.order
    d = g.to_json()
    reps, labels, mult, sts = graph_from_json(d)
    assert np.array_equal(reps, g.reps)
    assert labels == g.labels
    assert np.array_equal(mult, g.mult)
    assert sts == g.vertex_sts


def test_graph_json_roundtrip_without_sts(witnesses):
    g = quotient_graph(witnesses[9])
    reps, labels, mult, sts = graph_from_json(g.to_json())
    assert sts is None
    assert np.array_equal(mult, g.mult)


def test_graph_from_json_rejects_bad_multiplicity(witnesses):
    d = quotient_graph(witnesses[9]).to_json()
    d["edges"][0]["multiplicity"] += 1
    with pytest.raises(ValueError):
        graph_from_json(d)


def test_to_dot_and_csv(witnesses):
    g = quotient_graph(witnesses[9])
    dot = g.to_dot()
    assert dot.startswith("graph fold {")
    assert dot.rstrip().endswith("}")
    assert 'v0 [label="0"];' in dot
    assert ("v0 -- v0 [label=\"%d\"];" % g.loop_count) in dot
    csv = g.to_csv()
    rows = csv.strip().split("\n")
    assert len(rows) == g.order
    assert [int(x) for x in rows[0].split(",")] == list(g.mult[0])


def test_dot_includes_sts_labels(witnesses):
    g = quotient_graph(witnesses[9])
    g.vertex_sts = ["2" * 16] * g.order
    assert 'v0 [label="0\\n%s"];' % ("2" * 16) in g.to_dot()


def test_loop_labels_live_in_kernel(witnesses):
    code = witnesses[7]
    g = quotient_graph(code)
    kw = {int(w) for w in kernel_words(code)}
    assert set(g.loop_labels) <= kw
    assert all(quad_name(b) for b in g.loop_labels)
