import pytest
from hypothesis import given, settings

from graphs import N, P, g3, g4, g5, g7, signed_graphs, wnt
from oracles import induced_cycle_vertex_sets, max_disjoint, naive_optimum, weakly_negative_cycles
from signedcc.cycles import (
    Cycle,
    canonical_rotation,
    condition_theorem_check,
    enumerate_weakly_negative_cycles,
    induced_cycles,
    is_clusterable,
    max_disjoint_family,
    max_edge_disjoint_wnc_packing,
    strongly_positive_triangles,
    triangle_chain_components,
    triangle_condition_check,
)
from signedcc.errors import EnumerationTruncated
from signedcc.graph import build_graph, disjoint_union
from signedcc.oracle import count_disagreements

K3_POS = build_graph(3, [(0, 1, P), (0, 2, P), (1, 2, P)])
C4_WN = build_graph(4, [(0, 1, P), (1, 2, P), (2, 3, P), (0, 3, N)])
C4_WN_CHORD = build_graph(4, [(0, 1, P), (1, 2, P), (2, 3, P), (0, 3, N), (0, 2, P)])


def test_canonical_rotation():
    assert canonical_rotation([3, 1, 2]) == (1, 2, 3)
    assert canonical_rotation([2, 0, 3, 1]) == (0, 2, 1, 3)
    assert canonical_rotation([0, 3, 2, 1]) == (0, 1, 2, 3)


def test_cycle_from_vertices():
    c = Cycle.from_vertices(wnt(), [2, 0, 1])
    assert c.vertices == (0, 1, 2) and c.length == 3
    assert c.negative_count == 1 and c.weakly_negative and not c.strongly_positive
    with pytest.raises(ValueError):
        Cycle.from_vertices(g5(), [0, 1, 3])


def test_strongly_positive_triangles():
    assert strongly_positive_triangles(K3_POS) == [(0, 1, 2)]
    assert strongly_positive_triangles(wnt()) == []
    assert strongly_positive_triangles(g7()) == [(0, 1, 2), (2, 3, 4)]


def test_triangle_chain_components():
    assert triangle_chain_components(g7()) == [frozenset(range(5))]
    two = disjoint_union(K3_POS, K3_POS)
    assert triangle_chain_components(two) == [{0, 1, 2}, {3, 4, 5}]
    assert triangle_chain_components(g3()) == []


def test_enumerate_examples():
    cycles = enumerate_weakly_negative_cycles(wnt(), 3)
    assert len(cycles) == 1 and cycles[0].vertices == (0, 1, 2)
    assert (1, 2) in cycles[0].edges
    assert enumerate_weakly_negative_cycles(K3_POS) == []
    cycles = enumerate_weakly_negative_cycles(g3(), 4)
    assert [c.vertices for c in cycles] == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]


def test_enumerate_respects_length_bound():
    assert [c.length for c in enumerate_weakly_negative_cycles(C4_WN, 4)] == [4]
    assert enumerate_weakly_negative_cycles(C4_WN, 3) == []


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=7))
def test_enumeration_matches_exhaustive_search(g):
    got = enumerate_weakly_negative_cycles(g)
    assert all(c.negative_count == 1 and len(set(c.vertices)) == c.length for c in got)
    assert {c.edge_set for c in got} == weakly_negative_cycles(g)
    assert len(got) == len({c.vertices for c in got})


def test_packing_examples():
    assert max_edge_disjoint_wnc_packing(g3())[0] == 1
    size, witness = max_edge_disjoint_wnc_packing(g5())
    assert size == 2 and [c.vertices for c in witness] == [(0, 1, 2), (3, 4, 5)]
    assert max_edge_disjoint_wnc_packing(g4())[0] == 1


def test_packing_truncation_guard():
    with pytest.raises(EnumerationTruncated):
        max_edge_disjoint_wnc_packing(g4(), 3)
    assert max_edge_disjoint_wnc_packing(g4(), 3, allow_truncated=True)[0] == 1
    with pytest.raises(EnumerationTruncated):
        condition_theorem_check(g4(), 4)


def test_max_disjoint_family_lexicographic():
    # 0 conflicts with 1; {1, 2} and {0, 2} both size 2 -> {0, 2}
    assert max_disjoint_family([0b011, 0b110, 0b1000]) == (2, [0, 2])
    assert max_disjoint_family([]) == (0, [])


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=6))
def test_packing_is_exact_and_disjoint(g):
    size, witness = max_edge_disjoint_wnc_packing(g)
    assert size == len(witness) == max_disjoint(weakly_negative_cycles(g))
    used = set()
    for c in witness:
        assert not used & c.edge_set
        used |= c.edge_set


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=7))
def test_packing_is_lower_bound(g):
    assert max_edge_disjoint_wnc_packing(g)[0] <= naive_optimum(g)


def test_clusterable_examples():
    ok, cert = is_clusterable(build_graph(3, [(0, 1, P), (1, 2, N)]))
    assert ok and cert.clusters == ({0, 1}, {2})
    ok, witness = is_clusterable(wnt())
    assert not ok and witness.vertices == (0, 1, 2) and witness.weakly_negative
    assert is_clusterable(g3())[0] is False


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=7))
def test_clusterability_consistency(g):
    ok, cert = is_clusterable(g)
    assert ok == (naive_optimum(g) == 0)
    assert ok == (not weakly_negative_cycles(g))
    if ok:
        assert count_disagreements(g, cert).total == 0
    else:
        assert cert.weakly_negative


def test_triangle_condition_examples():
    ok, bad = triangle_condition_check(C4_WN)
    assert not ok and [c.vertices for c in bad] == [(0, 1, 2, 3)]
    assert triangle_condition_check(C4_WN_CHORD) == (True, [])
    assert triangle_condition_check(g3()) == (True, [])


def test_two_negative_induced_cycle_is_allowed():
    g = build_graph(4, [(0, 1, N), (1, 2, P), (2, 3, N), (0, 3, P)])
    assert triangle_condition_check(g)[0]


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=7))
def test_induced_cycles_match_subset_search(g):
    assert {frozenset(c.vertices) for c in induced_cycles(g)} == induced_cycle_vertex_sets(g)
    ok, bad = triangle_condition_check(g)
    expected = {
        s
        for s in induced_cycle_vertex_sets(g)
        if len(s) >= 4
        and sum(g.sign(u, v) < 0 for u in s for v in s if u < v and g.has_edge(u, v)) <= 1
    }
    assert {frozenset(c.vertices) for c in bad} == expected
    assert ok == (not expected)


def test_condition_theorem_examples():
    ok, triple = condition_theorem_check(g3())
    assert not ok
    assert [c.vertices for c in triple] == [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
    assert condition_theorem_check(g4()) == (True, None)
    assert condition_theorem_check(g5()) == (True, None)


def test_optimum_additive_over_disjoint_union():
    for a, b in [(g3(), g4()), (wnt(), g5()), (g4(), g4())]:
        assert naive_optimum(disjoint_union(a, b)) == naive_optimum(a) + naive_optimum(b)
