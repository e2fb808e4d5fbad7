from hypothesis import given, settings

from graphs import N, P, example1, g3, g7, signed_graphs
from signedcc.algorithm import (
    MERGED,
    STEP1,
    STEP2,
    STEP3,
    STEP4,
    STEP5,
    PipelineState,
    cluster_pair_degrees,
    post_merge_pass,
    run_cc,
    run_pipeline,
    step1_peel,
    step2_triangle_chains,
    step3_matching,
    step4_singletons,
    step5_merge_once,
)
from signedcc.cycles import is_clusterable
from signedcc.graph import build_graph
from signedcc.oracle import count_disagreements


def through_step4(g):
    state = PipelineState.fresh(g)
    for step in (step1_peel, step2_triangle_chains, step3_matching, step4_singletons):
        state = step(state)
    return state


def groups(state):
    return [(sorted(c), tag) for c, tag in state.clusters]


def test_step1_examples():
    s = step1_peel(PipelineState.fresh(build_graph(3, [])))
    assert groups(s) == [([0], STEP1), ([1], STEP1), ([2], STEP1)] and not s.remaining
    assert [e.detail["reason"] for e in s.trace] == ["isolated"] * 3
    s = step1_peel(PipelineState.fresh(g3()))
    assert s.clusters == () and s.remaining == frozenset(range(4))


def test_step2_examples():
    s = step2_triangle_chains(step1_peel(PipelineState.fresh(g7())))
    assert groups(s) == [([0, 1, 2, 3, 4], STEP2)]
    s = step2_triangle_chains(step1_peel(PipelineState.fresh(g3())))
    assert s.clusters == ()


def test_step3_path_matching():
    path = build_graph(4, [(0, 1, P), (1, 2, P), (2, 3, P)])
    s = step3_matching(step2_triangle_chains(step1_peel(PipelineState.fresh(path))))
    assert groups(s) == [([0, 1], STEP3), ([2, 3], STEP3)]


def test_step3_ignores_negative_edges():
    g = build_graph(3, [(0, 1, N), (1, 2, N), (0, 2, P)])
    s = step3_matching(PipelineState.fresh(g))
    assert groups(s) == [([0, 2], STEP3)]


def test_step4_g3():
    s = through_step4(g3())
    assert groups(s) == [([0, 1], STEP3), ([2], STEP4), ([3], STEP4)]
    assert step4_singletons(s) == s


def test_step5_blocked_by_negative_edge():
    g = build_graph(4, [(0, 1, P), (2, 3, P), (1, 2, P), (0, 3, N)])
    s = step3_matching(PipelineState.fresh(g))
    assert groups(s) == [([0, 1], STEP3), ([2, 3], STEP3)]
    _, merged = step5_merge_once(s)
    assert not merged


def test_step5_prefers_larger_positive_degree():
    # {0,1} and {4,5} share two positive edges, {0,1} and {2,3} only one
    g = build_graph(6, [(0, 1, P), (2, 3, P), (4, 5, P), (1, 2, P), (0, 4, P), (1, 5, P)])
    s = step3_matching(PipelineState.fresh(g))
    s, merged = step5_merge_once(s)
    assert merged and groups(s)[0] == ([0, 1, 4, 5], MERGED)
    assert s.trace[-1].detail["d_plus"] == 2


def test_step5_tie_goes_to_smallest_pair():
    g = build_graph(6, [(0, 1, P), (2, 3, P), (4, 5, P), (1, 2, P), (3, 4, P)])
    s, merged = step5_merge_once(step3_matching(PipelineState.fresh(g)))
    assert merged and s.trace[-1].detail["pair"] == [0, 1]


def test_example1_degrees_and_replay():
    g = example1()
    s = through_step4(g)
    v = lambda *ids: sorted(i - 1 for i in ids)  # noqa: E731
    assert groups(s) == [
        (v(8), STEP1), (v(1, 3, 7), STEP2), (v(4, 5), STEP3), (v(2), STEP4), (v(6), STEP4)
    ]
    assert s.trace[0].detail["reason"] == "all-negative"
    dp, dm = cluster_pair_degrees(s)
    V2, V3, V4, V5 = 1, 2, 3, 4
    assert dm[V2, V3] and dm[V2, V4] and dm[V3, V5] and dm[V4, V5]
    assert dm[V2, V5] == 0 and dp[V2, V5] == 1
    assert dm[V3, V4] == 0 and dp[V3, V4] == 0

    s, merged = step5_merge_once(s)
    assert merged and s.trace[-1].detail["pair"] == [V2, V5]
    W1 = 1
    dp, dm = cluster_pair_degrees(s)
    assert dm[W1, V3] and dm[W1, V4] and dm[V3, V4] == 0 and dp[V3, V4] == 0
    assert step5_merge_once(s) == (s, False)

    clustering, trace = run_cc(g)
    assert [sorted(c) for c in clustering.clusters] == [v(8), v(1, 3, 6, 7), v(4, 5), v(2)]
    assert [e.step for e in trace] == [STEP1, STEP2, STEP3, STEP4, STEP4, STEP5]


def test_example1_post_merge_keeps_disagreements():
    g = example1()
    base, _ = run_cc(g)
    merged, _ = run_cc(g, post_merge=True)
    v = lambda *ids: sorted(i - 1 for i in ids)  # noqa: E731
    assert [sorted(c) for c in merged.clusters] == [v(2, 4, 5, 8), v(1, 3, 6, 7)]
    assert count_disagreements(g, merged).total == count_disagreements(g, base).total


def test_run_cc_examples():
    g = build_graph(3, [(0, 1, P), (1, 2, N)])
    c, _ = run_cc(g)
    assert set(c.clusters) == {frozenset({0, 1}), frozenset({2})}
    assert count_disagreements(g, c).total == 0
    total = count_disagreements(g3(), run_cc(g3())[0]).total
    assert 2 <= total <= 4
    assert run_cc(build_graph(0, []))[0].n == 0


def test_chain_may_contain_negative_chord():
    g = build_graph(4, [(0, 1, P), (0, 2, P), (0, 3, P), (1, 2, P), (1, 3, P), (2, 3, N)])
    s = step2_triangle_chains(step1_peel(PipelineState.fresh(g)))
    assert groups(s) == [([0, 1, 2, 3], STEP2)]


def test_clustering_requires_complete_pipeline():
    s = step1_peel(PipelineState.fresh(g3()))
    try:
        s.clustering()
    except ValueError:
        pass
    else:
        raise AssertionError("expected ValueError")


@settings(max_examples=300, deadline=None)
@given(signed_graphs(max_n=10))
def test_pipeline_invariants(g):
    state = run_pipeline(g)
    clustering, trace = run_cc(g)
    assert run_cc(g) == (clustering, trace)
    merges = [e for e in trace if e.action == "merge"]
    assert len(merges) <= max(g.n - 1, 0)

    start = through_step4(g)
    origin = {v: tag for c, tag in start.clusters for v in c}
    for c, tag in start.clusters:
        if tag == STEP3:
            assert all(g.sign(u, w) >= 0 for u in c for w in c)
    # a chain may hold a negative chord between two of its triangles, but
    # every vertex of a step-2 cluster lies on an all-positive triangle inside it
    for c, tag in start.clusters:
        if tag == STEP2:
            for x in c:
                assert any(
                    g.sign(x, a) > 0 and g.sign(x, b) > 0 and g.sign(a, b) > 0
                    for a in c for b in c if a < b and x not in (a, b)
                )
    for c, _ in state.clusters:
        if len(c) > 1:
            assert all(origin[x] != STEP1 for x in c)

    dp, dm = cluster_pair_degrees(state)
    active = [tag != STEP1 for _, tag in state.clusters]
    for i in range(len(active)):
        for j in range(i + 1, len(active)):
            if active[i] and active[j]:
                assert dm[i, j] >= 1 or dp[i, j] == 0

    ok, _ = is_clusterable(g)
    if ok:
        assert count_disagreements(g, clustering).total == 0


@settings(max_examples=200, deadline=None)
@given(signed_graphs(max_n=9))
def test_post_merge_is_objective_neutral(g):
    state = run_pipeline(g)
    after = post_merge_pass(state)
    assert count_disagreements(g, after.clustering()).total == count_disagreements(g, state.clustering()).total
    assert len(after.clusters) <= len(state.clusters)
    dp, dm = cluster_pair_degrees(after)
    k = len(after.clusters)
    assert all(dp[i, j] or dm[i, j] for i in range(k) for j in range(i + 1, k))
