"""The six-step correlation clustering pipeline.

1. singletons for isolated vertices and vertices with only negative edges
2. one cluster per chain of strongly positive triangles
3. one cluster per edge of a maximum matching of the remaining positive edges
4. singletons for whatever is left
5/6. repeatedly merge the pair of clusters (step-1 clusters excluded) with no
   negative edge between them and the most positive edges, while one exists
"""
from __future__ import annotations

from dataclasses import dataclass, field, replace

import numpy as np

from . import _kernels
from .cycles import triangle_chain_components
from .graph import Clustering, SignedGraph, induced_subgraph
from .matching import lex_min_maximum_matching

STEP1, STEP2, STEP3, STEP4, STEP5 = "step1", "step2", "step3", "step4", "step5"
MERGED = "merged"


@dataclass(frozen=True)
class TraceEvent:
    step: str
    action: str
    vertices: tuple[int, ...]
    detail: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"step": self.step, "action": self.action, "vertices": list(self.vertices), **self.detail}


@dataclass(frozen=True)
class PipelineState:
    """Pipeline snapshot. Cluster ids are positions in ``clusters``."""

    original: SignedGraph
    remaining: frozenset[int]
    clusters: tuple[tuple[frozenset[int], str], ...] = ()
    trace: tuple[TraceEvent, ...] = ()

    @classmethod
    def fresh(cls, g: SignedGraph) -> PipelineState:
        return cls(g, frozenset(range(g.n)))

    def _add(self, new: list[tuple[frozenset[int], str]], events: list[TraceEvent]) -> PipelineState:
        taken = frozenset().union(*(c for c, _ in new)) if new else frozenset()
        return replace(
            self,
            remaining=self.remaining - taken,
            clusters=self.clusters + tuple(new),
            trace=self.trace + tuple(events),
        )

    def labels(self) -> np.ndarray:
        lab = np.full(self.original.n, -1, dtype=np.int64)
        for i, (members, _) in enumerate(self.clusters):
            lab[list(members)] = i
        return lab

    def clustering(self) -> Clustering:
        if self.remaining:
            raise ValueError("pipeline incomplete: vertices still unassigned")
        return Clustering.from_clusters(self.original.n, [sorted(c) for c, _ in self.clusters])


def step1_peel(state: PipelineState) -> PipelineState:
    g = state.original
    new, events = [], []
    for v in sorted(state.remaining):
        if not g.positive_neighbors[v]:
            kind = "isolated" if not g.neighbors[v] else "all-negative"
            new.append((frozenset([v]), STEP1))
            events.append(TraceEvent(STEP1, "singleton", (v,), {"reason": kind}))
    return state._add(new, events)


def step2_triangle_chains(state: PipelineState) -> PipelineState:
    sub, ids = induced_subgraph(state.original, state.remaining)
    new, events = [], []
    for comp in triangle_chain_components(sub):
        members = frozenset(ids[v] for v in comp)
        new.append((members, STEP2))
        events.append(TraceEvent(STEP2, "triangle-chain", tuple(sorted(members))))
    return state._add(new, events)


def step3_matching(state: PipelineState) -> PipelineState:
    sub, ids = induced_subgraph(state.original, state.remaining)
    pos_edges = [(u, v) for u, v, s in sub.edges() if s > 0]
    new, events = [], []
    for u, v in lex_min_maximum_matching(sub.n, pos_edges):
        pair = (ids[u], ids[v])
        new.append((frozenset(pair), STEP3))
        events.append(TraceEvent(STEP3, "matched-pair", pair))
    return state._add(new, events)


def step4_singletons(state: PipelineState) -> PipelineState:
    new = [(frozenset([v]), STEP4) for v in sorted(state.remaining)]
    events = [TraceEvent(STEP4, "singleton", (v,)) for v in sorted(state.remaining)]
    return state._add(new, events)


def cluster_pair_degrees(state: PipelineState) -> tuple[np.ndarray, np.ndarray]:
    """``k x k`` matrices of positive / negative edge counts between clusters, from the original graph."""
    eu, ev, es = state.original.edge_arrays
    return _kernels.pair_degrees(state.labels(), len(state.clusters), eu, ev, es)


def step5_merge_once(state: PipelineState) -> tuple[PipelineState, bool]:
    """Merge the eligible pair with the largest positive degree.

    Ties go to the smallest ``(i, j)``. The merged cluster takes position ``i``
    and ``j`` is removed, so later ids shift down by one.
    """
    k = len(state.clusters)
    if k < 2:
        return state, False
    d_plus, d_minus = cluster_pair_degrees(state)
    active = np.array([tag != STEP1 for _, tag in state.clusters])
    ok = (d_minus == 0) & (d_plus >= 1) & np.outer(active, active)
    ok &= np.triu(np.ones((k, k), dtype=bool), 1)
    if not ok.any():
        return state, False
    score = np.where(ok, d_plus, -1)
    i, j = divmod(int(np.argmax(score)), k)
    return _merge(state, i, j, STEP5, int(d_plus[i, j])), True


def _merge(state: PipelineState, i: int, j: int, step: str, d_plus: int) -> PipelineState:
    a, b = state.clusters[i][0], state.clusters[j][0]
    clusters = list(state.clusters)
    clusters[i] = (a | b, MERGED)
    del clusters[j]
    event = TraceEvent(
        step,
        "merge",
        tuple(sorted(a | b)),
        {"pair": [i, j], "left": sorted(a), "right": sorted(b), "d_plus": d_plus},
    )
    return replace(state, clusters=tuple(clusters), trace=state.trace + (event,))


def post_merge_pass(state: PipelineState) -> PipelineState:
    """Merge clusters with no edges at all between them (step-1 clusters included).

    Only reduces the cluster count; disagreements cannot change.
    """
    while len(state.clusters) > 1:
        d_plus, d_minus = cluster_pair_degrees(state)
        k = len(state.clusters)
        free = (d_plus == 0) & (d_minus == 0) & np.triu(np.ones((k, k), dtype=bool), 1)
        if not free.any():
            break
        i, j = divmod(int(np.argmax(free)), k)
        state = _merge(state, i, j, "post-merge", 0)
    return state


def run_pipeline(g: SignedGraph, post_merge: bool = False) -> PipelineState:
    state = PipelineState.fresh(g)
    for step in (step1_peel, step2_triangle_chains, step3_matching, step4_singletons):
        state = step(state)
    merged = True
    while merged:
        state, merged = step5_merge_once(state)
    if post_merge:
        state = post_merge_pass(state)
    return state


def run_cc(g: SignedGraph, post_merge: bool = False) -> tuple[Clustering, tuple[TraceEvent, ...]]:
    """Cluster ``g``; cluster ids in the result follow pipeline order."""
    state = run_pipeline(g, post_merge=post_merge)
    return state.clustering(), state.trace
