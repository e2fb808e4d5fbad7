"""Forbidden signed patterns and a signed subgraph-embedding matcher.

Matching is non-induced: every pattern edge must be present in the host with
the same sign, extra host edges are ignored.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .graph import NEGATIVE, POSITIVE, SignedGraph, build_graph

P, N = POSITIVE, NEGATIVE


@dataclass(frozen=True)
class ForbiddenPattern:
    pattern_id: str
    graph: SignedGraph


# Weakly negative triangle v1 v2 v3 (negative v1v2) with a fourth vertex
# positively joined to both ends of the negative edge.
PATTERN_A = ForbiddenPattern(
    "A", build_graph(4, [(0, 1, N), (0, 2, P), (1, 2, P), (3, 0, P), (3, 1, P)])
)

# Same triangle; v4 positive to v1 and v3, v5 positive to v2 and v3.
PATTERN_B = ForbiddenPattern(
    "B",
    build_graph(5, [(0, 1, N), (0, 2, P), (1, 2, P), (3, 0, P), (3, 2, P), (4, 1, P), (4, 2, P)]),
)

# Positive edge xy (0, 1) with three weakly negative triangles on it. Up to
# swapping x and y the negative sides split 3/0 or 2/1.
PATTERN_C_SAME_SIDE = ForbiddenPattern(
    "C",
    build_graph(5, [(0, 1, P)] + [e for z in (2, 3, 4) for e in ((0, z, P), (1, z, N))]),
)
PATTERN_C_SPLIT = ForbiddenPattern(
    "C",
    build_graph(
        5,
        [(0, 1, P), (0, 2, P), (1, 2, N), (0, 3, P), (1, 3, N), (0, 4, N), (1, 4, P)],
    ),
)

DEFAULT_PATTERNS = (PATTERN_A, PATTERN_B, PATTERN_C_SAME_SIDE, PATTERN_C_SPLIT)


def embeddings(pattern: SignedGraph, host: SignedGraph) -> Iterable[tuple[int, ...]]:
    """Yield every injective map ``pattern vertex -> host vertex`` preserving signed edges."""
    k = pattern.n
    if k == 0 or k > host.n:
        return
    order = _match_order(pattern)
    mapping = [-1] * k
    used = [False] * host.n
    pos_of = {v: i for i, v in enumerate(order)}
    # for each position, the earlier-placed pattern neighbours and edge signs
    back = [
        [(w, pattern.sign(v, w)) for w in pattern.neighbors[v] if pos_of[w] < pos_of[v]]
        for v in order
    ]

    def place(depth: int):
        if depth == k:
            yield tuple(mapping)
            return
        v = order[depth]
        constraints = back[depth]
        if constraints:
            w0, s0 = constraints[0]
            anchor = mapping[w0]
            pool = host.positive_neighbors[anchor] if s0 == P else host.negative_neighbors[anchor]
            candidates = sorted(pool)
        else:
            candidates = range(host.n)
        for x in candidates:
            if used[x]:
                continue
            if all(host.sign(x, mapping[w]) == s for w, s in constraints):
                mapping[v] = x
                used[x] = True
                yield from place(depth + 1)
                used[x] = False
                mapping[v] = -1

    yield from place(0)


def _match_order(pattern: SignedGraph) -> list[int]:
    # highest degree first, then greedily the vertex with most placed neighbours
    remaining = set(range(pattern.n))
    order = []
    while remaining:
        placed = set(order)
        v = max(
            sorted(remaining),
            key=lambda x: (len(pattern.neighbors[x] & placed), len(pattern.neighbors[x])),
        )
        order.append(v)
        remaining.discard(v)
    return order


def forbidden_subgraph_scan(
    g: SignedGraph, patterns: Sequence[ForbiddenPattern] = DEFAULT_PATTERNS
) -> list[tuple[str, tuple[int, ...]]]:
    """Embeddings of each pattern into ``g``, one per (pattern id, image vertex set).

    The kept embedding for a vertex set is the lexicographically least one.
    """
    hits: dict[tuple[str, frozenset[int]], tuple[int, ...]] = {}
    for pat in patterns:
        for emb in embeddings(pat.graph, g):
            key = (pat.pattern_id, frozenset(emb))
            if key not in hits or emb < hits[key]:
                hits[key] = emb
    return sorted(((pid, emb) for (pid, _), emb in hits.items()), key=lambda h: (h[0], sorted(h[1]), h[1]))


def has_forbidden_subgraph(g: SignedGraph, patterns: Sequence[ForbiddenPattern] = DEFAULT_PATTERNS) -> bool:
    return any(next(iter(embeddings(p.graph, g)), None) is not None for p in patterns)
