"""Seeded random instance generators."""
from __future__ import annotations

from collections.abc import Sequence

import numpy as np

from .cycles import triangle_condition_check
from .errors import GenerationExhausted
from .graph import NEGATIVE, POSITIVE, SignedGraph
from .patterns import has_forbidden_subgraph

DEFAULT_ATTEMPTS = 10_000


def _rng(seed) -> np.random.Generator:
    return seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)


def random_signed_graph(n: int, p_edge: float, p_neg: float, seed=None) -> SignedGraph:
    """Each pair becomes an edge with probability ``p_edge``; each edge is negative with ``p_neg``."""
    rng = _rng(seed)
    iu, iv = np.triu_indices(n, 1)
    draws = rng.random((iu.shape[0], 2))
    keep = draws[:, 0] < p_edge
    signs = np.where(draws[:, 1] < p_neg, NEGATIVE, POSITIVE)
    return SignedGraph(
        n, {(int(u), int(v)): int(s) for u, v, s in zip(iu[keep], iv[keep], signs[keep])}
    )


def in_subclass(g: SignedGraph) -> bool:
    """Every chordless SP/WN cycle is a triangle and no forbidden pattern embeds."""
    return triangle_condition_check(g)[0] and not has_forbidden_subgraph(g)


def generate_subclass_instance(
    n: int,
    p_edge: float,
    p_neg: float,
    seed=None,
    max_attempts: int = DEFAULT_ATTEMPTS,
) -> tuple[SignedGraph, int]:
    """Rejection-sample a graph from the 2-approximation subclass.

    Returns the accepted graph and the number of rejected draws.
    """
    if not 0 < p_edge <= 1 or not 0 <= p_neg <= 1:
        raise ValueError("need 0 < p_edge <= 1 and 0 <= p_neg <= 1")
    rng = _rng(seed)
    for attempt in range(max_attempts):
        g = random_signed_graph(n, p_edge, p_neg, rng)
        if in_subclass(g):
            return g, attempt
    raise GenerationExhausted(f"no subclass instance in {max_attempts} attempts (n={n})")


def generate_clusterable_instance(cluster_sizes: Sequence[int], p_edge: float, seed=None) -> SignedGraph:
    """Planted partition: consecutive blocks of vertices; intra edges positive, inter edges negative."""
    if any(s < 1 for s in cluster_sizes):
        raise ValueError("cluster sizes must be positive")
    rng = _rng(seed)
    block = np.repeat(np.arange(len(cluster_sizes)), cluster_sizes)
    n = int(block.shape[0])
    iu, iv = np.triu_indices(n, 1)
    keep = rng.random(iu.shape[0]) < p_edge
    signs = np.where(block[iu] == block[iv], POSITIVE, NEGATIVE)
    return SignedGraph(
        n, {(int(u), int(v)): int(s) for u, v, s in zip(iu[keep], iv[keep], signs[keep])}
    )


def generate_triangle_cactus(n_triangles: int, seed=None, p_attach: float = 0.7, pendant: int = 0) -> SignedGraph:
    """Triangles glued at single vertices (or left apart), plus pendant tree edges.

    Every cycle of the result is one of the triangles, so its weakly negative
    cycles are pairwise edge-disjoint. Triangle sign patterns are random.
    """
    rng = _rng(seed)
    signs: dict[tuple[int, int], int] = {}
    n = 0
    for t in range(n_triangles):
        if t and rng.random() < p_attach:
            hub = int(rng.integers(n))
        else:
            hub = n
            n += 1
        a, b = n, n + 1
        n += 2
        tri_signs = rng.choice([POSITIVE, NEGATIVE], size=3, p=[0.6, 0.4])
        if rng.random() < 0.6:
            tri_signs = np.array([POSITIVE, POSITIVE, POSITIVE])
            tri_signs[int(rng.integers(3))] = NEGATIVE
        for (u, v), s in zip(((hub, a), (hub, b), (a, b)), tri_signs):
            signs[(min(u, v), max(u, v))] = int(s)
    for _ in range(pendant):
        if n == 0:
            break
        anchor = int(rng.integers(n))
        signs[(anchor, n)] = int(rng.choice([POSITIVE, NEGATIVE]))
        n += 1
    return SignedGraph(n, signs)


def all_signed_graphs(n: int) -> list[SignedGraph]:
    """One representative per isomorphism class of signed graphs on ``n`` vertices.

    Each vertex pair takes a state in {absent, +, -}; graphs are encoded in
    base 3 and the canonical code is the minimum over all vertex permutations.
    """
    from itertools import permutations

    iu, iv = np.triu_indices(n, 1)
    p = iu.shape[0]
    pair_index = {(int(u), int(v)): k for k, (u, v) in enumerate(zip(iu, iv))}
    codes = np.arange(3**p, dtype=np.int64)
    states = (codes[:, None] // 3 ** np.arange(p, dtype=np.int64)) % 3
    weights = 3 ** np.arange(p, dtype=np.int64)
    canon = codes.copy()
    for perm in permutations(range(n)):
        # pair k moves to the pair of permuted endpoints
        target = [pair_index[tuple(sorted((perm[u], perm[v])))] for u, v in zip(iu, iv)]
        moved = np.zeros_like(codes)
        for k, t in enumerate(target):
            moved += states[:, k] * weights[t]
        np.minimum(canon, moved, out=canon)
    reps = np.unique(canon)
    out = []
    to_sign = {1: POSITIVE, 2: NEGATIVE}
    for code in reps:
        st = (int(code) // 3 ** np.arange(p)) % 3
        out.append(SignedGraph(n, {(int(iu[k]), int(iv[k])): to_sign[int(st[k])] for k in range(p) if st[k]}))
    return out
