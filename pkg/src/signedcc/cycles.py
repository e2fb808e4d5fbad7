"""Cycle structures of signed graphs.

Strongly positive triangles and their chains, weakly negative cycles (exactly
one negative edge), exact edge-disjoint packings of them, clusterability,
the pairwise-adjacent-triple condition, and the induced-cycle condition.
"""
from __future__ import annotations

from collections import deque
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import EnumerationTruncated
from .graph import NEGATIVE, Clustering, Edge, SignedGraph, norm, positive_components


@dataclass(frozen=True)
class Cycle:
    """Simple cycle stored as a canonical vertex sequence.

    ``vertices`` starts at the smallest vertex and walks toward the smaller of
    its two cycle neighbours; ``edges[i]`` joins ``vertices[i]`` and
    ``vertices[i + 1]`` (wrapping).
    """

    vertices: tuple[int, ...]
    edges: tuple[Edge, ...]
    negative_count: int

    @classmethod
    def from_vertices(cls, g: SignedGraph, seq: Sequence[int]) -> Cycle:
        seq = canonical_rotation(seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise ValueError(f"not a simple cycle: {seq}")
        edges = tuple(norm(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq)))
        neg = 0
        for e in edges:
            s = g.signs.get(e)
            if s is None:
                raise ValueError(f"cycle {seq} uses missing edge {e}")
            neg += s == NEGATIVE
        return cls(tuple(seq), edges, neg)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def weakly_negative(self) -> bool:
        return self.negative_count == 1

    @property
    def strongly_positive(self) -> bool:
        return self.negative_count == 0

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def sort_key(self) -> tuple:
        return (self.length, self.vertices)


def canonical_rotation(seq: Sequence[int]) -> tuple[int, ...]:
    seq = list(seq)
    i = seq.index(min(seq))
    seq = seq[i:] + seq[:i]
    if len(seq) > 2 and seq[-1] < seq[1]:
        seq = [seq[0]] + seq[:0:-1]
    return tuple(seq)


def _resolve_length(g: SignedGraph, max_length: int | None, allow_truncated: bool) -> int:
    if max_length is None:
        return max(g.n, 3)
    if max_length < 3:
        raise ValueError("max_length must be at least 3")
    if max_length < g.n and not allow_truncated:
        raise EnumerationTruncated(
            f"max_length={max_length} < n={g.n}: weakly negative cycles may be missed"
        )
    return max_length


# ---------------------------------------------------------------------------
# strongly positive triangles
# ---------------------------------------------------------------------------
def strongly_positive_triangles(g: SignedGraph) -> list[tuple[int, int, int]]:
    pos = g.positive_neighbors
    out = []
    for u in range(g.n):
        for v in sorted(w for w in pos[u] if w > u):
            for w in sorted(x for x in pos[u] & pos[v] if x > v):
                out.append((u, v, w))
    return out


def triangle_chain_components(g: SignedGraph) -> list[frozenset[int]]:
    """Vertex sets of maximal groups of strongly positive triangles linked by shared vertices."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    covered = set()
    for tri in strongly_positive_triangles(g):
        covered.update(tri)
        r0 = find(tri[0])
        for x in tri[1:]:
            r = find(x)
            if r != r0:
                parent[r] = r0
    groups: dict[int, set[int]] = {}
    for v in sorted(covered):
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(s) for s in groups.values()), key=min)


# ---------------------------------------------------------------------------
# weakly negative cycles
# ---------------------------------------------------------------------------
def enumerate_weakly_negative_cycles(g: SignedGraph, max_length: int | None = None) -> list[Cycle]:
    """All simple cycles with exactly one negative edge and at most ``max_length`` edges.

    Each is a negative edge ``uv`` closed by an all-positive ``u``-``v`` path.
    """
    limit = max(g.n, 3) if max_length is None else max_length
    if limit < 3:
        raise ValueError("max_length must be at least 3")
    pos = g.positive_neighbors
    found = []
    for (u, v), s in g.signs.items():
        if s != NEGATIVE:
            continue
        dist = _bfs(pos, v)
        if u not in dist:
            continue
        path = [u]
        on_path = {u}

        def extend(x: int) -> None:
            for w in sorted(pos[x]):
                if w in on_path or w not in dist:
                    continue
                # edges used so far + this step + shortest finish, plus the negative edge
                if len(path) + dist[w] + 1 > limit:
                    continue
                if w == v:
                    if len(path) >= 2:
                        found.append(Cycle.from_vertices(g, path + [v]))
                    continue
                path.append(w)
                on_path.add(w)
                extend(w)
                path.pop()
                on_path.discard(w)

        extend(u)
    found.sort(key=Cycle.sort_key)
    return found


def _bfs(adj: Sequence[frozenset[int]], src: int) -> dict[int, int]:
    dist = {src: 0}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if w not in dist:
                dist[w] = dist[x] + 1
                queue.append(w)
    return dist


def _edge_masks(g: SignedGraph, cycles: Sequence[Cycle]) -> list[int]:
    index = {e: i for i, e in enumerate(g.signs)}
    masks = []
    for c in cycles:
        m = 0
        for e in c.edges:
            m |= 1 << index[e]
        masks.append(m)
    return masks


def max_edge_disjoint_wnc_packing(
    g: SignedGraph, max_length: int | None = None, *, allow_truncated: bool = False
) -> tuple[int, list[Cycle]]:
    """Exact maximum set of pairwise edge-disjoint weakly negative cycles.

    Memoised include/exclude recursion over the canonical cycle list; the
    witness is the lexicographically least index set of maximum size.
    """
    limit = _resolve_length(g, max_length, allow_truncated)
    cycles = enumerate_weakly_negative_cycles(g, limit)
    size, chosen = max_disjoint_family(_edge_masks(g, cycles))
    return size, [cycles[i] for i in chosen]


def max_disjoint_family(masks: Sequence[int]) -> tuple[int, list[int]]:
    """Largest set of pairwise disjoint bitmasks; lexicographically least index set."""
    k = len(masks)
    blocked = []
    for i in range(k):
        b = 0
        for j in range(k):
            if masks[i] & masks[j]:
                b |= 1 << j
        blocked.append(b)
    memo: dict[int, int] = {0: 0}

    def best(cand: int) -> int:
        hit = memo.get(cand)
        if hit is not None:
            return hit
        i = (cand & -cand).bit_length() - 1
        val = best(cand & ~blocked[i]) + 1
        rest = cand & ~(1 << i)
        # the exclude branch cannot beat val when too few candidates remain
        if rest and val <= bin(rest).count("1"):
            val = max(val, best(rest))
        memo[cand] = val
        return val

    full = (1 << k) - 1
    total = best(full)
    chosen = []
    cand = full
    while cand:
        i = (cand & -cand).bit_length() - 1
        if best(cand & ~blocked[i]) + 1 == best(cand):
            chosen.append(i)
            cand &= ~blocked[i]
        else:
            cand &= ~(1 << i)
    return total, chosen


# ---------------------------------------------------------------------------
# clusterability and structural conditions
# ---------------------------------------------------------------------------
def is_clusterable(g: SignedGraph) -> tuple[bool, Clustering | Cycle]:
    """Zero-disagreement test: no negative edge may join two vertices of one positive component.

    Returns the positive components as a certificate clustering, or a weakly
    negative cycle (shortest positive path closed by the offending edge).
    """
    comps = positive_components(g)
    comp_of = [0] * g.n
    for i, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = i
    for (u, v), s in g.signs.items():
        if s == NEGATIVE and comp_of[u] == comp_of[v]:
            return False, Cycle.from_vertices(g, _positive_path(g, u, v))
    return True, Clustering.from_clusters(g.n, comps)


def _positive_path(g: SignedGraph, src: int, dst: int) -> list[int]:
    prev = {src: src}
    queue = deque([src])
    while queue:
        x = queue.popleft()
        if x == dst:
            break
        for w in sorted(g.positive_neighbors[x]):
            if w not in prev:
                prev[w] = x
                queue.append(w)
    path = [dst]
    while path[-1] != src:
        path.append(prev[path[-1]])
    return path[::-1]


def condition_theorem_check(
    g: SignedGraph, max_length: int | None = None, *, allow_truncated: bool = False
) -> tuple[bool, tuple[Cycle, Cycle, Cycle] | None]:
    """True iff every three pairwise edge-sharing weakly negative cycles share a common edge.

    Otherwise returns the lexicographically first violating triple.
    """
    limit = _resolve_length(g, max_length, allow_truncated)
    cycles = enumerate_weakly_negative_cycles(g, limit)
    masks = _edge_masks(g, cycles)
    k = len(masks)
    adj = [0] * k
    for i in range(k):
        for j in range(i + 1, k):
            if masks[i] & masks[j]:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    for i in range(k):
        later_i = adj[i] >> (i + 1) << (i + 1)
        for j in _bits(later_i):
            common = masks[i] & masks[j]
            for t in _bits(later_i & adj[j] & ~((1 << (j + 1)) - 1)):
                if not common & masks[t]:
                    return False, (cycles[i], cycles[j], cycles[t])
    return True, None


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def induced_cycles(g: SignedGraph, max_negative: int | None = None, min_length: int = 3) -> Iterator[Cycle]:
    """Chordless cycles, optionally restricted to at most ``max_negative`` negative edges.

    Each cycle is grown from its smallest vertex over larger vertices only and
    reported in one direction.
    """
    adj = g.neighbors
    cap = g.m if max_negative is None else max_negative
    for s in range(g.n):
        path = [s]
        negs = [0]

        def grow(x: int) -> Iterator[Cycle]:
            interior = path[1:-1]
            for w in sorted(adj[x]):
                if w <= s or w in path:
                    continue
                if any(w in adj[y] for y in interior):
                    continue
                neg = negs[-1] + (g.sign(x, w) == NEGATIVE)
                if neg > cap:
                    continue
                if len(path) >= 2 and s in adj[w]:
                    neg_close = neg + (g.sign(w, s) == NEGATIVE)
                    # close only toward the larger endpoint to report once
                    if neg_close <= cap and path[1] < w and len(path) + 1 >= min_length:
                        yield Cycle.from_vertices(g, path + [w])
                    continue
                path.append(w)
                negs.append(neg)
                yield from grow(w)
                path.pop()
                negs.pop()

        yield from grow(s)


def triangle_condition_check(g: SignedGraph) -> tuple[bool, list[Cycle]]:
    """True iff every chordless strongly positive or weakly negative cycle is a triangle."""
    bad = sorted(
        (c for c in induced_cycles(g, max_negative=1, min_length=4)),
        key=Cycle.sort_key,
    )
    return not bad, bad
