"""Maximum cardinality matching in general graphs (Edmonds' blossom algorithm).

``lex_min_maximum_matching`` picks, among all maximum matchings, the one whose
sorted edge list is lexicographically smallest.
"""
from __future__ import annotations

from collections.abc import Iterable

UNMATCHED = -1


class _Blossom:
    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        self.n = n
        adj: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        self.adj = [sorted(a) for a in adj]
        self.match = [UNMATCHED] * n
        self.alive = [True] * n

    def maximize(self) -> None:
        match = self.match
        for u in range(self.n):
            if match[u] == UNMATCHED:
                for w in self.adj[u]:
                    if match[w] == UNMATCHED:
                        match[u], match[w] = w, u
                        break
        for u in range(self.n):
            if match[u] == UNMATCHED and self.alive[u]:
                self.augment(u)

    def size(self) -> int:
        return sum(1 for v in range(self.n) if self.match[v] > v)

    def augment(self, root: int) -> bool:
        """Search one augmenting path from exposed ``root``; flip it if found."""
        end = self._find_path(root)
        if end == UNMATCHED:
            return False
        match, parent = self.match, self._parent
        v = end
        while v != UNMATCHED:
            pv = parent[v]
            nxt = match[pv]
            match[v], match[pv] = pv, v
            v = nxt
        return True

    def _find_path(self, root: int) -> int:
        n, match, alive = self.n, self.match, self.alive
        used = [False] * n
        parent = [UNMATCHED] * n
        base = list(range(n))
        self._parent, self._base = parent, base
        used[root] = True
        queue = [root]
        head = 0
        while head < len(queue):
            v = queue[head]
            head += 1
            for to in self.adj[v]:
                if not alive[to] or base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != UNMATCHED and parent[match[to]] != UNMATCHED):
                    cur = self._lca(v, to)
                    in_blossom = [False] * n
                    self._mark_path(v, cur, to, in_blossom)
                    self._mark_path(to, cur, v, in_blossom)
                    for i in range(n):
                        if in_blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == UNMATCHED:
                    parent[to] = v
                    if match[to] == UNMATCHED:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return UNMATCHED

    def _lca(self, a: int, b: int) -> int:
        match, parent, base = self.match, self._parent, self._base
        seen = [False] * self.n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == UNMATCHED:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def _mark_path(self, v: int, b: int, child: int, in_blossom: list[bool]) -> None:
        match, parent, base = self.match, self._parent, self._base
        while base[v] != b:
            in_blossom[base[v]] = in_blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]


def maximum_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Some maximum cardinality matching of the graph, as sorted ``(u, v)`` pairs with ``u < v``."""
    b = _Blossom(n, edges)
    b.maximize()
    return [(v, b.match[v]) for v in range(n) if b.match[v] > v]


def lex_min_maximum_matching(n: int, edges: Iterable[tuple[int, int]]) -> list[tuple[int, int]]:
    """Maximum matching whose sorted edge list is lexicographically least.

    Greedy over edges in sorted order: keep ``uv`` whenever the graph without
    ``u`` and ``v`` still has a matching one smaller than the current maximum.
    Any augmenting path after deleting ``u, v`` must start at a former partner
    of ``u`` or ``v``, so at most two searches are needed per edge.
    """
    edges = sorted({(min(u, v), max(u, v)) for u, v in edges})
    b = _Blossom(n, edges)
    b.maximize()
    match, alive = b.match, b.alive
    chosen = []
    for u, v in edges:
        if not (alive[u] and alive[v]):
            continue
        a, c = match[u], match[v]
        alive[u] = alive[v] = False
        match[u] = match[v] = UNMATCHED
        if a == v:
            chosen.append((u, v))
            continue
        if a != UNMATCHED:
            match[a] = UNMATCHED
        if c != UNMATCHED:
            match[c] = UNMATCHED
        if a == UNMATCHED or c == UNMATCHED or b.augment(a) or b.augment(c):
            chosen.append((u, v))
            continue
        alive[u] = alive[v] = True
        match[u], match[a] = a, u
        match[v], match[c] = c, v
    return chosen
