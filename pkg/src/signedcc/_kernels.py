"""Hot numeric kernels with a numba path and a pure-numpy path.

The numba path is used when numba imports and ``SIGNEDCC_DISABLE_NUMBA`` is
unset (or "0"). Both paths are always importable under explicit names so the
benchmark and the tests can compare them.
"""
from __future__ import annotations

import os

import numpy as np

_DISABLED = os.environ.get("SIGNEDCC_DISABLE_NUMBA", "0").lower() not in ("", "0", "false", "no")

try:
    if _DISABLED:
        raise ImportError("numba disabled by SIGNEDCC_DISABLE_NUMBA")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False

BACKEND = "numba" if HAVE_NUMBA else "numpy"

# rows per block in the vectorised partition scan
_CHUNK = 1 << 18


# ---------------------------------------------------------------------------
# minimum-disagreement partition
# ---------------------------------------------------------------------------
def best_partition_numpy(signs: np.ndarray) -> tuple[int, np.ndarray]:
    """Exhaustive scan of all restricted growth strings, vectorised.

    Returns the minimum disagreement count and the lexicographically least
    labelling attaining it.
    """
    n = signs.shape[0]
    if n == 0:
        return 0, np.zeros(0, dtype=np.int64)
    iu, iv = np.nonzero(np.triu(signs))
    es = signs[iu, iv]
    best_cost = np.iinfo(np.int64).max
    best_row = None
    for block in _rgs_blocks(n):
        cost = np.zeros(block.shape[0], dtype=np.int64)
        for u, v, s in zip(iu, iv, es):
            same = block[:, u] == block[:, v]
            cost += ~same if s > 0 else same
        i = int(np.argmin(cost))
        if cost[i] < best_cost:
            best_cost = int(cost[i])
            best_row = block[i].astype(np.int64)
    return best_cost, best_row


def _rgs_blocks(n: int):
    """Yield all restricted growth strings of length ``n`` in lexicographic order.

    Short prefixes are enumerated first, then expanded to full length in
    contiguous batches so each yielded block holds roughly ``_CHUNK`` rows.
    """
    labels = np.zeros((1, 1), dtype=np.int8)
    top = np.zeros(1, dtype=np.int8)
    while labels.shape[1] < n and labels.shape[0] < 4096:
        labels, top = _rgs_extend(labels, top)
    if labels.shape[1] == n:
        yield labels
        return
    step = max(1, _CHUNK * labels.shape[0] // bell(n))
    for start in range(0, labels.shape[0], step):
        sub, subtop = labels[start : start + step], top[start : start + step]
        while sub.shape[1] < n:
            sub, subtop = _rgs_extend(sub, subtop)
        yield sub


def bell(n: int) -> int:
    """Number of set partitions of an ``n``-element set."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _rgs_extend(labels: np.ndarray, top: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    counts = top.astype(np.int64) + 2
    parent = np.repeat(np.arange(labels.shape[0]), counts)
    starts = np.repeat(np.cumsum(counts) - counts, counts)
    child = (np.arange(parent.shape[0]) - starts).astype(np.int8)
    new = np.concatenate([labels[parent], child[:, None]], axis=1)
    return new, np.maximum(top[parent], child)


def _best_partition_py(signs):
    # Depth-first branch and bound over restricted growth strings; plain loops
    # so numba can compile it unchanged.
    n = signs.shape[0]
    labels = np.zeros(n, dtype=np.int64)
    best_labels = np.zeros(n, dtype=np.int64)
    if n == 0:
        return 0, best_labels
    best = 1
    for i in range(n):
        for j in range(i):
            if signs[i, j] > 0:
                best += 1
    partial = np.zeros(n + 1, dtype=np.int64)
    top = np.zeros(n + 1, dtype=np.int64)
    top[0] = -1
    labels[0] = -1
    i = 0
    while i >= 0:
        c = labels[i] + 1
        if c > top[i] + 1:
            i -= 1
            continue
        labels[i] = c
        cost = partial[i]
        for j in range(i):
            s = signs[i, j]
            if s > 0:
                if labels[j] != c:
                    cost += 1
            elif s < 0:
                if labels[j] == c:
                    cost += 1
        if cost >= best:
            continue
        if i == n - 1:
            best = cost
            best_labels[:] = labels
            continue
        partial[i + 1] = cost
        top[i + 1] = max(top[i], c)
        i += 1
        labels[i] = -1
    return best, best_labels


# ---------------------------------------------------------------------------
# cluster-pair positive / negative degree matrices
# ---------------------------------------------------------------------------
def pair_degrees_numpy(labels, k, eu, ev, es):
    """``(D+, D-)`` as symmetric ``k x k`` matrices; diagonal counts internal edges."""
    a = labels[eu]
    b = labels[ev]
    pos = es > 0
    d_plus = _symmetric_counts(a[pos], b[pos], k)
    d_minus = _symmetric_counts(a[~pos], b[~pos], k)
    return d_plus, d_minus


def _symmetric_counts(a, b, k):
    flat = np.bincount(a * k + b, minlength=k * k).reshape(k, k)
    out = flat + flat.T
    out[np.diag_indices(k)] //= 2
    return out


def _pair_degrees_py(labels, k, eu, ev, es):
    d_plus = np.zeros((k, k), dtype=np.int64)
    d_minus = np.zeros((k, k), dtype=np.int64)
    for t in range(eu.shape[0]):
        a = labels[eu[t]]
        b = labels[ev[t]]
        if es[t] > 0:
            d_plus[a, b] += 1
            if a != b:
                d_plus[b, a] += 1
        else:
            d_minus[a, b] += 1
            if a != b:
                d_minus[b, a] += 1
    return d_plus, d_minus


if HAVE_NUMBA:
    best_partition_numba = njit(cache=True)(_best_partition_py)
    pair_degrees_numba = njit(cache=True)(_pair_degrees_py)
    best_partition = best_partition_numba
    pair_degrees = pair_degrees_numba
else:
    best_partition = best_partition_numpy
    pair_degrees = pair_degrees_numpy
