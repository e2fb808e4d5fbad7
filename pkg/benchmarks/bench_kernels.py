"""Compare the numba and pure-numpy kernel paths.

    python benchmarks/bench_kernels.py [--max-n 11]
"""
import argparse
import time

import numpy as np

from signedcc import _kernels as K
from signedcc.generators import random_signed_graph


def timed(fn, *args, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=11)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    if not hasattr(K, "best_partition_numba"):
        raise SystemExit("numba path unavailable (unset SIGNEDCC_DISABLE_NUMBA)")
    rng = np.random.default_rng(args.seed)

    print("minimum-disagreement partition search (times in ms)")
    print(f"{'n':>3} {'graph':>6} {'bell':>9} {'numba':>9} {'numpy':>9} {'agree':>6}")
    K.best_partition_numba(np.zeros((3, 3), dtype=np.int8))
    for n in range(6, args.max_n + 1):
        # sparse instances prune well; complete half-negative ones do not
        for label, p_edge, p_neg in (("sparse", 0.5, 0.4), ("dense", 1.0, 0.5)):
            S = random_signed_graph(n, p_edge, p_neg, rng).sign_matrix
            t_nb, a = timed(K.best_partition_numba, S)
            t_np, b = timed(K.best_partition_numpy, S, repeats=1)
            agree = a[0] == b[0] and np.array_equal(a[1], b[1])
            print(f"{n:>3} {label:>6} {K.bell(n):>9} {t_nb * 1e3:>9.3f} {t_np * 1e3:>9.1f} {str(agree):>6}")

    print("\ncluster-pair degree matrices (times in ms)")
    print(f"{'n':>5} {'k':>5} {'numba':>9} {'numpy':>9} {'agree':>6}")
    for n in (100, 300, 1000):
        g = random_signed_graph(n, 8.0 / n, 0.3, rng)
        k = max(1, n // 3)
        labels = rng.integers(0, k, size=n)
        labels[:k] = np.arange(k)
        eu, ev, es = g.edge_arrays
        K.pair_degrees_numba(labels, k, eu, ev, es)
        t_nb, a = timed(K.pair_degrees_numba, labels, k, eu, ev, es, repeats=20)
        t_np, b = timed(K.pair_degrees_numpy, labels, k, eu, ev, es, repeats=20)
        agree = np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
        print(f"{n:>5} {k:>5} {t_nb * 1e3:>9.3f} {t_np * 1e3:>9.3f} {str(agree):>6}")


if __name__ == "__main__":
    main()
