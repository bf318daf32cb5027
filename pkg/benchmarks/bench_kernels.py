"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row runs the same workload through both backends, checks the answers
agree and prints the best-of-N wall time and the speedup.
"""

import argparse
import time

from permbin import kernels
from permbin.field import field_of_order


def _best(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def workloads():
    F256 = field_of_order(256)
    las = [la for la in range(F256.qm1) for _ in range(F256.qm1)]
    lbs = [lb for _ in range(F256.qm1) for lb in range(F256.qm1)]
    yield "perm_flags F_256, all 65025 pairs", lambda be: be.perm_flags(F256, 16, 1, las, lbs)

    # X^4 + xi X is additive with trivial kernel (xi is not a cube), so every
    # call walks the full field instead of exiting on an early collision
    F4096 = field_of_order(4096)
    yield "perm_check F_4096, PB x 32", lambda be: [be.perm_check(F4096, 0, 4, 1, 1) for _ in range(32)]

    F1024 = field_of_order(1024)
    las32 = list(range(F1024.qm1)) * 8
    yield "mu_flags q=32, d=3, 8 x all a", lambda be: be.mu_flags(F1024, 32, 7, 3, las32)

    F64 = field_of_order(64)
    pts = [-1] + list(range(F64.qm1))
    terms = [(3, 3, 5), (2, 1, 9), (1, 2, 9), (3, 0, 0), (0, 3, 0), (0, 0, 5)]
    yield "count_zeros F_64, 6 terms", lambda be: be.count_zeros(F64, terms, pts, pts, True)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    py = kernels.BACKENDS["python"]
    cy = kernels.BACKENDS.get("cython")
    if cy is None:
        print("compiled extension not built; run `pip install -e . --no-build-isolation` first")
    print(f"{'workload':36} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in workloads():
        tp, rp = _best(lambda: fn(py), args.repeat)
        if cy is None:
            print(f"{name:36} {tp:10.4f} {'-':>10} {'-':>8}")
            continue
        tc, rc = _best(lambda: fn(cy), args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:36} {tp:10.4f} {tc:10.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
