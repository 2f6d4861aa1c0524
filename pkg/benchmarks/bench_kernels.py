"""Compare the compiled and pure-Python search kernels.

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --spec 2,3,3,3,2 --m 4 --repeat 3

Both backends must return the same optimum and witness; timings are wall
clock (best of ``--repeat``) in milliseconds.
"""

from __future__ import annotations

import argparse
import sys
import time

from thetadp import kernels
from thetadp.optimizer import SearchOptions, minimize, search_size
from thetadp.theta import parse_spec

DEFAULT_CASES = [("2,3,3,3,2", 3), ("2,3,3,3,2", 4), ("2,3,3,3,3,3,2,2", 3)]


def best_time(spec, m, backend, repeat):
    opts = SearchOptions(backend=backend)
    best, res = None, None
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = minimize(spec, m, opts)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, res


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--spec", help="single spec to run instead of the default cases")
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    if kernels.BACKEND != "cython":
        print("compiled kernel not built; run `pip install -e . --no-build-isolation` first", file=sys.stderr)
        return 1
    cases = [(args.spec, args.m)] if args.spec else DEFAULT_CASES
    print(f"{'graph':<24}{'m':>3}{'signatures':>12}{'cython ms':>12}{'python ms':>12}{'speedup':>9}")
    for text, m in cases:
        spec = parse_spec(text)
        tc, rc = best_time(spec, m, "cython", args.repeat)
        tp, rp = best_time(spec, m, "python", args.repeat)
        if (rc.optimum, rc.witness) != (rp.optimum, rp.witness):
            print(f"backends disagree on {spec} m={m}: {rc} vs {rp}", file=sys.stderr)
            return 1
        n = search_size(spec.n, m)
        print(f"{str(spec):<24}{m:>3}{n:>12}{tc * 1e3:>12.2f}{tp * 1e3:>12.2f}{tp / tc:>8.0f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
