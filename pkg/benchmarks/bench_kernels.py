"""Compare the compiled and pure-Python rank kernels.

    python3 benchmarks/bench_kernels.py [--sizes 20 60 120] [--repeat 3]
"""
from __future__ import annotations

import argparse
import random
import timeit

from greenhv import _pykernels
from greenhv._kernels import BACKEND, rank_mod_p
from greenhv.linalg import SCREEN_PRIME


def random_matrix(n: int, p: int, seed: int) -> list[list[int]]:
    rng = random.Random(seed)
    rows = [[rng.randrange(p) for _ in range(n)] for _ in range(n - 2)]
    # two dependent rows so elimination does real work to the end
    rows.append([(a + b) % p for a, b in zip(rows[0], rows[1])])
    rows.append([(3 * a) % p for a in rows[2]])
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[20, 60, 120])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--prime", type=int, default=SCREEN_PRIME)
    args = ap.parse_args()

    if BACKEND != "compiled":
        print("compiled kernel not available; only the pure-Python timings are meaningful")
    print(f"{'n':>5} {'python (s)':>12} {'compiled (s)':>13} {'speedup':>8}")
    for n in args.sizes:
        rows = random_matrix(n, args.prime, seed=n)
        assert rank_mod_p(rows, args.prime) == _pykernels.rank_mod_p(rows, args.prime) == n - 2
        slow = min(timeit.repeat(lambda: _pykernels.rank_mod_p(rows, args.prime), number=1, repeat=args.repeat))
        fast = min(timeit.repeat(lambda: rank_mod_p(rows, args.prime), number=1, repeat=args.repeat))
        print(f"{n:>5} {slow:>12.4f} {fast:>13.5f} {slow / fast:>7.0f}x")


if __name__ == "__main__":
    main()
