"""Benchmark the pure-Python kernels against the compiled extension.

Workloads are the two hot spots of the engine: exact rank computation
of boundary matrices (rationals via fraction-free elimination, prime
fields via modular elimination) and the shelling-order search.

Usage: python benchmarks/bench_kernels.py [--repeats N]
"""

from __future__ import annotations

import argparse
import random
import statistics
import time
from itertools import combinations

from vdwcomplex._kernels import pure
from vdwcomplex.homology import _boundary_matrix, _faces_by_dim
from vdwcomplex.vdw import vdw_complex

try:
    from vdwcomplex._kernels import _speedups
except ImportError:
    _speedups = None


def skeleton_masks(n: int, size: int) -> list[int]:
    return [sum(1 << (v - 1) for v in c) for c in combinations(range(1, n + 1), size)]


def boundary_of_skeleton(n: int, size: int) -> tuple[list[list[int]], int]:
    """Top boundary matrix of the (size-1)-skeleton of the (n-1)-simplex."""
    levels = _faces_by_dim(skeleton_masks(n, size))
    matrix = _boundary_matrix(levels[size - 1], levels[size])
    return matrix, len(levels[size])


def random_triangle_complex(seed: int, n: int, count: int) -> list[int]:
    rng = random.Random(seed)
    return sorted(rng.sample(skeleton_masks(n, 3), count))


def build_workloads():
    d3, cols3 = boundary_of_skeleton(10, 4)  # 120 x 210, entries -1/0/1
    d2, cols2 = boundary_of_skeleton(10, 3)  # 45 x 120
    stress = random_triangle_complex(11, 8, 16)  # not shellable, ~6.7k states
    return [
        ("rank_bareiss 45x120", lambda impl: impl.rank_bareiss(d2, cols2)),
        ("rank_bareiss 120x210", lambda impl: impl.rank_bareiss(d3, cols3)),
        ("rank_mod_p p=2 120x210", lambda impl: impl.rank_mod_p(d3, cols3, 2)),
        ("rank_mod_p p=101 120x210", lambda impl: impl.rank_mod_p(d3, cols3, 101)),
        (
            "shelling vdW(8,1) [yes]",
            lambda impl: impl.search_shelling(list(vdw_complex(8, 1).facet_masks), 10**8),
        ),
        (
            "shelling vdW(8,2) [no]",
            lambda impl: impl.search_shelling(list(vdw_complex(8, 2).facet_masks), 10**8),
        ),
        (
            "shelling 2-skel of 7-simplex [yes]",
            lambda impl: impl.search_shelling(skeleton_masks(8, 3), 10**8),
        ),
        (
            "shelling random 16 triangles [no]",
            lambda impl: impl.search_shelling(stress, 10**8),
        ),
    ]


def timed(fn, impl, repeats: int) -> tuple[float, object]:
    samples = []
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn(impl)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples), result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=5)
    args = parser.parse_args()

    name_w = 36
    print(f"{'workload':<{name_w}} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, fn in build_workloads():
        t_pure, r_pure = timed(fn, pure, args.repeats)
        if _speedups is None:
            print(f"{name:<{name_w}} {t_pure * 1000:>8.2f}ms {'-':>10} {'-':>8}")
            continue
        t_fast, r_fast = timed(fn, _speedups, args.repeats)
        assert r_pure == r_fast, f"implementations disagree on {name}"
        print(
            f"{name:<{name_w}} {t_pure * 1000:>8.2f}ms {t_fast * 1000:>8.2f}ms "
            f"{t_pure / t_fast:>7.1f}x"
        )
    if _speedups is None:
        print("\ncompiled kernels not available; showing pure timings only")


if __name__ == "__main__":
    main()
