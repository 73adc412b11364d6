"""Benchmark the pure-Python kernels against the numba-compiled ones.

Times the three hot loops on representative workloads: the exhaustive
connectivity scan, the exhaustive pair scan, and max-flow vertex cuts over
all nonadjacent pairs of a double cover. Compile time is excluded by a
warm-up pass.

Usage: python benchmarks/bench_backends.py [--seed N] [--repeats N]
"""

import argparse
import time

from kronconn import double_cover, gnp_random
from kronconn.graph import bit_adjacency, csr_adjacency
from kronconn import _kernels_py

try:
    from kronconn import _kernels_numba

    HAVE_NUMBA = True
except ImportError:
    HAVE_NUMBA = False


def time_call(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workload_kappa_scan(impl, covers):
    def run():
        for bits in covers:
            impl.kappa_scan(bits)

    return run


def workload_b_scan(impl, graphs):
    def run():
        for bits in graphs:
            impl.b_scan(bits)

    return run


def workload_max_flow(impl, flows):
    def run():
        for indptr, nbrs, pairs in flows:
            for s, t in pairs:
                impl.max_flow_vertex_cut(indptr, nbrs, s, t)

    return run


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--repeats", type=int, default=3)
    args = parser.parse_args()

    covers = [
        bit_adjacency(double_cover(gnp_random(7, 0.5, args.seed + i)))
        for i in range(6)
    ]
    scans = [bit_adjacency(gnp_random(9, 0.5, args.seed + i)) for i in range(6)]
    flows = []
    for i in range(4):
        cover = double_cover(gnp_random(12, 0.5, args.seed + i))
        indptr, nbrs = csr_adjacency(cover)
        pairs = [
            (s, t)
            for s in range(cover.n)
            for t in range(s + 1, cover.n)
            if not cover.has_edge(s, t)
        ]
        flows.append((indptr, nbrs, pairs))

    workloads = [
        ("kappa_scan (6x 14-vertex covers)", workload_kappa_scan, covers),
        ("b_scan (6x 9-vertex graphs)", workload_b_scan, scans),
        ("max_flow cuts (4x 24-vertex covers)", workload_max_flow, flows),
    ]

    backends = [("python", _kernels_py)]
    if HAVE_NUMBA:
        backends.append(("numba", _kernels_numba))
        # warm-up pass so compilation is excluded from the timings
        for _, build, data in workloads:
            build(_kernels_numba, data)()
    else:
        print("numba unavailable; timing the pure backend only")

    print(f"{'workload':38s}" + "".join(f"{name:>12s}" for name, _ in backends)
          + ("     speedup" if HAVE_NUMBA else ""))
    for label, build, data in workloads:
        times = [time_call(build(impl, data), args.repeats) for _, impl in backends]
        row = f"{label:38s}" + "".join(f"{t * 1e3:10.1f}ms" for t in times)
        if HAVE_NUMBA:
            row += f"{times[0] / times[1]:10.1f}x"
        print(row)


if __name__ == "__main__":
    main()
