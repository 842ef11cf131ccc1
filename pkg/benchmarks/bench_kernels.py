"""Compare the compiled and pure-Python search kernels.

    python benchmarks/bench_kernels.py [--sizes 8 10 12 14] [--graphs 20] [--seed 1]

For every size, random graphs at a few densities are solved by each backend;
the table reports total seconds per backend and the speedup.
"""
import argparse
import random
import time

from transitivity import kernels
from transitivity.graph import Graph


def random_graph(n, p, rng):
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def bench(fn, graphs):
    t0 = time.perf_counter()
    values = [fn(g.masks, g.n)[0] for g in graphs]
    return time.perf_counter() - t0, values


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[8, 10, 12, 14])
    ap.add_argument("--graphs", type=int, default=20, help="graphs per size")
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args(argv)

    backends = kernels.backends()
    if "compiled" not in backends:
        print("compiled extension not built; only the Python backend is available")
    names = sorted(backends)
    print(f"{'kernel':<18}{'n':>4}" + "".join(f"{b + ' s':>14}" for b in names) + f"{'speedup':>10}")
    for kernel in ("transitive_order", "grundy_order"):
        for n in args.sizes:
            rng = random.Random(args.seed * 1000 + n)
            graphs = [random_graph(n, rng.choice((0.2, 0.4, 0.6)), rng) for _ in range(args.graphs)]
            times, answers = {}, {}
            for b in names:
                times[b], answers[b] = bench(getattr(backends[b], kernel), graphs)
            if len({tuple(a) for a in answers.values()}) != 1:
                raise SystemExit(f"backends disagree on {kernel} at n={n}")
            speed = times["python"] / times["compiled"] if "compiled" in times else float("nan")
            print(f"{kernel:<18}{n:>4}" + "".join(f"{times[b]:>14.4f}" for b in names) + f"{speed:>10.1f}x")


if __name__ == "__main__":
    main()
