"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat N]

Both backends are run on the same inputs and their results compared before
any timing is reported.
"""

import argparse
import time

from coedge import kernels
from coedge.graph import grid_graph, petersen_graph, s_clique_extension
from coedge.spectra import _prime_table

CASES = {
    "charpoly grid(8,7)": ("charpoly", grid_graph(8, 7)),
    "charpoly ext3(petersen)": ("charpoly", s_clique_extension(petersen_graph(), 3)),
    "canonicity grid(5,4)": ("canon", grid_graph(5, 4)),
    "canonicity petersen": ("canon", petersen_graph()),
}


def _run(impl, kind, g):
    if kind == "charpoly":
        matrix = [[int(g.has_edge(i, j)) for j in range(g.n)] for i in range(g.n)]
        return [impl.charpoly_mod(matrix, p) for p in _prime_table(4)]
    return [impl.is_max_canonical(g.rows, m) for m in range(1, g.n + 1)]


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    impls = kernels.IMPLEMENTATIONS
    if "cython" not in impls:
        print("compiled kernels are not built; only the Python backend is available")
    names = sorted(impls)
    print(f"{'case':28s}" + "".join(f"{n:>12s}" for n in names) + ("     speedup" if len(names) == 2 else ""))
    for label, (kind, g) in CASES.items():
        results = {n: _run(impls[n], kind, g) for n in names}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"{label}: backends disagree")
        secs = {n: _best(lambda n=n: _run(impls[n], kind, g), args.repeat) for n in names}
        row = f"{label:28s}" + "".join(f"{secs[n] * 1e3:10.2f}ms" for n in names)
        if len(names) == 2:
            row += f"{secs['python'] / secs['cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
