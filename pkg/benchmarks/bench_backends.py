"""Benchmark the exact-rational backends on the package's hot kernels.

The compiled core (gmpy2's mpq) and the pure-Python fallback
(fractions.Fraction) are selected at import time; this script times three
representative workloads under the current backend and, when run without
CHARCOORDS_PURE_PYTHON set, re-executes itself with the fallback forced and
prints a comparison table.

Usage:  python benchmarks/bench_backends.py [--inner]
"""

import json
import os
import random
import subprocess
import sys
import time


def _workloads():
    from charcoords import (
        LengthsCoord,
        NotAdmissible,
        NotTypePreserving,
        QQ,
        certify_hyperbolic,
        eps_from_negatives,
        simultaneous_switch,
        trace_reduction,
    )
    from charcoords.dynamics import ChartPointE1, conic_k_e1, dx_map_e1
    from charcoords.surface import AXES, EDGES

    def switch_sweep():
        rng = random.Random(1)
        n = 0
        for _ in range(20000):
            lam = {e: QQ(rng.randint(1, 999), rng.randint(1, 999)) for e in EDGES}
            c = LengthsCoord.from_maps(lam, {1: -1, 2: 1, 3: 1, 4: 1})
            try:
                simultaneous_switch(c, rng.choice(AXES))
                n += 1
            except NotAdmissible:
                pass
        return n

    def reduction_sweep():
        rng = random.Random(2)
        n = 0
        for _ in range(2000):
            c = LengthsCoord.from_pair_triple(
                QQ(rng.randint(1, 2**16), rng.randint(1, 2**16)),
                QQ(rng.randint(1, 2**16), rng.randint(1, 2**16)),
                QQ(rng.randint(1, 2**16), rng.randint(1, 2**16)),
                eps_from_negatives({1, 2}),
            )
            try:
                trace_reduction(c)
                n += 1
            except NotTypePreserving:
                pass
        return n

    def orbit_sweep():
        p = ChartPointE1(QQ(2), QQ(2))
        k = conic_k_e1(p)
        for _ in range(4000):
            p = dx_map_e1(p)
            assert conic_k_e1(p) == k
        return 4000

    def certify_sweep():
        c = LengthsCoord.from_pair_triple(13, 4, 2, eps_from_negatives({1}))
        return certify_hyperbolic(c, 9).visited

    return {
        "switch sweep (20k coords)": switch_sweep,
        "trace reduction (2k coords)": reduction_sweep,
        "conic orbit (4k steps)": orbit_sweep,
        "certification (depth 9)": certify_sweep,
    }


def run_current():
    import charcoords

    results = {"backend": charcoords.BACKEND, "timings": {}}
    for name, fn in _workloads().items():
        t0 = time.perf_counter()
        fn()
        results["timings"][name] = time.perf_counter() - t0
    return results


def main():
    if "--inner" in sys.argv:
        print(json.dumps(run_current()))
        return
    here = run_current()
    rows = [here]
    if here["backend"] == "gmpy2":
        env = dict(os.environ, CHARCOORDS_PURE_PYTHON="1")
        out = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--inner"],
            env=env, capture_output=True, text=True, check=True,
        )
        rows.append(json.loads(out.stdout))
    width = max(len(n) for n in here["timings"]) + 2
    header = "workload".ljust(width) + "".join(
        f"{r['backend']:>14}" for r in rows
    )
    print(header)
    print("-" * len(header))
    for name in here["timings"]:
        line = name.ljust(width)
        for r in rows:
            line += f"{r['timings'][name]:>13.2f}s"
        if len(rows) == 2:
            line += f"   x{rows[1]['timings'][name] / rows[0]['timings'][name]:.1f}"
        print(line)


if __name__ == "__main__":
    main()
