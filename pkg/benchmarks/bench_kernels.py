"""Benchmark the compiled polynomial kernel against the pure-Python fallback.

Runs each workload in a fresh interpreter (the kernel is chosen at import
time; CYBELAB_PURE=1 forces the fallback) and prints a comparison table.

    python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import json
import os
import subprocess
import sys
import time


def workload_poly_products():
    # many small sparse products, the shape of the bracket engine's hot path
    import random
    from fractions import Fraction
    from cybelab import kernel
    from cybelab.poly import MPoly
    rng = random.Random(1)
    pool = []
    for _ in range(60):
        terms = {}
        for _ in range(8):
            exps = [rng.randint(-6, 6) for _ in range(3)] + [0, 0, 0, 0]
            terms[kernel.pack(exps)] = Fraction(rng.randint(-9, 9),
                                                rng.randint(1, 5))
        pool.append(MPoly({k: c for k, c in terms.items() if c}))
    acc = 0
    for _ in range(6):
        for p in pool:
            for q in pool:
                acc += len((p * q).terms)
    return acc


def workload_symbolic_pencil():
    from cybelab.brackets import pencil_cybe_symbolic
    out = 0
    for _ in range(15):
        out += int(pencil_cybe_symbolic("r2_minus").is_zero)
    return out


def workload_window_identity():
    from fractions import Fraction
    from cybelab.completed import lemma_identity_check
    rep = lemma_identity_check((Fraction(1), Fraction(0), Fraction(-1)), 6)
    return int(rep["equal"])


WORKLOADS = {
    "laurent-products": workload_poly_products,
    "symbolic-pencil-cybe": workload_symbolic_pencil,
    "window-identity-w6": workload_window_identity,
}


def run_single(name: str) -> float:
    fn = WORKLOADS[name]
    fn()  # warm caches
    best = None
    for _ in range(3):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def main():
    if len(sys.argv) > 1 and sys.argv[1] == "--single":
        name = sys.argv[2]
        from cybelab import kernel
        print(json.dumps({"kernel": kernel.KERNEL_NAME,
                          "seconds": run_single(name)}))
        return
    rows = []
    for name in WORKLOADS:
        timings = {}
        for pure in (False, True):
            env = dict(os.environ)
            env.pop("CYBELAB_PURE", None)
            if pure:
                env["CYBELAB_PURE"] = "1"
            out = subprocess.run(
                [sys.executable, __file__, "--single", name],
                env=env, capture_output=True, text=True, check=True)
            data = json.loads(out.stdout.strip().splitlines()[-1])
            timings[data["kernel"]] = data["seconds"]
        rows.append((name, timings))
    width = max(len(n) for n, _ in rows)
    print(f"{'workload':<{width}}  {'cython':>9}  {'pure':>9}  speedup")
    for name, t in rows:
        cy = t.get("cython")
        pu = t.get("pure")
        if cy is None:
            print(f"{name:<{width}}  {'n/a':>9}  {pu:>9.3f}  (extension not built)")
        else:
            print(f"{name:<{width}}  {cy:>9.3f}  {pu:>9.3f}  {pu / cy:>6.2f}x")


if __name__ == "__main__":
    main()
