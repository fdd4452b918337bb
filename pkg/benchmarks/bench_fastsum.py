"""Compare the compiled and pure-Python float convolution backends.

Run directly:  python benchmarks/bench_fastsum.py [N ...]
"""

import sys
import time

import numpy as np

from fracdiff._accel import BACKEND, compiled_backend, python_backend


def _time(fn, *args, repeats=5):
    best = float("inf")
    out = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench(sizes):
    backends = [("python", python_backend())]
    try:
        backends.append(("compiled", compiled_backend()))
    except ImportError:
        print("compiled backend not built; benchmarking python only")
    print(f"active backend at import: {BACKEND}")
    print(f"{'N':>8} {'backend':>9} {'table ms':>10} {'convolve ms':>12}")
    rng = np.random.default_rng(0)
    for n in sizes:
        v = rng.standard_normal(n)
        results = {}
        for name, (table, convolve) in backends:
            t_tab, w = _time(table, 0.5, n)
            t_conv, out = _time(convolve, np.asarray(w), v)
            results[name] = out
            print(f"{n:>8} {name:>9} {t_tab * 1e3:>10.3f} {t_conv * 1e3:>12.3f}")
        if len(results) == 2:
            diff = np.max(np.abs(results["python"] - results["compiled"]))
            scale = max(1.0, np.max(np.abs(results["python"])))
            print(f"{'':>8} agreement: max relative difference {diff / scale:.3e}")


if __name__ == "__main__":
    sizes = [int(a) for a in sys.argv[1:]] or [256, 1024, 4096]
    bench(sizes)
