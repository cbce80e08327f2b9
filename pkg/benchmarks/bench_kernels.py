"""Compiled kernels vs the pure-Python fallback.

Kernel timings call both modules directly. The end-to-end LR sweep runs in a
subprocess per backend because the backend is fixed at import time.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--skip-sweep]
"""

import argparse
import os
import subprocess
import sys
import timeit
from itertools import product

from qcrystal import _kernels_py

try:
    from qcrystal import _kernels
except ImportError:
    _kernels = None

SWEEP = """
import time
from qcrystal import BACKEND
from qcrystal.decompose import METHODS, lr
from qcrystal.partitions import strict_partitions
t = time.perf_counter()
for n in (2, 3, 4):
    for a in range(7):
        for b in range(7 - a):
            for lam in strict_partitions(a, n):
                for mu in strict_partitions(b, n):
                    for m in METHODS:
                        lr(lam, mu, n, m)
print(BACKEND, time.perf_counter() - t)
"""


def workloads(n=4, length=6):
    words = list(product(range(1, n + 1), repeat=length))
    long_words = [w * 8 for w in words[:: len(words) // 200]]
    return {
        f"f_all, {len(words)} words of length {length}, n={n}": (
            lambda k: [k.f_all(w, n) for w in words]),
        f"e_all, {len(words)} words of length {length}, n={n}": (
            lambda k: [k.e_all(w, n) for w in words]),
        f"s_action, {len(long_words)} words of length {8 * length}": (
            lambda k: [k.s_action(w, i) for w in long_words for i in range(1, n)]),
        f"f_odd i=3, {len(long_words)} words of length {8 * length}": (
            lambda k: [k.f_odd(w, 3) for w in long_words]),
    }


def bench_kernels(repeat):
    print(f"{'workload':<48} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in workloads().items():
        t_py = min(timeit.repeat(lambda: fn(_kernels_py), number=1, repeat=repeat))
        if _kernels is None:
            print(f"{name:<48} {t_py:>9.4f}s {'n/a':>10}")
            continue
        t_cy = min(timeit.repeat(lambda: fn(_kernels), number=1, repeat=repeat))
        print(f"{name:<48} {t_py:>9.4f}s {t_cy:>9.4f}s {t_py / t_cy:>7.1f}x")


def bench_sweep():
    times = {}
    for pure in ("1", ""):
        env = dict(os.environ, QCRYSTAL_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env,
                             capture_output=True, text=True, check=True)
        backend, seconds = out.stdout.split()
        times[backend] = float(seconds)
    print("\nLR sweep, all three methods, |lam|+|mu| <= 6, n = 2..4")
    for backend, seconds in times.items():
        print(f"  {backend:<8} {seconds:.3f}s")
    if len(times) == 2:
        print(f"  speedup  {times['python'] / times['cython']:.1f}x")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-sweep", action="store_true")
    args = parser.parse_args()
    bench_kernels(args.repeat)
    if not args.skip_sweep:
        bench_sweep()


if __name__ == "__main__":
    main()
