"""Time the compiled kernels against the NumPy fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import math
import timeit

import numpy as np

from ratiomax import kernels


def cases(rng):
    n = 1_000_001
    num = np.ascontiguousarray(rng.uniform(-10, 10, n))
    den = np.ascontiguousarray(rng.uniform(0.5, 10, n))
    m = 2000
    radii = np.ascontiguousarray(np.arange(m + 1) / m)
    theta = 2 * math.pi * np.arange(m) / m
    cos_, sin_ = np.ascontiguousarray(np.cos(theta)), np.ascontiguousarray(np.sin(theta))
    w0 = np.ascontiguousarray(rng.uniform(-10, 10, 16))
    w = np.ascontiguousarray(rng.uniform(-10, 10, 16))
    betas = np.ascontiguousarray(np.linspace(-50, 50, 100_001))
    return {
        "ratio_argmax (1e6 nodes)": lambda b: b.ratio_argmax(num, den),
        "polar_scan (2000x2000)": lambda b: b.polar_scan(1.0, 2.0, 0.5, -0.3, 1.0, 5.0,
                                                         radii, cos_, sin_),
        "ball_j_sweep (1e5 betas, n=16)": lambda b: b.ball_j_sweep(w0, w, 1.0, 100.0, 1.0, betas),
    }


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    backends = {"python": kernels.python_backend}
    if kernels.compiled_backend is not None:
        backends["cython"] = kernels.compiled_backend
    else:
        print("compiled kernels not built; timing the fallback only")
    rng = np.random.default_rng(0)
    print(f"{'kernel':<32} " + " ".join(f"{name:>10}" for name in backends) + "   speedup")
    for label, call in cases(rng).items():
        times = {name: min(timeit.repeat(lambda: call(mod), number=1, repeat=args.repeat))
                 for name, mod in backends.items()}
        row = " ".join(f"{t * 1000:>8.2f}ms" for t in times.values())
        speed = f"{times['python'] / times['cython']:>8.1f}x" if "cython" in times else ""
        print(f"{label:<32} {row} {speed}")


if __name__ == "__main__":
    main()
