"""Benchmark the hot kernels: JIT-compiled path vs pure-NumPy fallback.

The kernel implementation is chosen at import time from the
``RMTLAB_NO_NUMBA`` environment variable, so each path is timed in its
own subprocess and the results are compared here.

Usage::

    python benchmarks/bench_kernels.py [--repeat 7] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time


def _workloads():
    import numpy as np

    rng = np.random.default_rng(12345)

    xs = np.linspace(-20.0, 30.0, 200_000)

    coeffs = rng.standard_normal(64) / np.arange(1, 65) ** 2
    ts = np.linspace(-1.0, 1.0, 200_000)

    theta = np.sort(rng.uniform(0.0, 2.0 * np.pi, 4096))
    n = theta.size
    bounds = np.concatenate([[0.0], theta, [2.0 * np.pi]])
    f_emp = np.arange(0, n + 1) / n
    g_left = f_emp - bounds[:-1] / (2.0 * np.pi)
    g_right = f_emp - bounds[1:] / (2.0 * np.pi)
    seg_len = np.diff(bounds)

    return xs, (coeffs, ts), (g_left, g_right, seg_len)


def _time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def run_worker(repeat: int) -> None:
    from rmtlab import _kernels

    xs, (coeffs, ts), (g_left, g_right, seg_len) = _workloads()

    # Warm-up triggers JIT compilation so it is excluded from the timings.
    _kernels.airy_batch(xs[:64])
    _kernels.clenshaw_batch(coeffs, ts[:64])
    _kernels.w1_circle_solve(g_left[:65], g_right[:65], seg_len[:65])

    timings = {
        "backend": "numba" if _kernels.NUMBA_ENABLED else "numpy",
        "airy_batch[200k]": _time(lambda: _kernels.airy_batch(xs), repeat),
        "clenshaw_batch[64x200k]": _time(
            lambda: _kernels.clenshaw_batch(coeffs, ts), repeat),
        "w1_circle_solve[4096]": _time(
            lambda: _kernels.w1_circle_solve(g_left, g_right, seg_len),
            repeat),
    }
    json.dump(timings, sys.stdout)


def _run_subprocess(no_numba: bool, repeat: int) -> dict:
    env = dict(os.environ)
    if no_numba:
        env["RMTLAB_NO_NUMBA"] = "1"
    else:
        env.pop("RMTLAB_NO_NUMBA", None)
    out = subprocess.run(
        [sys.executable, os.path.abspath(__file__), "--worker",
         "--repeat", str(repeat)],
        env=env, capture_output=True, text=True, check=True)
    return json.loads(out.stdout)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=7,
                        help="timing repetitions per kernel (best is kept)")
    parser.add_argument("--json", default=None,
                        help="also write the raw timings to this path")
    parser.add_argument("--worker", action="store_true",
                        help=argparse.SUPPRESS)
    args = parser.parse_args(argv)

    if args.worker:
        run_worker(args.repeat)
        return 0

    jit = _run_subprocess(no_numba=False, repeat=args.repeat)
    plain = _run_subprocess(no_numba=True, repeat=args.repeat)

    if jit["backend"] != "numba":
        print("note: numba unavailable; both columns use the NumPy fallback")

    names = [k for k in jit if k != "backend"]
    width = max(len(n) for n in names)
    header = (f"{'kernel':<{width}}  {jit['backend']:>12}  "
              f"{plain['backend']:>12}  {'speedup':>8}")
    print(header)
    print("-" * len(header))
    for name in names:
        ratio = plain[name] / jit[name] if jit[name] > 0 else float("inf")
        print(f"{name:<{width}}  {jit[name]*1e3:>10.3f}ms  "
              f"{plain[name]*1e3:>10.3f}ms  {ratio:>7.2f}x")

    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"jit": jit, "fallback": plain}, fh, indent=2)
        print(f"raw timings written to {args.json}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
