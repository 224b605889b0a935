"""Compare the compiled and pure-Python kernel backends.

Times each kernel on both backends, checks that they agree, then times a
full J=2 log-likelihood evaluation and one fit under each backend (the
end-to-end runs use a subprocess with ``AMLE_PURE_PYTHON`` set, since the
backend is fixed at import).

    python3 benchmarks/bench_kernels.py [--n 500] [--repeat 20]
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import timeit

import numpy as np

from amle import _kernels_py

try:
    from amle import _kernels as _kernels_c
except ImportError:
    _kernels_c = None

_END_TO_END = """
import timeit
from amle import BACKEND, Vasicek
from amle.estimation import fit
from amle.likelihood import approx_loglik
from amle.simulate import SimSpec, simulate_exact
m = Vasicek()
path = simulate_exact(SimSpec("vasicek", (0.858, 0.0891, 0.0468), {n}, 1 / 12, seed=7))
t_ll = min(timeit.repeat(lambda: approx_loglik(path, m.params((0.858, 0.0891, 0.0468)), 2, m), number=20, repeat=3)) / 20
t_fit = min(timeit.repeat(lambda: fit(path, m, kind=2), number=1, repeat=3))
print(BACKEND, t_ll, t_fit)
"""


def _best(func, number, repeat):
    return min(timeit.repeat(func, number=number, repeat=repeat)) / number


def kernel_cases(n, rng):
    z = rng.standard_normal(n)
    y = rng.uniform(0.5, 2.0, n)
    y0 = rng.uniform(0.5, 2.0, n)
    coef = rng.standard_normal((5, 4))
    bz = rng.uniform(1.0, 200.0, n)
    return {
        "ar1_path": lambda k: k.ar1_path(0.1, 0.01, 0.93, 0.01, z),
        "laurent_eval": lambda k: k.laurent_eval(y, y0, coef, -2, -1),
        "log_bessel_i_vec": lambda k: k.log_bessel_i_vec(1.3, bz),
    }


def end_to_end(n, pure):
    env = dict(os.environ, AMLE_PURE_PYTHON="1" if pure else "0")
    out = subprocess.run(
        [sys.executable, "-c", _END_TO_END.format(n=n)], env=env, capture_output=True, text=True, check=True
    ).stdout.split()
    return out[0], float(out[1]), float(out[2])


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=500, help="path length")
    ap.add_argument("--repeat", type=int, default=20, help="calls per timing")
    args = ap.parse_args(argv)
    rng = np.random.default_rng(0)

    print(f"{'kernel':<18}{'python (us)':>14}{'cython (us)':>14}{'speedup':>10}{'max |diff|':>14}")
    for name, call in kernel_cases(args.n, rng).items():
        tp = _best(lambda: call(_kernels_py), args.repeat, 5) * 1e6
        if _kernels_c is None:
            print(f"{name:<18}{tp:>14.1f}{'n/a':>14}")
            continue
        tc = _best(lambda: call(_kernels_c), args.repeat, 5) * 1e6
        diff = float(np.max(np.abs(np.asarray(call(_kernels_py)) - np.asarray(call(_kernels_c)))))
        print(f"{name:<18}{tp:>14.1f}{tc:>14.1f}{tp / tc:>10.1f}{diff:>14.2e}")

    print()
    print(f"{'backend':<10}{'J=2 loglik (ms)':>18}{'fit (ms)':>12}")
    for pure in (True, False):
        backend, t_ll, t_fit = end_to_end(args.n, pure)
        print(f"{backend:<10}{t_ll * 1e3:>18.3f}{t_fit * 1e3:>12.1f}")


if __name__ == "__main__":
    main()
