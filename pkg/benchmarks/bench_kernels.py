"""Time the hot kernels with numba and with the pure-numpy fallback.

Each backend runs in its own interpreter because the choice is made at
import time from ``VNTOMO_DISABLE_NUMBA``. Usage::

    python benchmarks/bench_kernels.py [--size 64] [--repeat 5] [--json out.json]
"""

import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json, sys, time
import numpy as np
from vntomo import _accel
from vntomo.core import make_rng, spmv, spmv_t
from vntomo.geometry import ImageGrid, ParallelBeamGeometry, build_parallel_beam, scenario_angles
from vntomo.vn import VnConfig, init_params, vn_backward, vn_forward
from vntomo.vn import _kernels as kn

n, repeat = int(sys.argv[1]), int(sys.argv[2])
rng = make_rng(0)
grid = ImageGrid(n, n, 1.0)
geom = ParallelBeamGeometry.for_grid(grid, scenario_angles("sv60"))


def best(fn):
    fn()  # warm-up, includes JIT compilation
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


L = build_parallel_beam(grid, geom)
x = rng.standard_normal((n * n, 10))
y = rng.standard_normal((L.rows, 10))
img = rng.standard_normal((10, n, n))
k = rng.standard_normal((16, 7, 7))
zb = rng.standard_normal((10, 16, n, n))
cfg = VnConfig((n, n), geom.sinogram_shape, K=3, n_f=16, scale_d_out=1e-3, scale_r_out=1e-3)
params = init_params(cfg, rng)
Ls = L.scaled(1.0 / n)
b = rng.standard_normal((4,) + geom.sinogram_shape)
xs = rng.standard_normal((4, n, n))
res = {
    "build_parallel_beam": best(lambda: build_parallel_beam(grid, geom)),
    "spmv (10 rhs)": best(lambda: spmv(L, x)),
    "spmv_t (10 rhs)": best(lambda: spmv_t(L, y)),
    "conv_multi (10x16 filters)": best(lambda: kn.conv_multi(img, k)),
    "conv_multi_adj": best(lambda: kn.conv_multi_adj(zb, k)),
    "kernel_grad": best(lambda: kn.kernel_grad(img, zb, (7, 7))),
    "vn_forward (K=3, batch 4)": best(lambda: vn_forward(b, params, Ls)),
    "vn_backward (K=3, batch 4)": best(lambda: vn_backward(b, params, Ls, xs, 0.5)),
}
json.dump({"use_numba": _accel.USE_NUMBA, "times": res}, sys.stdout)
"""


def run(disable: bool, size: int, repeat: int) -> dict:
    env = dict(os.environ)
    env.pop("VNTOMO_DISABLE_NUMBA", None)
    if disable:
        env["VNTOMO_DISABLE_NUMBA"] = "1"
    out = subprocess.run([sys.executable, "-c", _WORKER, str(size), str(repeat)], env=env, check=True,
                         capture_output=True, text=True)
    return json.loads(out.stdout)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=64, help="image side length")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", default=None, help="also write results here")
    args = ap.parse_args(argv)
    fast = run(False, args.size, args.repeat)
    slow = run(True, args.size, args.repeat)
    if not fast["use_numba"]:
        print("numba unavailable; both columns use the numpy path")
    print(f"{'kernel':32s} {'numba [ms]':>12s} {'numpy [ms]':>12s} {'speedup':>8s}")
    for name, t_fast in fast["times"].items():
        t_slow = slow["times"][name]
        print(f"{name:32s} {1e3 * t_fast:12.2f} {1e3 * t_slow:12.2f} {t_slow / t_fast:8.1f}")
    if args.json:
        with open(args.json, "w") as f:
            json.dump({"size": args.size, "numba": fast, "numpy": slow}, f, indent=2)


if __name__ == "__main__":
    main()
