#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Times the raw kernels on synthetic workloads plus two end-to-end paths
(per-voxel optimization and a full render) with each backend forced in a
subprocess, since the backend is fixed at import time.

Usage: python3 benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent

WORKER = r"""
import json
import sys
import time

import numpy as np

import nlos_radiant.backend as backend
from nlos_radiant.optimizer import select_top_m
from nlos_radiant.renderer import render
from nlos_radiant.scene import load_scene

REPEAT = int(sys.argv[1])
SCENE = sys.argv[2]


def best_of(fn, *args, repeat=REPEAT):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times)


rng = np.random.default_rng(0)
results = {"backend": backend.backend_name()}

m, t = 20000, 24
starts = rng.normal(size=(m, 3))
ends = rng.normal(size=(m, 3))
v0 = rng.normal(size=(t, 3))
v1 = v0 + rng.normal(size=(t, 3))
v2 = v0 + rng.normal(size=(t, 3))
results["segments_blocked 20k x 24"] = best_of(
    backend.segments_blocked, starts, ends, v0, v1, v2)

origins = rng.normal(size=(4096, 3))
dirs = rng.normal(size=(4096, 3))
dirs /= np.linalg.norm(dirs, axis=1, keepdims=True)
tv0 = rng.normal(size=(202, 3))
tv1 = tv0 + rng.normal(size=(202, 3))
tv2 = tv0 + rng.normal(size=(202, 3))
owner = np.arange(202, dtype=np.int32)
results["raycast 4096 x 202"] = best_of(
    backend.raycast_owner, origins, dirs, tv0, tv1, tv2, owner)

n = 400
centers = rng.normal(size=(n, 3))
normals = rng.normal(size=(n, 3))
normals /= np.linalg.norm(normals, axis=1, keepdims=True)
areas = rng.random(n) + 0.01
vis = (rng.random((n, n)) < 0.7).astype(np.uint8)
results["form_factor_matrix 400x400"] = best_of(
    backend.form_factor_matrix, centers, normals, areas, vis)

def optimize_all():
    scene = load_scene(SCENE)  # fresh scene: includes transport build
    return [select_top_m(scene, v, 1, budget=1.0) for v in range(scene.grid.n_voxels)]

results["optimize 100 patches x 64 voxels (cold)"] = best_of(optimize_all)

def render_cold():
    scene = load_scene(SCENE)
    plan = select_top_m(scene, 0, 1, budget=1.0)
    render(scene, plan, None, resolution=(64, 64))

results["render 64x64 (cold)"] = best_of(render_cold)

print(json.dumps(results))
"""


def run_backend(name: str, repeat: int) -> dict:
    env = dict(os.environ, NLOS_RADIANT_BACKEND=name)
    out = subprocess.run(
        [sys.executable, "-c", WORKER, str(repeat), str(ROOT / "scenes" / "wall1.yaml")],
        capture_output=True, text=True, env=env, cwd=ROOT, check=True,
    )
    return json.loads(out.stdout.strip().splitlines()[-1])


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="best-of-N timing")
    args = parser.parse_args()

    results = {}
    for name in ("python", "compiled"):
        try:
            results[name] = run_backend(name, args.repeat)
        except subprocess.CalledProcessError as exc:
            print(f"{name} backend unavailable:\n{exc.stderr}", file=sys.stderr)
    if "compiled" not in results:
        print("compiled backend missing; build it with: pip install -e . --no-build-isolation")

    keys = [k for k in next(iter(results.values())) if k != "backend"]
    width = max(len(k) for k in keys)
    header = f"{'kernel / path':<{width}}"
    for name in results:
        header += f"  {name:>12}"
    if len(results) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for key in keys:
        row = f"{key:<{width}}"
        for name in results:
            row += f"  {results[name][key] * 1e3:>9.2f} ms"
        if len(results) == 2:
            ratio = results["python"][key] / results["compiled"][key]
            row += f"  {ratio:>7.1f}x"
        print(row)
    return 0


if __name__ == "__main__":
    sys.exit(main())
