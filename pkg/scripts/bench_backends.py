#!/usr/bin/env python3
"""Compare the gmpy2 and fractions rational backends on real workloads.

Each backend runs in its own subprocess (the backend is chosen at import
time via SEPCURVE_RATIONAL_BACKEND), timing three kernels:

  classify   the pinned golden instances plus randomized images
  resultant  shifted resultants of random degree-10 polynomials
  gcd        squarefree decomposition of products with repeated factors

Usage: python3 scripts/bench_backends.py [--repeat N]
"""

import argparse
import json
import os
import subprocess
import sys

_WORKER = r"""
import json, random, sys, time
from sepcurve.classify import classify
from sepcurve.critical import PolynomialPair
from sepcurve.instances import (
    CASE_IDS, case_instance, random_affine_image, random_polynomial,
    theorem3_pair,
)
from sepcurve.rationals import BACKEND
from sepcurve.rpoly import resultant_shift, squarefree_decomposition, squarefree_part

rng = random.Random(13)

def bench(fn):
    t0 = time.perf_counter()
    fn()
    return time.perf_counter() - t0

def classify_load():
    for cid in CASE_IDS:
        base = case_instance(cid)
        classify(base)
        for _ in range(3):
            classify(random_affine_image(base, rng))
    for k in range(3, 9):
        classify(random_affine_image(theorem3_pair(k), rng))

def resultant_load():
    for _ in range(30):
        p = random_polynomial(rng, min_degree=8, max_degree=10, sparse=False)
        resultant_shift(squarefree_part(p.derivative()), p)

def gcd_load():
    for _ in range(60):
        a = random_polynomial(rng, min_degree=2, max_degree=4)
        b = random_polynomial(rng, min_degree=2, max_degree=3)
        squarefree_decomposition(a * a * b)

print(json.dumps({
    "backend": BACKEND,
    "classify": bench(classify_load),
    "resultant": bench(resultant_load),
    "gcd": bench(gcd_load),
}))
"""


def run_backend(name: str, repeat: int) -> dict:
    env = dict(os.environ, SEPCURVE_RATIONAL_BACKEND=name)
    best = None
    for _ in range(repeat):
        out = subprocess.run(
            [sys.executable, "-c", _WORKER],
            env=env,
            capture_output=True,
            text=True,
            check=True,
        )
        sample = json.loads(out.stdout)
        if sample["backend"] != name:
            raise RuntimeError(f"asked for {name}, got {sample['backend']}")
        if best is None:
            best = sample
        else:
            for key in ("classify", "resultant", "gcd"):
                best[key] = min(best[key], sample[key])
    return best


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3, help="best-of-N timing")
    args = ap.parse_args()

    results = []
    for name in ("fractions", "gmpy2"):
        try:
            results.append(run_backend(name, args.repeat))
        except (subprocess.CalledProcessError, RuntimeError) as exc:
            print(f"{name}: unavailable ({exc})", file=sys.stderr)

    kernels = ("classify", "resultant", "gcd")
    print(f"{'backend':12s}" + "".join(f"{k:>12s}" for k in kernels))
    for sample in results:
        row = f"{sample['backend']:12s}"
        row += "".join(f"{sample[k] * 1000:10.1f}ms" for k in kernels)
        print(row)
    if len(results) == 2:
        base, fast = results
        for k in kernels:
            ratio = base[k] / fast[k] if fast[k] > 0 else float("inf")
            print(f"{k}: gmpy2 is {ratio:.1f}x the fractions speed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
