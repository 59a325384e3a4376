#!/usr/bin/env python3
"""Benchmark the pure-Python word kernel against the compiled one.

Times the four hot kernel operations on identical random inputs, then an
end-to-end element product via a subprocess per backend (the backend is
fixed at import time, so the full-stack comparison needs fresh
interpreters).

Usage: python benchmarks/bench_kernel.py [--repeat N] [--skip-e2e]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from twograph import _kernel_py

try:
    from twograph import _kernel_cy
except ImportError:
    _kernel_cy = None


def make_inputs(seed=7, m=2, n=3, count=400):
    rng = random.Random(seed)
    dsts = list(range(m * n))
    rng.shuffle(dsts)
    fwd = tuple(dsts)
    sequences = [
        [rng.choice([rng.randint(1, m), -rng.randint(1, n)]) for _ in range(30)]
        for _ in range(count)
    ]
    words = [_kernel_py.normalize(_kernel_py.prepare(m, n, fwd), seq) for seq in sequences]
    pairs = [(words[i], words[(i + 1) % count]) for i in range(count)]
    short = [_kernel_py.normalize(_kernel_py.prepare(m, n, fwd),
                                  [rng.choice([rng.randint(1, m), -rng.randint(1, n)])
                                   for _ in range(rng.randint(0, 4))])
             for _ in range(count)]
    return m, n, fwd, sequences, words, pairs, short


def time_op(fn, repeat):
    runs = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        runs.append(time.perf_counter() - start)
    return min(runs)


def bench_backend(mod, inputs, repeat):
    m, n, fwd, sequences, words, pairs, short = inputs
    handle = mod.prepare(m, n, fwd)
    results = {}

    results["normalize(len=30)"] = time_op(
        lambda: [mod.normalize(handle, seq) for seq in sequences], repeat
    ) / len(sequences)
    results["concat"] = time_op(
        lambda: [mod.concat(handle, e1, f1, e2, f2)
                 for (e1, f1), (e2, f2) in pairs], repeat
    ) / len(pairs)
    results["factor(mid)"] = time_op(
        lambda: [mod.factor(handle, e, f, len(e) // 2, len(f) // 2)
                 for e, f in words], repeat
    ) / len(words)
    results["common_ext"] = time_op(
        lambda: [mod.common_ext(handle, eu, fu, ev, fv)
                 for (eu, fu), (ev, fv) in zip(short, short[1:] + short[:1])],
        repeat,
    ) / len(short)
    return results


E2E_SNIPPET = r"""
import random, time
from twograph.kernel import BACKEND
from twograph.semigroup import Permutation2D
from twograph.sampling import random_element, rng_from_seed
from twograph.algebra import mul
theta = Permutation2D.identity(2, 3)
rng = rng_from_seed(11)
elements = [random_element(rng, theta, (2, 2), terms=3) for _ in range(60)]
start = time.perf_counter()
for a in elements:
    for b in elements[:20]:
        mul(a, b)
elapsed = time.perf_counter() - start
print(f"{BACKEND} {elapsed:.4f}")
"""


def bench_e2e():
    out = {}
    for backend in ("pure", "cython"):
        env = dict(os.environ, TWOGRAPH_KERNEL=backend)
        proc = subprocess.run([sys.executable, "-c", E2E_SNIPPET],
                              capture_output=True, text=True, env=env)
        if proc.returncode != 0:
            out[backend] = None
            continue
        name, seconds = proc.stdout.split()
        assert name == backend
        out[backend] = float(seconds)
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--skip-e2e", action="store_true")
    args = parser.parse_args()

    inputs = make_inputs()
    pure = bench_backend(_kernel_py, inputs, args.repeat)

    print(f"{'operation':<20} {'pure':>12} {'cython':>12} {'speedup':>9}")
    if _kernel_cy is None:
        for op, seconds in pure.items():
            print(f"{op:<20} {seconds * 1e6:>10.2f}us {'-':>12} {'-':>9}")
        print("\ncompiled kernel not built; run `pip install -e . --no-build-isolation`")
        return

    compiled = bench_backend(_kernel_cy, inputs, args.repeat)
    for op in pure:
        ratio = pure[op] / compiled[op]
        print(f"{op:<20} {pure[op] * 1e6:>10.2f}us {compiled[op] * 1e6:>10.2f}us "
              f"{ratio:>8.1f}x")

    if not args.skip_e2e:
        e2e = bench_e2e()
        if e2e.get("pure") and e2e.get("cython"):
            ratio = e2e["pure"] / e2e["cython"]
            print(f"{'element products':<20} {e2e['pure']:>10.4f}s "
                  f"{e2e['cython']:>10.4f}s {ratio:>8.1f}x")


if __name__ == "__main__":
    main()
