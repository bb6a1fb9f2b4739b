"""Compare the compiled PBW kernel with the pure-Python fallback.

Two measurements: raw word multiplication on random words (cache cleared
before each pass), and one end-to-end verification suite run in a
subprocess with and without ``W22QUANT_PURE``.

    python benchmarks/bench_kernel.py [--words 300] [--repeat 3]
"""

import argparse
import os
import random
import subprocess
import sys
import time

from w22quant import _kernel_py

try:
    from w22quant import _kernel as _kernel_c
except ImportError:
    _kernel_c = None


def random_words(rng, count, length=4, bound=5):
    out = []
    for _ in range(count):
        codes = [_kernel_py.encode(rng.choice("LW"), rng.randint(-bound, bound)) for _ in range(length)]
        out.append(tuple(sorted(codes)))
    return out


def time_kernel(mod, pairs, repeat):
    best = float("inf")
    for _ in range(repeat):
        mod.clear_cache()
        t0 = time.perf_counter()
        for u, v in pairs:
            mod.mul_words(u, v)
        best = min(best, time.perf_counter() - t0)
    return best


def time_suite(pure, suite, order):
    env = dict(os.environ)
    env.pop("W22QUANT_PURE", None)
    if pure:
        env["W22QUANT_PURE"] = "1"
    cmd = [sys.executable, "-m", "w22quant", "verify", "--suite", suite, "--order", str(order)]
    t0 = time.perf_counter()
    proc = subprocess.run(cmd, env=env, capture_output=True, text=True)
    dt = time.perf_counter() - t0
    if proc.returncode != 0:
        raise SystemExit("suite run failed:\n" + proc.stdout + proc.stderr)
    return dt


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=300)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--suite", default="thm1.4")
    ap.add_argument("--order", type=int, default=4)
    args = ap.parse_args()

    rng = random.Random(0)
    ws = random_words(rng, args.words)
    pairs = [(rng.choice(ws), rng.choice(ws)) for _ in range(args.words)]

    t_py = time_kernel(_kernel_py, pairs, args.repeat)
    print("mul_words x%d  python  %.3fs" % (len(pairs), t_py))
    if _kernel_c is None:
        print("compiled kernel not built; run `python setup.py build_ext --inplace`")
        return
    t_c = time_kernel(_kernel_c, pairs, args.repeat)
    print("mul_words x%d  cython  %.3fs  (%.1fx)" % (len(pairs), t_c, t_py / t_c))

    s_py = time_suite(True, args.suite, args.order)
    s_c = time_suite(False, args.suite, args.order)
    print("verify %s N=%d  python  %.2fs" % (args.suite, args.order, s_py))
    print("verify %s N=%d  cython  %.2fs  (%.1fx)" % (args.suite, args.order, s_c, s_py / s_c))


if __name__ == "__main__":
    main()
