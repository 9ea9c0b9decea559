"""Time the pure-Python and compiled kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat N]

Path enumeration runs over B(lam) for a few G2 shapes with the (p-1)rho
shift; convolution multiplies two Weyl characters.
"""

import argparse
import time

from frobctl import kernels
from frobctl.charring import weyl_character
from frobctl.kernels import _pure
from frobctl.lspaths import common_denominator, lowest_weight
from frobctl.rootdata import build_root_datum, weyl_dimension

PATH_CASES = [("G2", (2, 2), 2), ("G2", (4, 3), 3), ("B2", (10, 10), 5), ("G2", (6, 6), 5)]
CONV_CASES = [("A2", (6, 6), (5, 5)), ("G2", (3, 3), (2, 2)), ("B2", (8, 8), (6, 6))]


def best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t)
    return min(times), out


def enumerate_case(impl, d, lam, p, bounds):
    denom = common_denominator(d, lam)
    shift = (p - 1,) * d.rank
    if impl is _pure:
        return lambda: _pure.enumerate_paths(d.simple_roots, lam, denom, shift, 10**9)
    return lambda: impl.enumerate_paths(d.simple_roots, lam, denom, shift, 10**9, bounds)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if kernels.fast is None:
        print("compiled kernel not available; build with `pip install -e . --no-build-isolation`")
        return
    print(f"{'kernel':<12}{'case':<26}{'size':>10}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for label, lam, p in PATH_CASES:
        d = build_root_datum(label)
        low = lowest_weight(d, lam)
        bounds = [int(x) for x in d.root_coords([a - b for a, b in zip(lam, low)])]
        tp, rp = best(enumerate_case(_pure, d, lam, p, bounds), 1)
        tf, rf = best(enumerate_case(kernels.fast, d, lam, p, bounds), args.repeat)
        assert rp[0] == rf[0] == weyl_dimension(d, lam)
        print(f"{'paths':<12}{f'{label} {lam} p={p}':<26}{rp[0]:>10}{tp:>12.3f}{tf:>12.4f}{tp / tf:>10.0f}x")
    for label, a, b in CONV_CASES:
        d = build_root_datum(label)
        ca, cb = dict(weyl_character(d, a)), dict(weyl_character(d, b))
        tp, rp = best(lambda: _pure.convolve(ca, cb), args.repeat)
        tf, rf = best(lambda: kernels.fast.convolve(ca, cb), args.repeat)
        assert dict(rp) == dict(rf)
        print(f"{'convolve':<12}{f'{label} {a}x{b}':<26}{len(ca) * len(cb):>10}{tp:>12.3f}{tf:>12.4f}{tp / tf:>10.0f}x")


if __name__ == "__main__":
    main()
