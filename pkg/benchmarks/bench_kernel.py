"""Compare the compiled and pure-Python stepping kernels.

    python3 benchmarks/bench_kernel.py [--repeat 3]

Each case is a long closed orbit on an integer-scaled table; both kernels
must return identical results before timings are reported.
"""
import argparse
import math
import time
from fractions import Fraction

from rectbilliard import kernel


def _case(p0, m, n, rho):
    """Integer kernel arguments for an AB start, scaled as the simulator does."""
    p0, rho = Fraction(p0), Fraction(rho)
    scale = math.lcm(p0.denominator, rho.denominator) * m * n
    return (int(p0 * scale), 0, n, m, scale, int(rho * scale))


# slope m/n with p0 off the singular set
CASES = {
    "square 3/2": _case(Fraction(1, 7), 3, 2, 1),
    "square 97/89": _case(Fraction(1, 3), 97, 89, 1),
    "rect 211/199 rho=3/2": _case(Fraction(2, 5), 211, 199, Fraction(3, 2)),
}


def _time(backend, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = kernel.run(*args, max_steps=10**6, backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not kernel.compiled_available():
        print("compiled kernel not built; only the Python kernel is available")
    print(f"{'case':<24}{'steps':>8}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, case in CASES.items():
        tp, outp = _time("python", case, args.repeat)
        if kernel.compiled_available():
            tc, outc = _time("cython", case, args.repeat)
            if tuple(outc[:2]) != tuple(outp[:2]) or list(outc[2]) != list(outp[2]):
                raise SystemExit(f"{name}: backends disagree")
            print(f"{name:<24}{len(outp[2]) // 3:>8}{tp:>12.4f}{tc:>12.4f}{tp / tc:>9.1f}x")
        else:
            print(f"{name:<24}{len(outp[2]) // 3:>8}{tp:>12.4f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
