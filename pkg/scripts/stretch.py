"""Long-running reproductions of the published targets.

    python3 scripts/stretch.py magic5      # 5x5 magic squares Ehrhart series
    python3 scripts/stretch.py cube        # 3x3x3x3 semi-magic cubes
    python3 scripts/stretch.py dinwoodie   # symmetric 7x7 table count
    python3 scripts/stretch.py --latte DIR # write the LattE input files only

Series are compared with the published ones by the cross-multiplied
identity N_ours * D_pub == N_pub * D_ours.
"""
import argparse
import os
import sys
import time

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path[:0] = [HERE, os.path.join(HERE, "..", "tests")]

from instances import latte_text, magic_square, semi_magic_cube, symmetric_table  # noqa: E402
from published import (DINWOODIE_COUNT, DINWOODIE_MARGINS, MAGIC5_DENOMINATOR, MAGIC5_NUMERATOR,  # noqa: E402
                          MAGIC_CUBE_DENOMINATOR, MAGIC_CUBE_NUMERATOR, expand_factors)
from shortrat.ehrhart import ehrhart_series  # noqa: E402
from shortrat.polytope import count  # noqa: E402


def _mul(p, q):
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return out


def same_series(s, num, den):
    return _mul(list(s.numerator), den) == _mul(num, list(s.denominator_poly()))


def run_series(P, num, factors, label):
    t = time.perf_counter()
    s = ehrhart_series(P)
    den = expand_factors(factors)
    ok = same_series(s, num, den)
    print("%s: %s in %.0fs" % (label, "MATCH" if ok else "DIFFERENT", time.perf_counter() - t))
    print("  ours:", s.to_text())
    print("  first coefficients ours %s, published %s" % (s.coefficients(8), _coeffs(num, den, 8)))
    return ok


def _coeffs(num, den, k):
    out = []
    for i in range(k):
        c = num[i] if i < len(num) else 0
        c -= sum(den[j] * out[i - j] for j in range(1, min(i, len(den) - 1) + 1))
        out.append(c // den[0])
    return out


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("target", nargs="?", choices=["magic5", "cube", "dinwoodie"])
    ap.add_argument("--latte", metavar="DIR", help="write LattE files for all targets into DIR and exit")
    args = ap.parse_args(argv)
    if args.latte:
        os.makedirs(args.latte, exist_ok=True)
        for name, P in (("magic5", magic_square(5)), ("cube3333", semi_magic_cube(3, 4)),
                        ("dinwoodie", symmetric_table(DINWOODIE_MARGINS))):
            with open(os.path.join(args.latte, name + ".latte"), "w") as fh:
                fh.write(latte_text(P))
        return 0
    if args.target == "magic5":
        return 0 if run_series(magic_square(5), MAGIC5_NUMERATOR, MAGIC5_DENOMINATOR, "5x5 magic squares") else 1
    if args.target == "cube":
        ok = run_series(semi_magic_cube(3, 4), MAGIC_CUBE_NUMERATOR, MAGIC_CUBE_DENOMINATOR, "3x3x3x3 cubes")
        return 0 if ok else 1
    if args.target == "dinwoodie":
        t = time.perf_counter()
        c = count(symmetric_table(DINWOODIE_MARGINS))
        print("Dinwoodie table: %d (%s) in %.0fs" % (c, "MATCH" if c == DINWOODIE_COUNT else "DIFFERENT",
                                                      time.perf_counter() - t))
        return 0 if c == DINWOODIE_COUNT else 1
    ap.error("give a target or --latte")


if __name__ == "__main__":
    sys.exit(main())
