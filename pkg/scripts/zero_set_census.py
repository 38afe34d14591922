"""Census of zero, zero-divisor and invertible elements over Z/p.

For every associative catalog algebra and each small prime p, enumerate the
p^dim elements, classify them, and cross-check the count of invertible elements
against a brute-force search for two-sided inverses.
"""

import argparse

from conjal import ModN, catalog, classify
from conjal.fractions import INVERTIBLE, ZERO, ZERO_DIVISOR
from conjal.sampling import all_elements

NAMES = ("complex", "split_complex", "dual", "quaternion", "split_quaternion")


def census(name, p, brute):
    A = catalog(name, ModN(p))
    elems = list(all_elements(A))
    tags = [classify(a).tag for a in elems]
    row = {t: tags.count(t) for t in (ZERO, ZERO_DIVISOR, INVERTIBLE)}
    if brute:
        units = sum(1 for a in elems if any(a * b == A.one == b * a for b in elems))
        row["brute-force units"] = units
    return len(elems), row


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--primes", type=int, nargs="+", default=[2, 3, 5])
    ap.add_argument("--brute-limit", type=int, default=700,
                    help="skip the quadratic brute-force check above this many elements")
    args = ap.parse_args(argv)
    print(f"{'algebra':<17} {'p':>2} {'size':>5} {'zero':>5} {'zero div':>9} {'invertible':>11} {'brute':>6}")
    for name in NAMES:
        for p in args.primes:
            size = p ** catalog(name).dim
            n, row = census(name, p, size <= args.brute_limit)
            brute = row.get("brute-force units", "-")
            print(f"{name:<17} {p:>2} {n:>5} {row[ZERO]:>5} {row[ZERO_DIVISOR]:>9} {row[INVERTIBLE]:>11} {brute!s:>6}")


if __name__ == "__main__":
    main()
