"""How far the octonions are from associative, and which norm identities survive.

Counts nonzero associators on basis triples, then checks on random integer
samples: N(ab) = N(a)N(b), the left/right alternative laws, and the chain
identity for m = 3, 4 factors under both left- and right-nested products.
"""

import argparse
import itertools
from functools import reduce

from conjal import ZZ, catalog, norm_form
from conjal.sampling import random_element, rng


def left_nested(xs):
    return reduce(lambda a, b: a * b, xs)


def right_nested(xs):
    return reduce(lambda a, b: b * a, reversed(xs))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--samples", type=int, default=500)
    ap.add_argument("--seed", type=int, default=None)
    args = ap.parse_args(argv)

    O = catalog("octonion", ZZ)
    e = [O.basis(i) for i in range(O.dim)]
    triples = list(itertools.product(range(O.dim), repeat=3))
    nonassoc = sum(1 for a, b, c in triples if (e[a] * e[b]) * e[c] != e[a] * (e[b] * e[c]))
    print(f"basis triples with nonzero associator: {nonassoc} / {len(triples)}")

    r = rng(args.seed, "octonion-report")
    counts = dict.fromkeys(["N(ab) = N(a)N(b)", "(aa)b = a(ab)", "(ba)a = b(aa)"], 0)
    for _ in range(args.samples):
        a, b = random_element(O, r), random_element(O, r)
        counts["N(ab) = N(a)N(b)"] += norm_form(a * b) == norm_form(a) * norm_form(b)
        counts["(aa)b = a(ab)"] += (a * a) * b == a * (a * b)
        counts["(ba)a = b(aa)"] += (b * a) * a == b * (a * a)
    for label, n in counts.items():
        print(f"{label:<22} {n}/{args.samples}")

    for m in (3, 4):
        for label, nest in (("left-nested", left_nested), ("right-nested", right_nested)):
            ok = 0
            for _ in range(args.samples):
                xs = [random_element(O, r) for _ in range(m)]
                p = nest(xs)
                ok += p * p.conj() == left_nested([x * x.conj() for x in xs])
            print(f"chain m={m} {label:<13} {ok}/{args.samples}")


if __name__ == "__main__":
    main()
