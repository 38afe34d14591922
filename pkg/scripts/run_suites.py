"""Run the property suites with custom sample sizes and write timings as JSON.

    python scripts/run_suites.py --pairs 2000 --json timings.json
"""

import argparse
import dataclasses
import json
import sys

from conjal.suite import SUITES, SuiteConfig, print_table, run_suites


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    for f in dataclasses.fields(SuiteConfig):
        ap.add_argument(f"--{f.name.replace('_', '-')}", type=int, default=f.default)
    ap.add_argument("--only", action="append", choices=list(SUITES))
    ap.add_argument("--json", help="write per-suite results here")
    args = ap.parse_args(argv)
    cfg = SuiteConfig(**{f.name: getattr(args, f.name) for f in dataclasses.fields(SuiteConfig)})
    results = run_suites(args.only, cfg)
    print_table(results, sys.stdout)
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({
                "config": dataclasses.asdict(cfg),
                "suites": [{"name": n, "passed": r.passed, "seconds": round(s, 3),
                            "failed_checks": [c.label for c in r.checks if not c.passed]}
                           for n, r, s in results],
            }, fh, indent=2)
    return 0 if all(r.passed for _, r, _ in results) else 1


if __name__ == "__main__":
    sys.exit(main())
