"""Run the acceptance criteria and print one line per criterion.

    python scripts/run_acceptance.py [A1 A5 ...] [--json out.json] [--workers N]
"""

import argparse
import json
import sys

from kpq.verify import SUITES, VerifyConfig, run_criterion


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("criteria", nargs="*", default=list(SUITES["all"]))
    ap.add_argument("--json", help="also write the results here")
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()
    cfg = VerifyConfig(workers=args.workers)
    results = []
    for name in args.criteria:
        res = run_criterion(name, cfg)
        print(res.line(), flush=True)
        results.append(res)
    ok = all(r.passed and r.within_limit for r in results)
    print(f"overall: {'PASS' if ok else 'FAIL'}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([dict(r.as_dict(), seconds=round(r.seconds, 2)) for r in results], fh, indent=2)
    return 0 if ok else 3


if __name__ == "__main__":
    sys.exit(main())
