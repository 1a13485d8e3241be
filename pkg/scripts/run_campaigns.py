"""Run every seeded campaign and write a JSON report.

    python scripts/run_campaigns.py --trials 100 --out campaigns.json
"""

import argparse
import json
import sys

from hcmaj.campaigns import DEFAULT_DIMS, THEOREMS, CampaignConfig, run_campaign


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--trials", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--dims", type=int, nargs="+", default=list(DEFAULT_DIMS))
    ap.add_argument("--out", default="-")
    args = ap.parse_args()

    reports = []
    for theorem in THEOREMS:
        for n in args.dims:
            rep = run_campaign(CampaignConfig(theorem, n, args.trials, args.seed))
            print(f"{theorem:12s} n={n}  {'ok' if rep.ok else 'FAIL'}  "
                  f"skipped={rep.skipped}  {rep.elapsed:.1f}s", file=sys.stderr)
            reports.append(rep.to_json(timing=True))
    text = json.dumps(reports, indent=2)
    if args.out == "-":
        print(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    return 0 if all(r["pass"] for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
