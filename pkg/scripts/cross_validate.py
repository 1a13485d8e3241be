"""Compare the structural preserver decision against the sampling oracle
on the mixed operator corpus, and print a table of outcomes per n."""

import argparse
import time

from hcmaj.preserver import (PreserverCertificate, decide_hc_preserver, mixed_corpus,
                             theorem4_oracle)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=200)
    ap.add_argument("--budget", type=int, default=64)
    ap.add_argument("--dims", type=int, nargs="+", default=[3, 4])
    args = ap.parse_args()

    print(f"{'n':>3} {'accepted':>9} {'rejected':>9} {'unconfirmed':>12} {'disagree':>9} {'secs':>6}")
    bad = 0
    for n in args.dims:
        start = time.perf_counter()
        acc = rej = unconfirmed = disagree = 0
        for i, T in enumerate(mixed_corpus(n, args.size)):
            res = decide_hc_preserver(T, args.budget, seed=i)
            if isinstance(res, PreserverCertificate):
                acc += 1
                disagree += not theorem4_oracle(T, args.budget, i).ok
            else:
                rej += 1
                unconfirmed += res.counterexample is None
        bad += unconfirmed + disagree
        print(f"{n:>3} {acc:>9} {rej:>9} {unconfirmed:>12} {disagree:>9} "
              f"{time.perf_counter() - start:>6.1f}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
