"""How often random preservers are bijective, index 1, or of higher index."""

import argparse
from collections import Counter

from hcmaj.geninv import index_of
from hcmaj.preserver import random_preserver


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--count", type=int, default=100)
    ap.add_argument("--dims", type=int, nargs="+", default=[3, 4, 5])
    args = ap.parse_args()
    for n in args.dims:
        mix = Counter(index_of(random_preserver(n, s)).index for s in range(args.count))
        print(f"n={n}: " + ", ".join(f"index {m}: {c}" for m, c in sorted(mix.items())))


if __name__ == "__main__":
    main()
