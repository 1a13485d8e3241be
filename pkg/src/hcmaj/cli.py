"""Command line interface.

Exit codes: 0 affirmative answer, 1 negative answer (not majorized, not a
preserver, inverse does not exist, campaign or corpus failure), 2 malformed
input.
"""

from __future__ import annotations

import argparse
import sys

from .campaigns import DEFAULT_DIMS, DEFAULT_TRIALS, THEOREMS, CampaignConfig, run_campaign
from .corpus import run_corpus
from .exact import ShapeError
from .geninv import KINDS, IndexTooLarge, NotInvertible, generalized_inverse
from .io import (FormatError, certificate_json, dumps, entries_json, load_matrix,
                 load_operator, operator_to_json, rational_str, refutation_json)
from .majorization import decide_h, decide_hc
from .preserver import PreserverCertificate, decide_hc_preserver


def _emit(obj):
    sys.stdout.write(dumps(obj) + "\n")


def cmd_check_hc(args) -> int:
    X, Y = load_matrix(args.X), load_matrix(args.Y)
    w = decide_hc(X, Y)
    if w is None:
        _emit({"majorized": False, "relation": "hc"})
        return 1
    _emit({"majorized": True, "relation": "hc",
           "witness": {"r": [rational_str(r) for r in w.combo.coeffs]}})
    return 0


def cmd_check_h(args) -> int:
    X, Y = load_matrix(args.X), load_matrix(args.Y)
    w = decide_h(X, Y)
    if w is None:
        _emit({"majorized": False, "relation": "h"})
        return 1
    _emit({"majorized": True, "relation": "h", "witness": {"D": entries_json(w.d)}})
    return 0


def cmd_decide_preserver(args) -> int:
    T = load_operator(args.T)
    out = decide_hc_preserver(T)
    if isinstance(out, PreserverCertificate):
        _emit(certificate_json(out))
        return 0
    _emit(refutation_json(out))
    return 1


def cmd_geninv(args) -> int:
    T = load_operator(args.T)
    try:
        S = generalized_inverse(T, args.kind)
    except IndexTooLarge as e:
        print(f"no group inverse: index is {e.index}", file=sys.stderr)
        return 1
    except NotInvertible:
        print("no inverse: the operator is not a bijection", file=sys.stderr)
        return 1
    _emit(operator_to_json(S, args.form))
    return 0


def cmd_verify(args) -> int:
    theorems = THEOREMS if args.theorem == "all" else (args.theorem,)
    dims = args.dim or DEFAULT_DIMS
    reports = []
    for th in theorems:
        for n in dims:
            rep = run_campaign(CampaignConfig(th, n, args.trials, args.seed))
            reports.append(rep)
            if args.progress:
                status = "pass" if rep.ok else f"{len(rep.failures)} failures"
                print(f"{th:12s} n={n} trials={rep.trials} skipped={rep.skipped} "
                      f"{status} ({rep.elapsed:.2f}s)", file=sys.stderr)
    _emit([r.to_json(timing=args.timing) for r in reports])
    return 0 if all(r.ok for r in reports) else 1


def cmd_examples(args) -> int:
    report = run_corpus(args.corpus)
    for res in report.results:
        print(f"[{'PASS' if res.ok else 'FAIL'}] {res.name}")
        for label, ok in res.checks:
            if args.verbose or not ok:
                print(f"    {'ok ' if ok else 'BAD'} {label}")
        if args.verbose:
            for who, p in res.certificates.items():
                print(f"    certificate {who}: " + ", ".join(f"{j}->{t}" for j, t in enumerate(p, 1)))
    print(f"{sum(r.ok for r in report.results)}/{len(report.results)} examples reproduced")
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hcmaj", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-hc", help="is X = C o Y for a circulant doubly stochastic C?")
    p.add_argument("X")
    p.add_argument("Y")
    p.set_defaults(func=cmd_check_hc)

    p = sub.add_parser("check-h", help="is X = D o Y for a doubly stochastic D?")
    p.add_argument("X")
    p.add_argument("Y")
    p.set_defaults(func=cmd_check_h)

    p = sub.add_parser("decide-preserver",
                       help="does T preserve Hadamard circulant majorization?")
    p.add_argument("T")
    p.set_defaults(func=cmd_decide_preserver)

    p = sub.add_parser("geninv", help="adjoint or generalized inverse of T")
    p.add_argument("T")
    p.add_argument("--kind", choices=KINDS, required=True)
    p.add_argument("--form", choices=("rep", "basis_images"), default="rep")
    p.set_defaults(func=cmd_geninv)

    p = sub.add_parser("verify", help="run a seeded randomized campaign")
    p.add_argument("--theorem", choices=THEOREMS + ("all",), default="all")
    p.add_argument("--dim", type=int, action="append",
                   help="matrix size n (repeatable; default 3, 4, 5)")
    p.add_argument("--trials", type=int, default=DEFAULT_TRIALS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include elapsed seconds in the JSON")
    p.add_argument("--progress", action="store_true", help="one status line per campaign on stderr")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("examples", help="replay the golden corpus of worked examples")
    p.add_argument("--verbose", action="store_true")
    p.add_argument("--corpus", help="directory of fixture files (default: bundled)")
    p.set_defaults(func=cmd_examples)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return args.func(args)
    except (FormatError, ShapeError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
