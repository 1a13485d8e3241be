"""Golden corpus: the worked examples, replayed against committed fixtures.

The fixtures in ``hcmaj/data`` were typed in from the displayed formulas,
not generated by this package, so a match is independent evidence.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from importlib.resources import files
from pathlib import Path

from .circulant import as_circulant_combo, circulant_perm, is_doubly_stochastic
from .exact import Mat, hadamard, identity
from .geninv import group_inverse, index_of, moore_penrose
from .io import load_json, parse_entries, parse_operator
from .majorization import decide_hc
from .operators import (OperatorRep, apply, basis_image, basis_positions, member,
                        subspace_basis)
from .preserver import (PreserverCertificate, Refutation, decide_hc_preserver,
                        hm_necessary_check, lemma_identity_holds)


def default_corpus_dir() -> Path:
    return Path(str(files("hcmaj") / "data"))


@dataclass
class ExampleResult:
    name: str
    checks: list[tuple[str, bool]] = field(default_factory=list)
    certificates: dict[str, tuple[int, ...]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(ok for _, ok in self.checks)

    def check(self, label: str, ok: bool):
        self.checks.append((label, bool(ok)))

    @property
    def mismatches(self) -> list[str]:
        return [label for label, ok in self.checks if not ok]


@dataclass
class CorpusReport:
    results: list[ExampleResult]
    elapsed: float

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)


def _mat(rows, n=3) -> Mat:
    return parse_entries(rows, n)


def _operator_mismatches(got: OperatorRep, want: OperatorRep) -> list[tuple[int, int]]:
    return [(h, k) for h, k in basis_positions(got.n)
            if basis_image(got, h, k) != basis_image(want, h, k)]


def _certify(res: ExampleResult, label: str, T: OperatorRep, want_p) -> PreserverCertificate | None:
    cert = decide_hc_preserver(T)
    if not isinstance(cert, PreserverCertificate):
        res.check(f"{label} accepted as preserver", False)
        return None
    res.certificates[label] = cert.p
    res.check(f"{label} certificate P = {tuple(want_p)}", cert.p == tuple(want_p))
    res.check(f"{label} satisfies T(C_j o B) = C_P(j) o T(B) on the basis",
              lemma_identity_holds(T, cert))
    return cert


def example1(fx: dict) -> ExampleResult:
    res = ExampleResult(fx["name"])
    T = parse_operator(fx["operator"])
    exp = fx["expected"]
    I = identity(3)
    TI = apply(T, I)
    lhs = apply(T, hadamard(circulant_perm(3, 1), I))
    res.check("T(C_1 o I) matches", lhs == _mat(exp["T_of_C1_hadamard_I"]))
    res.check("T(I) matches", TI == _mat(exp["T_of_I"]))
    for j, rows in exp["C_hadamard_T_of_I"].items():
        res.check(f"C_{j} o T(I) matches", hadamard(circulant_perm(3, int(j)), TI) == _mat(rows))
    res.check("T(C_1 o I) is not HC-majorized by T(I)", decide_hc(lhs, TI) is None)
    out = decide_hc_preserver(T)
    res.check("refuted as preserver", isinstance(out, Refutation) is not exp["hc_preserver"])
    if isinstance(out, Refutation):
        res.check(f"refutation kind {exp['refutation_kind']}", out.kind == exp["refutation_kind"])
        res.check(f"split at diagonal {exp['split_source']}", out.sources == (exp["split_source"],))
        ce = exp["counterexample"]
        res.check("counterexample (k, B) matches",
                  out.counterexample is not None
                  and out.counterexample[0] == ce["k"]
                  and out.counterexample[1] == _mat(ce["B"]))
    res.check("Hadamard-majorization necessary condition passes",
              hm_necessary_check(T).passed == (exp["hm_necessary"] == "pass"))
    return res


def example2(fx: dict) -> ExampleResult:
    res = ExampleResult(fx["name"])
    T = parse_operator(fx["operator"])
    exp = fx["expected"]
    _certify(res, "T", T, exp["P"])
    hm = hm_necessary_check(T)
    want = exp["hm_necessary"]
    res.check("Hadamard-majorization necessary condition fails", not hm.passed)
    res.check(f"witness {tuple(want['witness'])}", hm.witness == tuple(want["witness"]))
    res.check(f"nonzero at {tuple(want['position'])}", hm.position == tuple(want["position"]))
    return res


def example3(fx: dict) -> ExampleResult:
    res = ExampleResult(fx["name"])
    T = parse_operator(fx["operator"])
    exp = fx["expected"]
    X, D = _mat(fx["X"]), _mat(fx["D"])
    _certify(res, "T", T, exp["P"])
    res.check("D is doubly stochastic", is_doubly_stochastic(D))
    res.check("D is not circulant", as_circulant_combo(D) is None)
    DX = hadamard(D, X)
    res.check("D o X matches", DX == _mat(exp["D_hadamard_X"]))
    R = subspace_basis(T, "range")
    res.check("X in R(T)", member(R, X) == exp["X_in_range"])
    res.check("D o X not in R(T)", member(R, DX) == exp["D_hadamard_X_in_range"])
    return res


def example4(fx: dict) -> ExampleResult:
    res = ExampleResult(fx["name"])
    T = parse_operator(fx["operator"])
    want = parse_operator(fx["group_inverse"])
    exp = fx["expected"]
    res.check(f"index {exp['index']}", index_of(T).index == exp["index"])
    G = group_inverse(T)
    bad = _operator_mismatches(G, want)
    res.check("group inverse matches closed form on all basis matrices"
              + (f" (differs at {bad})" if bad else ""), not bad)
    _certify(res, "T", T, exp["P"])
    _certify(res, "T#", G, exp["P_group_inverse"])
    return res


def example5(fx: dict) -> ExampleResult:
    res = ExampleResult(fx["name"])
    T = parse_operator(fx["operator"])
    want = parse_operator(fx["moore_penrose"])
    exp = fx["expected"]
    M = moore_penrose(T)
    bad = _operator_mismatches(M, want)
    res.check("Moore-Penrose inverse matches closed form on all basis matrices"
              + (f" (differs at {bad})" if bad else ""), not bad)
    _certify(res, "T", T, exp["P"])
    _certify(res, "T+", M, exp["P_moore_penrose"])
    return res


RUNNERS = {
    "example1.json": example1,
    "example2.json": example2,
    "example3.json": example3,
    "example4.json": example4,
    "example5.json": example5,
}


def run_corpus(directory=None) -> CorpusReport:
    directory = Path(directory) if directory is not None else default_corpus_dir()
    start = time.perf_counter()
    results = [runner(load_json(directory / fname)) for fname, runner in RUNNERS.items()]
    return CorpusReport(results, time.perf_counter() - start)
