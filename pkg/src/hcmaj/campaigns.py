"""Seeded randomized campaigns checking the inheritance results.

Trial ``t`` of a campaign with seed ``s`` draws everything from streams
keyed by ``(s, t)``, so a report is identical whether trials run in order,
in parallel, or one at a time.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .circulant import circulant_perm, combo_to_matrix
from .exact import hadamard
from .geninv import (IndexTooLarge, NotInvertible, drazin, group_inverse, inverse,
                     moore_penrose)
from .io import entries_json, operator_to_json
from .majorization import decide_h, decide_hc
from .operators import OperatorRep, adjoint, apply, compose
from .preserver import (PreserverCertificate, decide_hc_preserver, random_combo,
                        random_int_matrix, random_preserver, verify_invariance_lemma)

THEOREMS = ("adjoint", "mp", "drazin", "group", "inverse",
            "invariance", "compose", "implication")
DEFAULT_DIMS = (3, 4, 5)
DEFAULT_TRIALS = 100


@dataclass(frozen=True)
class CampaignConfig:
    theorem: str
    n: int
    trials: int = DEFAULT_TRIALS
    seed: int = 0
    invariance_samples: int = 10
    implication_pairs: int = 4

    def __post_init__(self):
        if self.theorem not in THEOREMS:
            raise ValueError(f"unknown theorem {self.theorem!r}; choose from {THEOREMS}")
        if self.n < 1 or self.trials < 0:
            raise ValueError("need n >= 1 and trials >= 0")


@dataclass
class CampaignReport:
    theorem: str
    n: int
    trials: int
    seed: int
    failures: list[dict] = field(default_factory=list)
    skipped: int = 0  # trials where the inverse in question does not exist
    elapsed: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self, timing: bool = False) -> dict:
        out = {"theorem": self.theorem, "n": self.n, "trials": self.trials,
               "seed": self.seed, "skipped": self.skipped, "pass": self.ok,
               "failures": self.failures}
        if timing:
            out["elapsed"] = round(self.elapsed, 3)
        return out


def trial_seed(seed: int, trial: int) -> int:
    """A per-trial integer seed derived deterministically from (seed, trial)."""
    return int(np.random.SeedSequence((seed, trial)).generate_state(1)[0])


def _inherit(kind: str):
    return {"adjoint": adjoint, "mp": moore_penrose, "drazin": drazin,
            "group": group_inverse, "inverse": inverse}[kind]


def _p_inverse_agrees(cert: PreserverCertificate, derived: PreserverCertificate) -> bool:
    """Where both are forced, the derived operator's P is the inverse of the original."""
    fwd = cert.forced()
    back = derived.forced()
    for j, t in fwd.items():
        if t in back and back[t] != j:
            return False
    return True


def _trial_inheritance(cfg: CampaignConfig, t: int, report: CampaignReport):
    T = random_preserver(cfg.n, trial_seed(cfg.seed, t))
    cert = decide_hc_preserver(T)
    if not isinstance(cert, PreserverCertificate):
        report.failures.append({"trial": t, "reason": "generator produced a non-preserver",
                                "T": operator_to_json(T)})
        return
    try:
        S = _inherit(cfg.theorem)(T)
    except (IndexTooLarge, NotInvertible):
        report.skipped += 1
        return
    derived = decide_hc_preserver(S)
    if not isinstance(derived, PreserverCertificate):
        report.failures.append({"trial": t, "reason": f"{cfg.theorem} is not a preserver",
                                "T": operator_to_json(T)})
    elif cfg.theorem in ("adjoint", "mp") and not _p_inverse_agrees(cert, derived):
        report.failures.append({"trial": t, "reason": "derived P is not P^-1 on forced diagonals",
                                "T": operator_to_json(T)})


def _trial_invariance(cfg: CampaignConfig, t: int, report: CampaignReport):
    s = trial_seed(cfg.seed, t)
    T = random_preserver(cfg.n, s)
    inv = verify_invariance_lemma(T, cfg.invariance_samples, s)
    for which, X, C in inv.failures:
        report.failures.append({"trial": t, "subspace": which, "X": entries_json(X),
                                "r": [str(r) for r in C.coeffs], "T": operator_to_json(T)})


def _trial_compose(cfg: CampaignConfig, t: int, report: CampaignReport):
    s = trial_seed(cfg.seed, t)
    S = random_preserver(cfg.n, s)
    T = random_preserver(cfg.n, s + 1)
    cs, ct = decide_hc_preserver(S), decide_hc_preserver(T)
    ST = compose(S, T)
    c = decide_hc_preserver(ST)
    if not isinstance(c, PreserverCertificate):
        report.failures.append({"trial": t, "reason": "composition is not a preserver"})
        return
    fs, ft = cs.forced(), ct.forced()
    for j, target in c.forced().items():
        if j not in ft or ft[j] not in fs or fs[ft[j]] != target:
            report.failures.append({"trial": t, "reason": f"P of S o T differs at diagonal {j}"})
            return


def _trial_implication(cfg: CampaignConfig, t: int, report: CampaignReport):
    n = cfg.n
    rng = np.random.default_rng((cfg.seed, t))
    T = random_preserver(n, trial_seed(cfg.seed, t))
    pairs = []
    for _ in range(cfg.implication_pairs):
        B = random_int_matrix(rng, n)
        k = int(rng.integers(1, n + 1))
        pairs.append((apply(T, hadamard(circulant_perm(n, k), B)), apply(T, B)))
        Y = random_int_matrix(rng, n)
        pairs.append((hadamard(combo_to_matrix(random_combo(rng, n)), Y), Y))
    for X, Y in pairs:
        if decide_hc(X, Y) is not None and decide_h(X, Y) is None:
            report.failures.append({"trial": t, "X": entries_json(X), "Y": entries_json(Y)})


def run_campaign(cfg: CampaignConfig) -> CampaignReport:
    report = CampaignReport(cfg.theorem, cfg.n, cfg.trials, cfg.seed)
    start = time.perf_counter()
    if cfg.theorem in ("adjoint", "mp", "drazin", "group", "inverse"):
        step = _trial_inheritance
    else:
        step = {"invariance": _trial_invariance, "compose": _trial_compose,
                "implication": _trial_implication}[cfg.theorem]
    for t in range(cfg.trials):
        step(cfg, t, report)
    report.elapsed = time.perf_counter() - start
    return report


def accepted_inverses(T: OperatorRep) -> dict[str, bool | None]:
    """For each inverse kind: accepted as preserver, or None when it does not exist."""
    out = {}
    for kind in ("adjoint", "mp", "drazin", "group", "inverse"):
        try:
            S = _inherit(kind)(T)
        except (IndexTooLarge, NotInvertible):
            out[kind] = None
            continue
        out[kind] = isinstance(decide_hc_preserver(S), PreserverCertificate)
    return out
