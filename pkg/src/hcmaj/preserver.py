"""Which operators preserve Hadamard circulant majorization.

The decision is made on basis images. Write U_j for the set of circulant
diagonals hit by the images T(E_hk) of the positions on diagonal j. T is a
preserver exactly when every U_j has at most one element and the nonempty
U_j are pairwise disjoint; the map j -> (the element of U_j) then extends to
a permutation P with T(C_j o B) = C_P(j) o T(B) for every B.

Random matrices for the sampling oracle have integer entries uniform in
-3..3, drawn from numpy's PCG64 seeded by ``SeedSequence((seed, trial))``,
so every trial has its own reproducible stream independent of execution
order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .circulant import (CirculantCombination, circulant_perm, combo_to_matrix,
                        diag_index, diagonal_positions)
from .exact import ZERO, Mat, hadamard, mat_add, unit, zeros
from .majorization import decide_hc
from .operators import (OperatorRep, Subspace, apply, basis_image,
                        from_basis_images, linear_combination, member,
                        subspace_basis)

CONFIRM_BUDGET = 64


def trial_rng(seed: int, trial: int) -> np.random.Generator:
    return np.random.default_rng((seed, trial))


def random_int_matrix(rng: np.random.Generator, n: int, low: int = -3, high: int = 3) -> Mat:
    return Mat.of(rng.integers(low, high + 1, size=(n, n)).tolist())


def random_combo(rng: np.random.Generator, n: int) -> CirculantCombination:
    w = rng.integers(0, 6, size=n).tolist()
    if not any(w):
        w[int(rng.integers(0, n))] = 1
    total = sum(w)
    return CirculantCombination(tuple(Fraction(x, total) for x in w))


# -- diagonal profile ----------------------------------------------------------

@dataclass(frozen=True)
class DiagonalProfile:
    n: int
    touched: tuple[frozenset[int], ...]  # touched[j-1] = U_j
    # (source diagonal, target diagonal) -> first (source position, target position)
    evidence: dict = field(default_factory=dict, compare=False, repr=False)

    def U(self, j: int) -> frozenset[int]:
        return self.touched[j - 1]


def diagonal_profile(T: OperatorRep) -> DiagonalProfile:
    n = T.n
    touched = []
    evidence = {}
    for j in range(1, n + 1):
        U = set()
        for h, k in diagonal_positions(n, j):
            img = basis_image(T, h, k)
            for a in range(n):
                for b in range(n):
                    if img[a, b]:
                        t = diag_index(n, a + 1, b + 1)
                        U.add(t)
                        evidence.setdefault((j, t), ((h, k), (a + 1, b + 1)))
        touched.append(frozenset(U))
    return DiagonalProfile(n, tuple(touched), evidence)


# -- decision ------------------------------------------------------------------

@dataclass(frozen=True)
class PreserverCertificate:
    p: tuple[int, ...]  # p[j-1] = P(j)
    profile: DiagonalProfile

    def P(self, j: int) -> int:
        return self.p[j - 1]

    def forced(self) -> dict[int, int]:
        """P restricted to diagonals whose images are not all zero."""
        return {j: next(iter(U)) for j, U in enumerate(self.profile.touched, 1) if U}

    def permutation(self) -> tuple[int, ...]:
        return permutation_completion(self)


@dataclass(frozen=True)
class Refutation:
    kind: str  # "diagonal-split" or "diagonal-collision"
    sources: tuple[int, ...]  # source diagonal(s) j (and r for a collision)
    targets: tuple[int, ...]  # the touched diagonals that witness the violation
    positions: tuple  # ((source position, target position), ...) reproducing it
    counterexample: tuple[int, Mat] | None = None  # (k, B) with T(C_k o B) not HC-below T(B)


def decide_hc_preserver(T: OperatorRep, confirm_budget: int = CONFIRM_BUDGET,
                        seed: int = 0) -> PreserverCertificate | Refutation:
    prof = diagonal_profile(T)
    n = T.n
    ref = _structural_violation(prof)
    if ref is not None:
        found = _confirm(T, ref, confirm_budget, seed)
        if found is not None:
            ref = Refutation(ref.kind, ref.sources, ref.targets, ref.positions, found)
        return ref
    used = set().union(*prof.touched)
    spare = min((t for t in range(1, n + 1) if t not in used), default=None)
    p = tuple(next(iter(U)) if U else spare for U in prof.touched)
    return PreserverCertificate(p, prof)


def is_hc_preserver(T: OperatorRep) -> bool:
    return _structural_violation(diagonal_profile(T)) is None


def _structural_violation(prof: DiagonalProfile) -> Refutation | None:
    n = prof.n
    for j in range(1, n + 1):
        U = sorted(prof.U(j))
        if len(U) >= 2:
            a, b = U[:2]
            return Refutation("diagonal-split", (j,), (a, b),
                              (prof.evidence[(j, a)], prof.evidence[(j, b)]))
    for j in range(1, n + 1):
        for r in range(j + 1, n + 1):
            common = prof.U(j) & prof.U(r)
            if common:
                t = min(common)
                return Refutation("diagonal-collision", (j, r), (t,),
                                  (prof.evidence[(j, t)], prof.evidence[(r, t)]))
    return None


def _confirm(T: OperatorRep, ref: Refutation, budget: int, seed: int):
    n = T.n
    # structured guesses first: whole source diagonals, then random matrices
    candidates = [circulant_perm(n, j) for j in ref.sources]
    if len(ref.sources) > 1:
        candidates.append(mat_add(*candidates[:2]))
    candidates += [circulant_perm(n, j) for j in range(1, n + 1) if j not in ref.sources]
    for B in candidates:
        k = theorem4_failure(T, B)
        if k is not None:
            return (k, B)
    result = theorem4_oracle(T, budget, seed)
    return None if result.ok else result.failure


def theorem4_failure(T: OperatorRep, B: Mat) -> int | None:
    """First k for which T(C_k o B) = C o T(B) has no circulant doubly stochastic C."""
    TB = apply(T, B)
    for k in range(1, T.n + 1):
        if decide_hc(apply(T, hadamard(circulant_perm(T.n, k), B)), TB) is None:
            return k
    return None


@dataclass(frozen=True)
class OracleResult:
    ok: bool
    failure: tuple[int, Mat] | None = None
    trial: int | None = None


def theorem4_oracle(T: OperatorRep, trials: int, seed: int) -> OracleResult:
    """Sample B and check T(C_k o B) is HC-majorized by T(B) for every k.

    Sound as a refuter; passing is only evidence.
    """
    for t in range(trials):
        B = random_int_matrix(trial_rng(seed, t), T.n)
        k = theorem4_failure(T, B)
        if k is not None:
            return OracleResult(False, (k, B), t)
    return OracleResult(True)


def permutation_completion(cert: PreserverCertificate) -> tuple[int, ...]:
    """A permutation agreeing with the certificate on every forced diagonal."""
    n = cert.profile.n
    forced = cert.forced()
    spare = iter(sorted(set(range(1, n + 1)) - set(forced.values())))
    return tuple(forced[j] if j in forced else next(spare) for j in range(1, n + 1))


def lemma_identity_holds(T: OperatorRep, cert: PreserverCertificate) -> bool:
    """Exhaustive basis check of T(C_j o E) = C_P(j) o T(E) for every E_hk and j."""
    n = T.n
    for h in range(1, n + 1):
        for k in range(1, n + 1):
            E = unit(n, h, k)
            TE = apply(T, E)
            for j in range(1, n + 1):
                lhs = apply(T, hadamard(circulant_perm(n, j), E))
                if lhs != hadamard(circulant_perm(n, cert.P(j)), TE):
                    return False
    return True


# -- necessary condition for Hadamard-majorization preservers --------------------

@dataclass(frozen=True)
class HmCheck:
    passed: bool
    witness: tuple[int, int, int, int] | None = None  # (i, j, k, l)
    position: tuple[int, int] | None = None
    advisory: bool = False  # n < 3: the condition is not known to be necessary


def hm_necessary_check(T: OperatorRep) -> HmCheck:
    """T(E_ij) o T(E_kl) = 0 for all (i, j) != (k, l).

    Necessary for preserving Hadamard majorization when n >= 3. Passing does
    not certify preservation.
    """
    n = T.n
    positions = [(h, k) for h in range(1, n + 1) for k in range(1, n + 1)]
    images = {hk: basis_image(T, *hk) for hk in positions}
    for a, p in enumerate(positions):
        for q in positions[a + 1:]:
            prod = hadamard(images[p], images[q])
            if not prod.is_zero():
                pos = next((i + 1, j + 1) for i in range(n) for j in range(n) if prod[i, j])
                return HmCheck(False, p + q, pos, n < 3)
    return HmCheck(True, advisory=n < 3)


# -- random preservers -----------------------------------------------------------

def random_preserver(n: int, seed: int, p: Sequence[int] | None = None,
                     singular: float | None = None) -> OperatorRep:
    """A random operator mapping circulant diagonal j into diagonal p(j).

    Each diagonal-to-diagonal block is an n x n integer matrix. With
    probability ``singular`` (default 1/n) a block is instead a product of
    random n x r and r x n factors with r < n, so kernels and nontrivial
    indices show up alongside bijections.
    """
    singular = 1 / n if singular is None else singular
    rng = np.random.default_rng((seed, n))
    if p is None:
        p = [int(x) + 1 for x in rng.permutation(n)]
    p = list(p)
    if sorted(p) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {p}")
    images = {}
    for j in range(1, n + 1):
        if rng.random() < singular:
            r = int(rng.integers(0, n))
            block = rng.integers(-2, 3, size=(n, r)) @ rng.integers(-2, 3, size=(r, n))
        else:
            block = rng.integers(-3, 4, size=(n, n))
        src = diagonal_positions(n, j)
        dst = diagonal_positions(n, p[j - 1])
        for col, (h, k) in enumerate(src):
            img = [[ZERO] * n for _ in range(n)]
            for row, (a, b) in enumerate(dst):
                img[a - 1][b - 1] = Fraction(int(block[row, col]))
            images[(h, k)] = Mat(tuple(tuple(r_) for r_ in img), n)
    return from_basis_images(n, images)


def random_operator(n: int, seed: int, rank: int | None = None, density: float = 1.0,
                    low: int = -2, high: int = 2) -> OperatorRep:
    """A random integer operator; with ``rank`` set, a product of n^2 x rank and
    rank x n^2 factors, so its rank is at most ``rank``."""
    rng = np.random.default_rng((seed, n, 1))
    N = n * n
    if rank is None:
        vals = rng.integers(low, high + 1, size=(N, N))
    else:
        vals = rng.integers(low, high + 1, size=(N, rank)) @ rng.integers(low, high + 1, size=(rank, N))
    if density < 1.0:
        vals = vals * (rng.random((N, N)) < density)
    return OperatorRep(n, Mat.of(vals.tolist()))


def corrupt(T: OperatorRep, seed: int) -> OperatorRep:
    """Add one random nonzero to one random entry of the representation."""
    rng = np.random.default_rng((seed, T.n, 2))
    N = T.n * T.n
    i, j = (int(x) for x in rng.integers(0, N, size=2))
    delta = int(rng.choice([-2, -1, 1, 2]))
    rows = [list(r) for r in T.rep.data]
    rows[i][j] += delta
    return OperatorRep(T.n, Mat(tuple(tuple(r) for r in rows), N))


def mixed_corpus(n: int, size: int = 200, seed: int = 0) -> list[OperatorRep]:
    """Cross-validation operators cycling through four families: dense
    random, sparse random, random preservers, and corrupted preservers."""
    out = []
    for i in range(size):
        s = seed * size + i
        kind = i % 4
        if kind == 0:
            out.append(random_operator(n, s))
        elif kind == 1:
            out.append(random_operator(n, s, density=0.15))
        elif kind == 2:
            out.append(random_preserver(n, s))
        else:
            out.append(corrupt(random_preserver(n, s), s))
    return out


# -- subspace invariance -----------------------------------------------------------

SUBSPACES = tuple(s.value for s in Subspace)


@dataclass(frozen=True)
class InvarianceReport:
    checked: int
    failures: tuple = ()

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_invariance_lemma(T: OperatorRep, trials: int, seed: int) -> InvarianceReport:
    """C o X stays in K for random X in K, random circulant doubly stochastic C,
    and K each of kernel, range and their orthogonal complements."""
    n = T.n
    failures = []
    checked = 0
    for s, which in enumerate(SUBSPACES):
        K = subspace_basis(T, which)
        basis = K.vectors
        for t in range(trials):
            rng = np.random.default_rng((seed, s, t))
            coeffs = [Fraction(int(a), int(b)) for a, b in
                      zip(rng.integers(-3, 4, size=len(basis)), rng.integers(1, 4, size=len(basis)))]
            X = linear_combination(coeffs, basis, n) if basis else zeros(n)
            C = random_combo(rng, n)
            checked += 1
            if not member(K, hadamard(combo_to_matrix(C), X)):
                failures.append((which, X, C))
    return InvarianceReport(checked, tuple(failures))


def breaks_range_invariance(T: OperatorRep, D: Mat, X: Mat) -> bool:
    """True when X is in R(T) but D o X is not."""
    R = subspace_basis(T, Subspace.RANGE.value)
    return member(R, X) and not member(R, hadamard(D, X))
