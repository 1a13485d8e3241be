"""Index, Moore-Penrose, Drazin, group and ordinary inverses of operators.

Every function here checks its result against the defining equations before
returning it. A failed check raises :class:`VerificationError`; that is a
bug, never an expected outcome.
"""

from __future__ import annotations

from dataclasses import dataclass

from .exact import (Mat, SingularMatrix, identity, inverse as mat_inverse,
                    full_rank_factorization, mat_mul, mat_pow, rank, transpose, zeros)
from .operators import (OperatorRep, adjoint, apply, compose,
                        kernel_basis, perp_basis, range_basis)


class VerificationError(RuntimeError):
    pass


class IndexTooLarge(ValueError):
    def __init__(self, index: int):
        super().__init__(f"group inverse does not exist: index {index} > 1")
        self.index = index


class NotInvertible(ValueError):
    pass


@dataclass(frozen=True)
class IndexedOperator:
    op: OperatorRep
    index: int
    ranks: tuple[int, ...]  # rank T^0, ..., rank T^(index+1)


def index_of(T: OperatorRep) -> IndexedOperator:
    """Smallest k >= 0 with rank T^k = rank T^(k+1)."""
    N = T.n * T.n
    ranks = [N]
    power = identity(N)
    while True:
        power = mat_mul(power, T.rep)
        ranks.append(rank(power))
        if ranks[-1] == ranks[-2]:
            return IndexedOperator(T, len(ranks) - 2, tuple(ranks))


def _mp_matrix(A: Mat) -> Mat:
    F, G = full_rank_factorization(A)
    if F.cols == 0:
        return zeros(A.cols, A.rows)
    Ft, Gt = transpose(F), transpose(G)
    return Gt @ mat_inverse(G @ Gt) @ mat_inverse(Ft @ F) @ Ft


def penrose_violations(T: OperatorRep, X: OperatorRep) -> list[str]:
    A, B = T.rep, X.rep
    AB, BA = A @ B, B @ A
    bad = []
    if AB @ A != A:
        bad.append("TXT = T")
    if BA @ B != B:
        bad.append("XTX = X")
    if transpose(AB) != AB:
        bad.append("(TX)* = TX")
    if transpose(BA) != BA:
        bad.append("(XT)* = XT")
    return bad


def moore_penrose(T: OperatorRep, verify: bool = True) -> OperatorRep:
    """Moore-Penrose inverse via a full-rank factorization rep = F G."""
    X = OperatorRep(T.n, _mp_matrix(T.rep))
    if verify:
        bad = penrose_violations(T, X) + mp_contract_violations(T, X)
        if bad:
            raise VerificationError(f"Moore-Penrose checks fail: {bad}")
    return X


def mp_contract_violations(T: OperatorRep, X: OperatorRep) -> list[str]:
    """X T acts as the identity on N(T)^perp, and X kills R(T)^perp."""
    bad = []
    TX = compose(X, T)
    for V in perp_basis(kernel_basis(T)).vectors:
        if apply(TX, V) != V:
            bad.append("X T V = V on N(T)^perp")
            break
    for V in perp_basis(range_basis(T)).vectors:
        if not apply(X, V).is_zero():
            bad.append("X V = 0 on R(T)^perp")
            break
    return bad


def drazin_violations(T: OperatorRep, U: OperatorRep, m: int) -> list[str]:
    A, D = T.rep, U.rep
    Am = mat_pow(A, m)
    bad = []
    if Am @ D @ A != Am:
        bad.append("T^m U T = T^m")
    if D @ A @ D != D:
        bad.append("U T U = U")
    if D @ A != A @ D:
        bad.append("U T = T U")
    return bad


def drazin_contract_violations(T: OperatorRep, U: OperatorRep, m: int) -> list[str]:
    """U kills N(T^m); U T and T U fix R(T^m) pointwise."""
    Tm = OperatorRep(T.n, mat_pow(T.rep, m))
    bad = []
    for V in kernel_basis(Tm).vectors:
        if not apply(U, V).is_zero():
            bad.append("U V = 0 on N(T^m)")
            break
    UT, TU = compose(U, T), compose(T, U)
    for V in range_basis(Tm).vectors:
        if apply(UT, V) != V or apply(TU, V) != V:
            bad.append("U T V = T U V = V on R(T^m)")
            break
    return bad


def drazin(T: OperatorRep, verify: bool = True) -> OperatorRep:
    """Drazin inverse T^m (T^(2m+1))^+ T^m with m the index of T."""
    m = index_of(T).index
    Am = mat_pow(T.rep, m)
    A2m1 = Am @ Am @ T.rep
    U = OperatorRep(T.n, Am @ _mp_matrix(A2m1) @ Am)
    if verify:
        bad = drazin_violations(T, U, m) + drazin_contract_violations(T, U, m)
        if bad:
            raise VerificationError(f"Drazin conditions fail at index {m}: {bad}")
    return U


def group_inverse(T: OperatorRep, verify: bool = True) -> OperatorRep:
    m = index_of(T).index
    if m > 1:
        raise IndexTooLarge(m)
    return drazin(T, verify=verify)


def inverse(T: OperatorRep) -> OperatorRep:
    try:
        inv = mat_inverse(T.rep)
    except SingularMatrix:
        raise NotInvertible("operator is not a bijection") from None
    N = T.n * T.n
    if inv @ T.rep != identity(N):
        raise VerificationError("inverse check failed")
    return OperatorRep(T.n, inv)


def generalized_inverse(T: OperatorRep, kind: str) -> OperatorRep:
    """Dispatch on kind in {adjoint, mp, drazin, group, inverse}."""
    if kind == "adjoint":
        return adjoint(T)
    if kind == "mp":
        return moore_penrose(T)
    if kind == "drazin":
        return drazin(T)
    if kind == "group":
        return group_inverse(T)
    if kind == "inverse":
        return inverse(T)
    raise ValueError(f"unknown inverse kind {kind!r}")


KINDS = ("adjoint", "mp", "drazin", "group", "inverse")

__all__ = ["IndexedOperator", "IndexTooLarge", "NotInvertible", "VerificationError",
           "index_of", "moore_penrose", "drazin", "group_inverse", "inverse",
           "generalized_inverse", "penrose_violations", "mp_contract_violations",
           "drazin_violations", "drazin_contract_violations", "KINDS"]
