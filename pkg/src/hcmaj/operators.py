"""Linear operators on M_n as exact n^2 x n^2 matrices.

Vectorization is row-major: component (h-1)*n + k of vec(X) is x_hk.
Column (h-1)*n + k of an operator's representation is vec(T(E_hk)).
Because {E_hk} is orthonormal for <X, Y> = tr(X Y^T), inner products of
matrices are plain dot products of their vecs, which is what lets the
adjoint be a transpose and orthogonal complements be null spaces.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Mapping, Sequence

from .exact import (ZERO, Mat, ShapeError, as_rational, from_columns, identity,
                    mat_add, mat_mul, mat_pow, mat_scale, nullspace, rank, rref,
                    transpose, unit, zeros)


def vec(X: Mat) -> tuple:
    return tuple(X.entries())


def unvec(v: Sequence, n: int) -> Mat:
    if len(v) != n * n:
        raise ShapeError(f"vector of length {len(v)} is not vec of an {n}x{n} matrix")
    return Mat(tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n)), n)


def basis_positions(n: int):
    """(h, k) pairs in vec order."""
    return [(h, k) for h in range(1, n + 1) for k in range(1, n + 1)]


@dataclass(frozen=True)
class OperatorRep:
    n: int
    rep: Mat

    def __post_init__(self):
        if self.rep.shape != (self.n * self.n, self.n * self.n):
            raise ShapeError(f"operator on M_{self.n} needs an {self.n ** 2}-square representation")

    def __call__(self, X: Mat) -> Mat:
        return apply(self, X)

    def __matmul__(self, other: "OperatorRep") -> "OperatorRep":
        return compose(self, other)


def from_basis_images(n: int, images: Mapping[tuple[int, int], Mat]) -> OperatorRep:
    """Operator with T(E_hk) = images[(h, k)]; missing positions map to 0."""
    unknown = set(images) - set(basis_positions(n))
    if unknown:
        raise ValueError(f"basis positions outside M_{n}: {sorted(unknown)}")
    zero = zeros(n)
    cols = []
    for hk in basis_positions(n):
        img = images.get(hk, zero)
        if img.shape != (n, n):
            raise ShapeError(f"image of E_{hk} has shape {img.shape}")
        cols.append(vec(img))
    return OperatorRep(n, from_columns(cols, n * n))


def from_function(n: int, f: Callable[[Mat], Mat]) -> OperatorRep:
    """Tabulate a linear map given as a Python function on matrices."""
    return from_basis_images(n, {(h, k): f(unit(n, h, k)) for h, k in basis_positions(n)})


def identity_op(n: int) -> OperatorRep:
    return OperatorRep(n, identity(n * n))


def zero_op(n: int) -> OperatorRep:
    return OperatorRep(n, zeros(n * n))


def apply(T: OperatorRep, X: Mat) -> Mat:
    if X.shape != (T.n, T.n):
        raise ShapeError(f"operator on M_{T.n} applied to a {X.shape} matrix")
    v = vec(X)
    out = []
    for row in T.rep.data:
        out.append(sum((a * b for a, b in zip(row, v) if a and b), ZERO))
    return unvec(out, T.n)


def compose(S: OperatorRep, T: OperatorRep) -> OperatorRep:
    """S o T (apply T first)."""
    if S.n != T.n:
        raise ShapeError("composing operators on different spaces")
    return OperatorRep(S.n, mat_mul(S.rep, T.rep))


def op_add(S: OperatorRep, T: OperatorRep) -> OperatorRep:
    return OperatorRep(S.n, mat_add(S.rep, T.rep))


def op_scale(c, T: OperatorRep) -> OperatorRep:
    return OperatorRep(T.n, mat_scale(c, T.rep))


def op_pow(T: OperatorRep, k: int) -> OperatorRep:
    return OperatorRep(T.n, mat_pow(T.rep, k))


def adjoint(T: OperatorRep) -> OperatorRep:
    return OperatorRep(T.n, transpose(T.rep))


def basis_image(T: OperatorRep, h: int, k: int) -> Mat:
    n = T.n
    col = (h - 1) * n + (k - 1)
    return unvec([row[col] for row in T.rep.data], n)


# -- the four fundamental subspaces ------------------------------------------

class Subspace(str, Enum):
    KERNEL = "kernel"
    RANGE = "range"
    KERNEL_PERP = "kernel-perp"
    RANGE_PERP = "range-perp"


@dataclass(frozen=True)
class SubspaceBasis:
    """A subspace of M_n held as the nonzero rows of a reduced echelon matrix.

    The echelon form is canonical, so two bases describe the same subspace
    exactly when their ``echelon`` matrices are equal.
    """

    which: str
    n: int
    echelon: Mat
    pivots: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.echelon.rows

    @property
    def vectors(self) -> list[Mat]:
        return [unvec(row, self.n) for row in self.echelon.data]


def span_basis(which: str, n: int, vectors: Sequence[Sequence]) -> SubspaceBasis:
    if not vectors:
        return SubspaceBasis(which, n, Mat(tuple(), n * n), ())
    R, pivots = rref(Mat.of(vectors))
    return SubspaceBasis(which, n, Mat(R.data[:len(pivots)], n * n), tuple(pivots))


def kernel_basis(T: OperatorRep) -> SubspaceBasis:
    return span_basis(Subspace.KERNEL.value, T.n, nullspace(T.rep))


def range_basis(T: OperatorRep) -> SubspaceBasis:
    # column space of rep = row space of its transpose
    return span_basis(Subspace.RANGE.value, T.n, list(transpose(T.rep).data))


def perp_basis(B: SubspaceBasis, which: str | None = None) -> SubspaceBasis:
    N = B.n * B.n
    if B.dim == 0:
        return span_basis(which or f"{B.which}-perp", B.n, list(identity(N).data))
    return span_basis(which or f"{B.which}-perp", B.n, nullspace(B.echelon))


def subspace_basis(T: OperatorRep, which: str) -> SubspaceBasis:
    which = Subspace(which)
    if which is Subspace.KERNEL:
        return kernel_basis(T)
    if which is Subspace.RANGE:
        return range_basis(T)
    if which is Subspace.KERNEL_PERP:
        return perp_basis(kernel_basis(T), which.value)
    return perp_basis(range_basis(T), which.value)


def member(B: SubspaceBasis, X: Mat) -> bool:
    """Exact test of X in span(B), by reducing vec(X) against the echelon rows."""
    if X.shape != (B.n, B.n):
        raise ShapeError("matrix and subspace live in different spaces")
    v = list(vec(X))
    for row, c in zip(B.echelon.data, B.pivots):
        f = v[c]
        if f:
            v = [a - f * b for a, b in zip(v, row)]
    return not any(v)


def op_rank(T: OperatorRep) -> int:
    return rank(T.rep)


def linear_combination(coeffs, mats: Sequence[Mat], n: int) -> Mat:
    out = zeros(n)
    for c, M in zip(coeffs, mats):
        c = as_rational(c)
        if c:
            out = mat_add(out, mat_scale(c, M))
    return out
