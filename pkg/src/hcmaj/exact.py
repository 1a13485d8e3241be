"""Exact rational matrices.

Scalars are :class:`fractions.Fraction` throughout; nothing in this package
ever touches a float. Elimination is done fraction-free (Bareiss) on
integer-cleared rows and only normalized to rationals at the end.

Indices in the public API of the other modules are 1-based to match the
usual matrix notation; inside this module everything is 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence

ZERO = Fraction(0)
ONE = Fraction(1)


class ShapeError(ValueError):
    pass


class SingularMatrix(ValueError):
    pass


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: they would silently smuggle rounding into the
    exact pipeline.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        return Fraction(int(x))
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if hasattr(x, "__index__"):  # numpy integers
        return Fraction(int(x))
    raise TypeError(f"not an exact rational: {x!r}")


@dataclass(frozen=True)
class Mat:
    """Dense immutable rational matrix, stored as a tuple of row tuples."""

    data: tuple[tuple[Fraction, ...], ...]
    ncols: int = -1

    def __post_init__(self):
        if self.ncols < 0:
            object.__setattr__(self, "ncols", len(self.data[0]) if self.data else 0)
        for row in self.data:
            if len(row) != self.ncols:
                raise ShapeError("ragged rows")

    @classmethod
    def of(cls, rows: Iterable[Iterable], ncols: int | None = None) -> "Mat":
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        return cls(data, -1 if ncols is None else ncols)

    @property
    def rows(self) -> int:
        return len(self.data)

    @property
    def cols(self) -> int:
        return self.ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i][j]

    def __iter__(self):
        return iter(self.data)

    def entries(self) -> list[Fraction]:
        """Row-major flat list of entries."""
        return [x for row in self.data for x in row]

    def is_zero(self) -> bool:
        return not any(x for row in self.data for x in row)

    def __add__(self, other: "Mat") -> "Mat":
        return mat_add(self, other)

    def __sub__(self, other: "Mat") -> "Mat":
        return mat_add(self, mat_scale(-1, other))

    def __neg__(self) -> "Mat":
        return mat_scale(-1, self)

    def __matmul__(self, other: "Mat") -> "Mat":
        return mat_mul(self, other)

    @property
    def T(self) -> "Mat":
        return transpose(self)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in row) for row in self.data)
        return f"Mat[{self.rows}x{self.cols}]({body})"


def zeros(rows: int, cols: int | None = None) -> Mat:
    cols = rows if cols is None else cols
    return Mat(tuple((ZERO,) * cols for _ in range(rows)), cols)


def identity(n: int) -> Mat:
    return Mat(tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n)), n)


def ones(n: int) -> Mat:
    return Mat(tuple((ONE,) * n for _ in range(n)), n)


def unit(n: int, h: int, k: int) -> Mat:
    """The matrix unit E_hk of M_n (1-based h, k)."""
    if not (1 <= h <= n and 1 <= k <= n):
        raise IndexError(f"E_{h}{k} out of range for n={n}")
    return Mat(tuple(tuple(ONE if (i, j) == (h - 1, k - 1) else ZERO for j in range(n))
                     for i in range(n)), n)


def from_columns(columns: Sequence[Sequence[Fraction]], nrows: int) -> Mat:
    return Mat(tuple(tuple(col[i] for col in columns) for i in range(nrows)), len(columns))


def _same_shape(X: Mat, Y: Mat):
    if X.shape != Y.shape:
        raise ShapeError(f"shape mismatch {X.shape} vs {Y.shape}")


def hadamard(X: Mat, Y: Mat) -> Mat:
    _same_shape(X, Y)
    return Mat(tuple(tuple(a * b for a, b in zip(rx, ry)) for rx, ry in zip(X.data, Y.data)),
               X.cols)


def trace_inner(X: Mat, Y: Mat) -> Fraction:
    """<X, Y> = tr(X Y^T), i.e. the sum of entrywise products."""
    _same_shape(X, Y)
    return sum((a * b for rx, ry in zip(X.data, Y.data) for a, b in zip(rx, ry) if a and b),
               ZERO)


def mat_add(A: Mat, B: Mat) -> Mat:
    _same_shape(A, B)
    return Mat(tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(A.data, B.data)),
               A.cols)


def mat_scale(c, A: Mat) -> Mat:
    c = as_rational(c)
    return Mat(tuple(tuple(c * a for a in row) for row in A.data), A.cols)


def transpose(A: Mat) -> Mat:
    if A.rows == 0:
        return Mat(tuple(() for _ in range(A.cols)), 0)
    return Mat(tuple(zip(*A.data)), A.rows)


def mat_mul(A: Mat, B: Mat) -> Mat:
    if A.cols != B.rows:
        raise ShapeError(f"cannot multiply {A.shape} by {B.shape}")
    # zero-skipping: operator representations are mostly sparse
    sparse_b = [[(j, b) for j, b in enumerate(row) if b] for row in B.data]
    out = []
    for row in A.data:
        acc = [ZERO] * B.cols
        for k, a in enumerate(row):
            if a:
                for j, b in sparse_b[k]:
                    acc[j] += a * b
        out.append(tuple(acc))
    return Mat(tuple(out), B.cols)


def mat_pow(A: Mat, k: int) -> Mat:
    if A.rows != A.cols:
        raise ShapeError("power of a non-square matrix")
    result = identity(A.rows)
    base = A
    while k:
        if k & 1:
            result = mat_mul(result, base)
        k >>= 1
        if k:
            base = mat_mul(base, base)
    return result


def hstack(A: Mat, B: Mat) -> Mat:
    if A.rows != B.rows:
        raise ShapeError("hstack row mismatch")
    return Mat(tuple(ra + rb for ra, rb in zip(A.data, B.data)), A.cols + B.cols)


# -- elimination -----------------------------------------------------------

def _integer_rows(A: Mat) -> list[list[int]]:
    rows = []
    for row in A.data:
        d = lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * d) for x in row])
    return rows


def bareiss_echelon(A: Mat) -> tuple[list[list[int]], list[int]]:
    """Fraction-free row echelon form.

    Rows are first scaled to integers (which does not change the row space),
    then eliminated with Bareiss' exact-division update. Pivot choice is the
    first row with a nonzero entry in the current column.

    Returns the integer echelon rows and the pivot columns.
    """
    M = _integer_rows(A)
    m, ncols = len(M), A.cols
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == m:
            break
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        if p != r:
            M[r], M[p] = M[p], M[r]
        piv = M[r][c]
        prow = M[r]
        for i in range(r + 1, m):
            row = M[i]
            a = row[c]
            for j in range(c + 1, ncols):
                q, rem = divmod(piv * row[j] - a * prow[j], prev)
                assert rem == 0
                row[j] = q
            row[c] = 0
        # rows above r keep their old scale; only later rows use prev
        prev = piv
        pivots.append(c)
        r += 1
    for i in range(r, m):
        M[i] = [0] * ncols
    return M, pivots


def rank(A: Mat) -> int:
    return len(bareiss_echelon(A)[1])


def rref(A: Mat) -> tuple[Mat, list[int]]:
    """Reduced row echelon form and pivot columns."""
    M, pivots = bareiss_echelon(A)
    R = [[Fraction(x) for x in row] for row in M]
    for r, c in enumerate(pivots):
        piv = R[r][c]
        R[r] = [x / piv for x in R[r]]
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        prow = R[r]
        nz = [(j, x) for j, x in enumerate(prow) if x]
        for i in range(r):
            f = R[i][c]
            if f:
                row = R[i]
                for j, x in nz:
                    row[j] -= f * x
    return Mat(tuple(tuple(row) for row in R), A.cols), pivots


def nullspace(A: Mat) -> list[tuple[Fraction, ...]]:
    """Basis of {x : A x = 0}, one vector per free column."""
    R, pivots = rref(A)
    free = [c for c in range(A.cols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [ZERO] * A.cols
        v[f] = ONE
        for r, c in enumerate(pivots):
            v[c] = -R[r, f]
        basis.append(tuple(v))
    return basis


def solve(A: Mat, b: Mat) -> Mat | None:
    """Some exact solution of ``A x = b`` (free variables set to 0), or None."""
    if b.rows != A.rows:
        raise ShapeError("right-hand side has the wrong number of rows")
    R, pivots = rref(hstack(A, b))
    if any(c >= A.cols for c in pivots):
        return None
    x = [[ZERO] * b.cols for _ in range(A.cols)]
    for r, c in enumerate(pivots):
        x[c] = list(R.data[r][A.cols:])
    return Mat(tuple(tuple(row) for row in x), b.cols)


def inverse(A: Mat) -> Mat:
    n = A.rows
    if A.cols != n:
        raise ShapeError("inverse of a non-square matrix")
    R, pivots = rref(hstack(A, identity(n)))
    if pivots[:n] != list(range(n)):
        raise SingularMatrix("matrix is not invertible")
    return Mat(tuple(row[n:] for row in R.data), n)


def full_rank_factorization(A: Mat) -> tuple[Mat, Mat]:
    """A = F G with F = pivot columns of A and G = nonzero rows of rref(A)."""
    R, pivots = rref(A)
    r = len(pivots)
    F = Mat(tuple(tuple(row[c] for c in pivots) for row in A.data), r)
    G = Mat(R.data[:r], A.cols)
    return F, G
