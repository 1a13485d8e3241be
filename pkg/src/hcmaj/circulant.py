"""Circulant permutation matrices and circulant diagonals.

C_j is the j-th power of the cyclic shift with ones at (h, h+1 mod n), so
C_n = I. The positions (h, k) with k = sigma_j(h) form the j-th circulant
diagonal; the main diagonal therefore carries the label n, not 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import ONE, ZERO, Mat, as_rational


def sigma(n: int, j: int, h: int) -> int:
    """Image of h under the j-th power of the n-cycle (1 2 ... n)."""
    return (h + j - 1) % n + 1


def circulant_perm(n: int, j: int) -> Mat:
    if not 1 <= j <= n:
        raise ValueError(f"diagonal index {j} outside 1..{n}")
    return Mat(tuple(tuple(ONE if k == sigma(n, j, h) else ZERO for k in range(1, n + 1))
                     for h in range(1, n + 1)), n)


def diag_index(n: int, h: int, k: int) -> int:
    """The unique j in 1..n with k = sigma_j(h)."""
    if not (1 <= h <= n and 1 <= k <= n):
        raise IndexError(f"position ({h}, {k}) outside an {n}x{n} matrix")
    return (k - h) % n or n


def diagonal_positions(n: int, j: int) -> list[tuple[int, int]]:
    return [(h, sigma(n, j, h)) for h in range(1, n + 1)]


@dataclass(frozen=True)
class CirculantCombination:
    """Coefficients r_1..r_n of a convex combination of C_1..C_n."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(as_rational(r) for r in self.coeffs))
        if any(r < 0 for r in self.coeffs):
            raise ValueError("negative circulant coefficient")
        if sum(self.coeffs, ZERO) != 1:
            raise ValueError("circulant coefficients must sum to 1")

    @property
    def n(self) -> int:
        return len(self.coeffs)

    @classmethod
    def basis(cls, n: int, k: int) -> "CirculantCombination":
        """The combination equal to C_k alone."""
        return cls(tuple(ONE if j == k else ZERO for j in range(1, n + 1)))


def combo_to_matrix(c: CirculantCombination) -> Mat:
    n = c.n
    return Mat(tuple(tuple(c.coeffs[diag_index(n, h, k) - 1] for k in range(1, n + 1))
                     for h in range(1, n + 1)), n)


def is_doubly_stochastic(M: Mat) -> bool:
    if M.rows != M.cols:
        return False
    if any(x < 0 for row in M.data for x in row):
        return False
    return (all(sum(row, ZERO) == 1 for row in M.data)
            and all(sum(col, ZERO) == 1 for col in zip(*M.data)))


def as_circulant_combo(M: Mat) -> CirculantCombination | None:
    """Read r off the circulant diagonals, or None if M is not circulant doubly stochastic."""
    n = M.rows
    if M.cols != n:
        return None
    coeffs = []
    for j in range(1, n + 1):
        values = {M[h - 1, k - 1] for h, k in diagonal_positions(n, j)}
        if len(values) != 1:
            return None
        coeffs.append(values.pop())
    if any(r < 0 for r in coeffs) or sum(coeffs, ZERO) != 1:
        return None
    return CirculantCombination(tuple(coeffs))
