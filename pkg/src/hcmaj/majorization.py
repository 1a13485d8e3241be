"""Deciding X = C o Y (circulant doubly stochastic C) and X = D o Y (doubly stochastic D).

Both deciders return a witness or None; a witness is always checkable
exactly with the matching ``verify_*`` function.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

import networkx as nx
from networkx.algorithms.flow import edmonds_karp

from .circulant import (CirculantCombination, combo_to_matrix, diagonal_positions,
                        is_doubly_stochastic)
from .exact import ONE, ZERO, Mat, ShapeError, hadamard


@dataclass(frozen=True)
class HcWitness:
    combo: CirculantCombination

    @property
    def matrix(self) -> Mat:
        return combo_to_matrix(self.combo)


@dataclass(frozen=True)
class HWitness:
    d: Mat


def _check_pair(X: Mat, Y: Mat):
    if X.rows != X.cols or X.shape != Y.shape:
        raise ShapeError(f"need square matrices of equal size, got {X.shape} and {Y.shape}")


def forced_ratios(X: Mat, Y: Mat, j: int) -> set[Fraction] | None:
    """Ratios x/y forced on circulant diagonal j, or None if a zero requirement fails."""
    forced = set()
    for h, k in diagonal_positions(X.rows, j):
        x, y = X[h - 1, k - 1], Y[h - 1, k - 1]
        if y:
            forced.add(x / y)
        elif x:
            return None
    return forced


def decide_hc(X: Mat, Y: Mat) -> HcWitness | None:
    _check_pair(X, Y)
    n = X.rows
    coeffs: list[Fraction | None] = []
    for j in range(1, n + 1):
        forced = forced_ratios(X, Y, j)
        if forced is None or len(forced) > 1:
            return None
        if forced:
            r = forced.pop()
            if not 0 <= r <= 1:
                return None
            coeffs.append(r)
        else:
            coeffs.append(None)
    deficit = ONE - sum((r for r in coeffs if r is not None), ZERO)
    free = [j for j, r in enumerate(coeffs) if r is None]
    if deficit < 0 or deficit > len(free):
        return None
    for j in free:
        take = min(deficit, ONE)
        coeffs[j] = take
        deficit -= take
    return HcWitness(CirculantCombination(tuple(coeffs)))


def decide_h(X: Mat, Y: Mat) -> HWitness | None:
    _check_pair(X, Y)
    n = X.rows
    d = [[ZERO] * n for _ in range(n)]
    free = []
    for i in range(n):
        for j in range(n):
            x, y = X[i, j], Y[i, j]
            if y:
                r = x / y
                if not 0 <= r <= 1:
                    return None
                d[i][j] = r
            elif x:
                return None
            else:
                free.append((i, j))
    rho = [ONE - sum(row, ZERO) for row in d]
    gamma = [ONE - sum(col, ZERO) for col in zip(*d)]
    if any(v < 0 for v in rho + gamma):
        return None
    # the free cells must carry the row and column residuals; a transportation
    # problem, decided by integer max-flow after scaling by a common denominator
    scale = lcm(*(v.denominator for v in rho + gamma))
    G = nx.DiGraph()
    for i, v in enumerate(rho):
        G.add_edge("s", ("r", i), capacity=int(v * scale))
    for j, v in enumerate(gamma):
        G.add_edge(("c", j), "t", capacity=int(v * scale))
    for i, j in free:
        G.add_edge(("r", i), ("c", j), capacity=scale)
    need = sum(int(v * scale) for v in rho)
    if need == 0:
        return HWitness(Mat(tuple(tuple(r) for r in d), n))
    if not free:
        return None
    value, flow = nx.maximum_flow(G, "s", "t", flow_func=edmonds_karp)
    if value != need:
        return None
    for i, j in free:
        d[i][j] = Fraction(flow[("r", i)][("c", j)], scale)
    return HWitness(Mat(tuple(tuple(r) for r in d), n))


def verify_hc_witness(X: Mat, Y: Mat, w: HcWitness) -> bool:
    _check_pair(X, Y)
    if w.combo.n != X.rows:
        return False
    C = combo_to_matrix(w.combo)
    return is_doubly_stochastic(C) and hadamard(C, Y) == X


def verify_h_witness(X: Mat, Y: Mat, w: HWitness) -> bool:
    _check_pair(X, Y)
    return w.d.shape == X.shape and is_doubly_stochastic(w.d) and hadamard(w.d, Y) == X


def hc_majorized(X: Mat, Y: Mat) -> bool:
    return decide_hc(X, Y) is not None


def h_majorized(X: Mat, Y: Mat) -> bool:
    return decide_h(X, Y) is not None

