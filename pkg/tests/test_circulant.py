from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hcmaj.circulant import (CirculantCombination, as_circulant_combo, circulant_perm,
                             combo_to_matrix, diag_index, diagonal_positions,
                             is_doubly_stochastic)
from hcmaj.exact import Mat, hadamard, identity, mat_add, mat_mul, mat_scale, ones, zeros


def test_circulant_perm_examples():
    assert circulant_perm(3, 3) == identity(3)
    assert circulant_perm(3, 1) == Mat.of([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
    assert mat_mul(circulant_perm(4, 1), circulant_perm(4, 3)) == identity(4)


def test_circulant_perm_range():
    with pytest.raises(ValueError):
        circulant_perm(3, 0)
    with pytest.raises(ValueError):
        circulant_perm(3, 4)


def test_diag_index_examples():
    assert diag_index(3, 1, 1) == 3
    assert diag_index(3, 2, 3) == 1
    assert circulant_perm(3, 1)[1, 2] == 1
    assert diag_index(3, 3, 2) == 2
    assert circulant_perm(3, 2)[2, 1] == 1
    with pytest.raises(IndexError):
        diag_index(3, 0, 1)


@pytest.mark.parametrize("n", range(1, 9))
def test_diagonals_partition_positions(n):
    seen = {}
    for j in range(1, n + 1):
        for h, k in diagonal_positions(n, j):
            assert diag_index(n, h, k) == j
            seen[(h, k)] = j
    assert len(seen) == n * n
    total = zeros(n)
    for j in range(1, n + 1):
        total = mat_add(total, circulant_perm(n, j))
    assert total == ones(n)


@pytest.mark.parametrize("n", range(1, 9))
def test_distinct_circulants_have_disjoint_support(n):
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            prod = hadamard(circulant_perm(n, i), circulant_perm(n, j))
            assert prod == (circulant_perm(n, i) if i == j else zeros(n))


@given(st.integers(1, 7), st.integers(1, 7), st.integers(1, 7))
def test_products_of_circulants(n, i, j):
    i, j = (i - 1) % n + 1, (j - 1) % n + 1
    assert (mat_mul(circulant_perm(n, i), circulant_perm(n, j))
            == circulant_perm(n, (i + j - 1) % n + 1))


@st.composite
def combos(draw, n=None):
    n = draw(st.integers(1, 6)) if n is None else n
    w = draw(st.lists(st.integers(0, 5), min_size=n, max_size=n).filter(any))
    return CirculantCombination(tuple(Fraction(x, sum(w)) for x in w))


@given(combos())
def test_combo_round_trip_and_stochastic(c):
    M = combo_to_matrix(c)
    assert is_doubly_stochastic(M)
    assert as_circulant_combo(M) == c


def test_is_doubly_stochastic_examples():
    assert is_doubly_stochastic(identity(3))
    assert is_doubly_stochastic(mat_scale(Fraction(1, 3), ones(3)))
    P = Mat.of([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert is_doubly_stochastic(P)
    assert not is_doubly_stochastic(Mat.of([[2, -1], [-1, 2]]))
    assert not is_doubly_stochastic(Mat.of([["1/2", "1/2"], ["1/2", "1/4"]]))


def test_as_circulant_combo_examples():
    assert as_circulant_combo(identity(3)).coeffs == (0, 0, 1)
    assert as_circulant_combo(Mat.of([[1, 0, 0], [0, 0, 1], [0, 1, 0]])) is None
    half = mat_add(mat_scale(Fraction(1, 2), circulant_perm(3, 1)),
                   mat_scale(Fraction(1, 2), circulant_perm(3, 2)))
    assert as_circulant_combo(half).coeffs == (Fraction(1, 2), Fraction(1, 2), 0)
    # circulant pattern but not stochastic
    assert as_circulant_combo(mat_scale(2, identity(3))) is None


def test_combination_validation():
    with pytest.raises(ValueError):
        CirculantCombination((Fraction(1, 2), Fraction(1, 3)))
    with pytest.raises(ValueError):
        CirculantCombination((2, -1))
