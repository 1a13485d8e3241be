from fractions import Fraction

import pytest
from hypothesis import given

from hcmaj.circulant import circulant_perm
from hcmaj.exact import Mat, ShapeError, mat_add, mat_scale, unit, zeros, trace_inner
from hcmaj.operators import (OperatorRep, adjoint, apply, basis_image, basis_positions,
                             compose, from_basis_images, from_function, identity_op,
                             kernel_basis, member, perp_basis, range_basis,
                             subspace_basis, unvec, vec)

from conftest import matrices, operators


def example1():
    return from_basis_images(3, {(1, 1): Mat.of([[1, 0, 0], [0, 0, 1], [0, 1, 0]])})


def example5():
    return from_basis_images(3, {(1, 1): circulant_perm(3, 1), (1, 2): circulant_perm(3, 2),
                                 (1, 3): circulant_perm(3, 3)})


def test_vectorization_is_row_major():
    X = Mat.of([[1, 2], [3, 4]])
    assert vec(X) == (1, 2, 3, 4)
    assert unvec(vec(X), 2) == X
    # column (h-1)n + k of the representation is vec(T(E_hk))
    T = from_basis_images(2, {(1, 2): unit(2, 2, 1)})
    assert T.rep[2, 1] == 1 and sum(x != 0 for x in T.rep.entries()) == 1


@given(matrices(n=3))
def test_vec_round_trip(X):
    assert unvec(vec(X), 3) == X


@given(matrices(n=3))
def test_identity_operator(X):
    assert apply(identity_op(3), X) == X


def test_apply_examples():
    assert apply(example1(), Mat.of([[1, 0, 0], [0, 1, 0], [0, 0, 1]])) == \
        Mat.of([[1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert apply(example5(), unit(3, 1, 1)) == circulant_perm(3, 1)


def test_from_function_matches_basis_images():
    T = from_function(3, lambda X: mat_scale(X[0, 1], unit(3, 1, 1)))
    assert basis_image(T, 1, 2) == unit(3, 1, 1)
    assert all(basis_image(T, h, k).is_zero() for h, k in basis_positions(3) if (h, k) != (1, 2))


def test_adjoint_of_single_entry_map():
    T = from_function(3, lambda X: mat_scale(X[0, 1], unit(3, 1, 1)))
    A = adjoint(T)
    # oracle: <T(E_a), E_b> = <E_a, T*(E_b)> on every pair of basis matrices
    for a in basis_positions(3):
        for b in basis_positions(3):
            assert trace_inner(apply(T, unit(3, *a)), unit(3, *b)) == \
                trace_inner(unit(3, *a), apply(A, unit(3, *b)))
    Y = Mat.of([[5, 1, 1], [1, 1, 1], [1, 1, 1]])
    assert apply(A, Y) == mat_scale(5, unit(3, 1, 2))
    assert adjoint(identity_op(3)) == identity_op(3)


@given(operators(n=3), matrices(n=3), matrices(n=3))
def test_adjoint_identity(T, X, Y):
    assert trace_inner(apply(T, X), Y) == trace_inner(X, apply(adjoint(T), Y))
    assert adjoint(adjoint(T)) == T


@given(operators(n=2), operators(n=2), matrices(n=2))
def test_compose_applies_right_factor_first(S, T, X):
    assert apply(compose(S, T), X) == apply(S, apply(T, X))


@given(operators())
def test_rank_nullity(T):
    assert kernel_basis(T).dim + range_basis(T).dim == T.n ** 2


@given(operators())
def test_range_perp_is_kernel_of_adjoint(T):
    Rp = perp_basis(range_basis(T))
    Na = kernel_basis(adjoint(T))
    assert Rp.echelon == Na.echelon  # canonical bases of the same subspace
    for V in Rp.vectors:
        assert member(Na, V)


@given(operators())
def test_subspace_bases_are_correct(T):
    n = T.n
    for V in kernel_basis(T).vectors:
        assert apply(T, V).is_zero()
    for h, k in basis_positions(n):
        assert member(range_basis(T), basis_image(T, h, k))
    K = kernel_basis(T)
    Kp = subspace_basis(T, "kernel-perp")
    for V in Kp.vectors:
        assert all(trace_inner(V, W) == 0 for W in K.vectors)
    assert K.dim + Kp.dim == n * n


def test_member_rejects_outside_vectors():
    T = example5()
    R = range_basis(T)
    assert R.dim == 3
    assert member(R, mat_add(circulant_perm(3, 1), mat_scale(Fraction(1, 2), circulant_perm(3, 3))))
    assert not member(R, unit(3, 1, 1))


def test_zero_subspace():
    Z = OperatorRep(2, zeros(4))
    assert range_basis(Z).dim == 0
    assert perp_basis(range_basis(Z)).dim == 4
    assert member(range_basis(Z), zeros(2))
    assert not member(range_basis(Z), unit(2, 1, 1))


def test_shape_checks():
    with pytest.raises(ShapeError):
        OperatorRep(2, zeros(3))
    with pytest.raises(ShapeError):
        apply(identity_op(2), zeros(3))
    with pytest.raises(ValueError):
        from_basis_images(2, {(3, 1): zeros(2)})
