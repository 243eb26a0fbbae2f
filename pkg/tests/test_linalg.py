from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bolalg.errors import DimensionError
from bolalg.linalg import (
    Matrix,
    contains,
    coordinates,
    full_space,
    nullspace,
    parse_rational,
    rank,
    rref_rank,
    solve_affine,
    span,
    subspace_combine,
    unit_vector,
    zero_subspace,
)

Q = Fraction


def M(rows):
    return Matrix.from_rows(rows)


def sym(Mx: Matrix) -> sympy.Matrix:
    return sympy.Matrix(Mx.nrows, Mx.ncols, lambda i, j: sympy.Rational(Mx.rows[i][j].numerator,
                                                                         Mx.rows[i][j].denominator))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=4)


@st.composite
def matrices(draw, max_rows=5, max_cols=5):
    r = draw(st.integers(1, max_rows))
    c = draw(st.integers(1, max_cols))
    # bias toward rank deficiency by drawing small integer entries often
    entry = st.one_of(st.integers(-2, 2).map(Fraction), rationals)
    return Matrix.from_rows([[draw(entry) for _ in range(c)] for _ in range(r)])


@st.composite
def subspaces(draw, n):
    k = draw(st.integers(0, n))
    vecs = [[draw(st.integers(-2, 2)) for _ in range(n)] for _ in range(k)]
    return span(vecs, n)


# -- literals ------------------------------------------------------------------------


@pytest.mark.parametrize("text,value", [("7", Q(7)), ("-3/2", Q(-3, 2)), ("+4/6", Q(2, 3)), ("0", Q(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["1.5", "3/-2", "", "a", "1/", "2//3"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_parse_rational_zero_denominator():
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational("1/0")


# -- rref ------------------------------------------------------------------------------


def test_rref_identity():
    R, r = rref_rank(Matrix.identity(3))
    assert R == Matrix.identity(3) and r == 3


def test_rref_proportional_rows():
    R, r = rref_rank(M([[2, 4], [1, 2]]))
    assert R == M([[1, 2], [0, 0]]) and r == 1


def test_rank_singular_3x3():
    assert rank(M([[1, 2, 3], [4, 5, 6], [7, 8, 9]])) == 2


def test_no_overflow_on_large_entries():
    big = 10**40
    A = M([[big, 1], [1, Q(1, big)]])
    assert rank(A) == 1


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rref_matches_sympy(A):
    R, r = rref_rank(A)
    S, piv = sym(A).rref()
    assert r == len(piv)
    assert sym(R) == S


@settings(max_examples=100, deadline=None)
@given(matrices())
def test_rref_idempotent(A):
    R, _ = rref_rank(A)
    assert rref_rank(R)[0] == R


# -- nullspace -----------------------------------------------------------------------


def test_nullspace_of_zero_is_everything():
    assert nullspace(Matrix.zeros(2, 2)) == full_space(2)


def test_nullspace_of_identity_is_trivial():
    assert nullspace(Matrix.identity(3)) == zero_subspace(3)


def test_nullspace_of_row_vector():
    assert nullspace(M([[1, 1]])) == span([(1, -1)], 2)


@settings(max_examples=150, deadline=None)
@given(matrices())
def test_rank_nullity(A):
    K = nullspace(A)
    assert K.dim + rank(A) == A.ncols
    for v in K.basis:
        assert not any(A.apply(v))
    assert K.dim == len(sym(A).nullspace())


# -- subspaces ---------------------------------------------------------------------


def test_sum_of_axes():
    e = lambda i: unit_vector(2, i)  # noqa: E731
    assert subspace_combine(span([e(0)], 2), span([e(1)], 2), "sum") == full_space(2)


def test_intersect_idempotent():
    A = span([(1, 2, 0), (0, 1, 1)], 3)
    assert subspace_combine(A, A, "intersect") == A


def test_intersect_planes():
    A = span([(1, 0, 0), (0, 1, 0)], 3)
    B = span([(0, 1, 0), (0, 0, 1)], 3)
    assert subspace_combine(A, B, "intersect") == span([(0, 1, 0)], 3)


def test_combine_ambient_mismatch():
    with pytest.raises(DimensionError):
        subspace_combine(full_space(2), full_space(3), "sum")


def test_canonical_basis_makes_equality_syntactic():
    assert span([(2, 4), (1, 1)], 2) == span([(1, 0), (0, 1)], 2)
    assert span([(3, 6)], 2).basis == ((Q(1), Q(2)),)


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(subspaces(n), subspaces(n))))
def test_dimension_formula(pair):
    A, B = pair
    s = subspace_combine(A, B, "sum")
    i = subspace_combine(A, B, "intersect")
    assert A.dim + B.dim == s.dim + i.dim
    assert i <= A and i <= B and A <= s and B <= s


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 5).flatmap(lambda n: st.tuples(subspaces(n), st.lists(st.integers(-3, 3), min_size=n,
                                                                             max_size=n))))
def test_contains_agrees_with_rank(pair):
    A, v = pair
    base = rank(A.matrix()) if A.dim else 0
    aug = rank(Matrix.from_rows(list(A.basis) + [v], A.ambient_dim))
    assert contains(A, v) == (aug == base)


def test_contains_examples():
    assert contains(span([(0, 1)], 2), (0, 0))
    assert not contains(span([(0, 1)], 2), (1, 0))
    assert coordinates(span([(1, 2)], 2), (1, 2)) == (1,)


def test_contains_dimension_mismatch():
    with pytest.raises(DimensionError):
        contains(full_space(2), (1, 0, 0))


# -- affine solves -----------------------------------------------------------------


def test_solve_identity():
    p, H = solve_affine(Matrix.identity(2), (1, 0))
    assert p == (1, 0) and H.dim == 0


def test_solve_zero_system():
    p, H = solve_affine(Matrix.zeros(2, 2), (0, 0))
    assert p == (0, 0) and H == full_space(2)


def test_solve_one_equation():
    p, H = solve_affine(M([[1, 1]]), (2,))
    assert p == (2, 0) and H == span([(1, -1)], 2)


def test_solve_inconsistent_is_none():
    assert solve_affine(M([[1, 1], [1, 1]]), (0, 1)) is None


@settings(max_examples=100, deadline=None)
@given(matrices(), st.data())
def test_solutions_satisfy_system(A, data):
    b = tuple(data.draw(rationals) for _ in range(A.nrows))
    sol = solve_affine(A, b)
    oracle_consistent = sym(A).rank() == sym(A).row_join(sympy.Matrix(b)).rank()
    assert (sol is not None) == oracle_consistent
    if sol:
        p, H = sol
        assert A.apply(p) == b
        for h in H.basis:
            assert not any(A.apply(h))
