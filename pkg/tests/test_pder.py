import random
from fractions import Fraction
from itertools import product

import pytest
import sympy

from bolalg.algebra import BolAlgebra, d_matrix, from_lie_algebra
from bolalg.catalog import sl2_pair, solvable2
from bolalg.errors import DimensionError
from bolalg.linalg import Matrix, span, subspace_intersect, unit_vector
from bolalg.pder import (
    companions_of,
    flatten_pair,
    inner_pder_span,
    pair_residual,
    pder_solve,
    split_pair,
)

S2 = from_lie_algebra(solvable2())


def oracle_pair_space(B: BolAlgebra):
    """Null space of the residual map, assembled column by column and reduced by sympy."""
    n = B.dim
    N = n * n + n
    cols = []
    for u in range(N):
        D, z = split_pair(n, unit_vector(N, u))
        cols.append([x for r in pair_residual(B, D, z) for x in r])
    A = sympy.Matrix(len(cols[0]), N, lambda i, j: sympy.Rational(cols[j][i].numerator, cols[j][i].denominator))
    basis = [[Fraction(int(sympy.fraction(x)[0]), int(sympy.fraction(x)[1])) for x in v] for v in A.nullspace()]
    return span(basis, N)


def test_pair_space_matches_oracle(catalog):
    for name, B in catalog.items():
        assert pder_solve(B).pair_space == oracle_pair_space(B), name


def test_pair_space_matches_oracle_on_non_skew_input():
    # binary not skew: every ordered pair must be imposed
    B = BolAlgebra.from_entries(2, binary={(0, 1): (1, 0)}, ternary={(1, 0, 0): (0, 1)})
    assert pder_solve(B).pair_space == oracle_pair_space(B)


def test_zero_algebra_everything_solves():
    for n in (1, 2, 3):
        assert pder_solve(BolAlgebra.zero(n)).pair_space.dim == n * n + n


def test_zero_pair_always_solves(catalog):
    for B in catalog.values():
        n = B.dim
        assert (0,) * (n * n + n) in pder_solve(B).pair_space


def test_basis_pairs_satisfy_identity(catalog):
    for B in catalog.values():
        for D, z in pder_solve(B).pairs():
            assert all(not any(r) for r in pair_residual(B, D, z))


def test_inner_pair_in_solvable():
    D = d_matrix(S2, unit_vector(2, 0), unit_vector(2, 1))
    v = flatten_pair(D, S2.mul(unit_vector(2, 0), unit_vector(2, 1)))
    assert v in pder_solve(S2).pair_space


def test_z_zero_slice_is_derivations(catalog):
    # with z = 0 the identity says D is a derivation of the binary product
    for name, B in catalog.items():
        n = B.dim
        N = n * n + n
        zero_z = span([unit_vector(N, k) for k in range(n * n)], N)
        slice_ = subspace_intersect(pder_solve(B).pair_space, zero_z)
        D = sympy.Matrix(n, n, lambda i, j: sympy.Symbol(f"d{i}_{j}"))
        c = lambda u, v: sympy.Matrix(B.mul(u, v))  # noqa: E731
        e = lambda i: unit_vector(n, i)  # noqa: E731
        eqs = []
        for i, j in product(range(n), repeat=2):
            rhs = sum((D[r, i] * c(e(r), e(j)) + D[r, j] * c(e(i), e(r)) for r in range(n)), sympy.zeros(n, 1))
            eqs.extend(D * c(e(i), e(j)) - rhs)
        jac = sympy.Matrix([[sympy.diff(q, s) for s in D] for q in eqs])
        assert slice_.dim == n * n - jac.rank(), name


# -- companions ---------------------------------------------------------------------


def test_zero_algebra_companions_are_everything():
    D = Matrix.from_rows([[1, 2], [3, 4]])
    com = companions_of(BolAlgebra.zero(2), D)
    assert com.defined and com.homogeneous.dim == 2


def test_zero_map_has_zero_companion(catalog):
    for B in catalog.values():
        com = companions_of(B, Matrix.zeros(B.dim, B.dim))
        assert com.defined and (0,) * B.dim in com


def test_inner_companion_solvable():
    a, b = unit_vector(2, 0), unit_vector(2, 1)
    assert S2.mul(a, b) in companions_of(S2, d_matrix(S2, a, b))


def test_non_pseudo_derivation_has_no_companion():
    # the identity map fails D(e1.e2) = ... for every z on the solvable algebra
    com = companions_of(S2, Matrix.identity(2))
    assert not com.defined
    assert (0, 0) not in com


def test_companions_shape_checked():
    with pytest.raises(DimensionError):
        companions_of(S2, Matrix.identity(3))


def test_companion_members_solve_identity(catalog):
    rng = random.Random(7)
    for B in catalog.values():
        for D, _ in pder_solve(B).pairs():
            com = companions_of(B, D)
            assert com.defined
            for _ in range(3):
                coeffs = [Fraction(rng.randint(-3, 3), rng.randint(1, 3)) for _ in com.homogeneous.basis]
                z = list(com.particular)
                for c, h in zip(coeffs, com.homogeneous.basis):
                    z = [a + c * b for a, b in zip(z, h)]
                assert all(not any(r) for r in pair_residual(B, D, z))


def test_difference_of_companions_is_homogeneous(catalog):
    for B in catalog.values():
        sol = pder_solve(B)
        n = B.dim
        for D, z in sol.pairs():
            com = companions_of(B, D)
            diff = [a - b for a, b in zip(z, com.particular)]
            assert tuple(diff) in com.homogeneous


# -- d_matrix and the inner span --------------------------------------------------------


def test_d_matrix_examples(catalog):
    assert d_matrix(BolAlgebra.zero(2), (1, 0), (0, 1)).is_zero()
    for B in catalog.values():
        for i in range(B.dim):
            assert d_matrix(B, unit_vector(B.dim, i), unit_vector(B.dim, i)).is_zero()
    assert d_matrix(sl2_pair(), (1, 0), (0, 1)) == Matrix.from_rows([[-2, 0], [0, 2]])


def test_inner_span_zero_algebra():
    S, ok = inner_pder_span(BolAlgebra.zero(2))
    assert S.dim == 0 and ok


def test_inner_span_binary_only():
    B = BolAlgebra.from_entries(2, binary={(0, 1): (1, 0), (1, 0): (-1, 0)})
    S, ok = inner_pder_span(B)
    assert S == span([(0, 0, 0, 0, 1, 0)], 6)
    # (0, e1): (e1; x, y) = 0 and (x.y).e1 = 0 for all pairs here, so it lies in Pder
    assert ok


def test_inner_span_sl2_pair():
    S, ok = inner_pder_span(sl2_pair())
    assert S == span([(-2, 0, 0, 2, 0, 0)], 6) and ok
