import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bolalg.algebra import BolAlgebra, check_axioms, from_lie_algebra
from bolalg.catalog import bol_catalog, heisenberg, solvable2
from bolalg.errors import DimensionError, PreconditionError, QuotientError
from bolalg.ideals import (
    Morphism,
    coequalizer,
    equalizer,
    factor_colimit,
    factor_limit,
    first_iso,
    ideal_check,
    ideal_closure,
    injections,
    is_ideal,
    is_morphism,
    is_subalgebra,
    kernel_image,
    product,
    quotient,
)
from bolalg.linalg import Matrix, full_space, nullspace, rank, span, zero_subspace

S2 = from_lie_algebra(solvable2())


def M(rows):
    return Matrix.from_rows(rows)


# -- ideals ---------------------------------------------------------------------


@pytest.mark.parametrize("mode", ["literal", "strong"])
def test_trivial_ideals(catalog, mode):
    for B in catalog.values():
        assert is_ideal(B, zero_subspace(B.dim), mode)[0]
        assert is_ideal(B, full_space(B.dim), mode)[0]


def test_solvable_ideal_e1():
    assert is_ideal(S2, span([(1, 0)], 2))[0]


def test_solvable_not_ideal_e2():
    ok, (kind, idx, w) = is_ideal(S2, span([(0, 1)], 2))
    assert not ok and kind == "I.B" and idx == (1, 1) and w == (-1, 0)
    c = ideal_check(S2, span([(0, 1)], 2))
    assert c.name == "ideal-literal" and not c.passed


def test_literal_ideal_need_not_be_strong():
    # only (e2; e1, e2) = e2 is nonzero: span{e1} absorbs slot-1 products but not slot 2
    B = BolAlgebra.from_entries(2, ternary={(1, 0, 1): (0, 1)})
    I = span([(1, 0)], 2)
    assert is_ideal(B, I, "literal")[0]
    ok, wit = is_ideal(B, I, "strong")
    assert not ok and wit[0] == "(B;I,B)"
    with pytest.raises(QuotientError) as ei:
        quotient(B, I, "literal")
    assert ei.value.condition == "ill-defined-quotient"


def test_is_ideal_dimension_mismatch():
    with pytest.raises(DimensionError):
        is_ideal(S2, full_space(3))


# -- closure ----------------------------------------------------------------------


def test_closure_examples():
    assert ideal_closure(S2, zero_subspace(2)) == zero_subspace(2)
    assert ideal_closure(S2, span([(1, 0)], 2)) == span([(1, 0)], 2)
    assert ideal_closure(S2, span([(0, 1)], 2)) == full_space(2)


CAT = bol_catalog()
small_names = sorted(k for k, v in CAT.items() if v.dim >= 2)


@st.composite
def algebra_and_subspaces(draw):
    B = CAT[draw(st.sampled_from(small_names))]
    n = B.dim
    vec = st.lists(st.integers(-2, 2), min_size=n, max_size=n)
    X = draw(st.lists(vec, max_size=2))
    Y = draw(st.lists(vec, max_size=2))
    return B, span(X, n), span(X + Y, n)


@settings(max_examples=60, deadline=None)
@given(algebra_and_subspaces(), st.sampled_from(["literal", "strong"]))
def test_closure_laws(data, mode):
    B, X, Y = data
    J = ideal_closure(B, X, mode)
    assert X <= J
    assert is_ideal(B, J, mode)[0]
    assert ideal_closure(B, J, mode) == J
    assert J <= ideal_closure(B, Y, mode)


# -- quotients ------------------------------------------------------------------------


def test_quotient_by_everything(catalog):
    for B in catalog.values():
        Q, p = quotient(B, full_space(B.dim))
        assert Q.dim == 0 and p.matrix.shape == (0, B.dim)


def test_quotient_by_zero(catalog):
    for B in catalog.values():
        Q, p = quotient(B, zero_subspace(B.dim))
        assert Q == B and p.matrix == Matrix.identity(B.dim)


def test_solvable_mod_e1():
    Q, p = quotient(S2, span([(1, 0)], 2))
    assert Q == BolAlgebra.zero(1)
    assert is_morphism(p).passed


def test_quotient_requires_ideal():
    with pytest.raises(PreconditionError) as ei:
        quotient(S2, span([(0, 1)], 2))
    assert ei.value.condition == "not-an-ideal"


def test_heisenberg_mod_centre():
    H = from_lie_algebra(heisenberg())
    Q, p = quotient(H, span([(0, 0, 1)], 3))
    assert Q == BolAlgebra.zero(2)
    assert check_axioms(Q).passed and is_morphism(p).passed


# -- morphisms -------------------------------------------------------------------------


def test_identity_and_zero_are_morphisms(catalog):
    for B in catalog.values():
        assert is_morphism(Morphism.identity(B)).passed
        assert is_morphism(Morphism.zero(B, BolAlgebra.zero(0))).passed


def test_swap_is_not_a_morphism():
    c = is_morphism(Morphism(S2, S2, M([[0, 1], [1, 0]])))
    assert not c.passed and c.name == "morphism-binary"
    assert c.witness == (1, 2) and c.residual == (1, 1)  # f(e1.e2) - f(e1).f(e2) = e2 - (-e1)


def test_morphism_shape_checked():
    with pytest.raises(DimensionError):
        Morphism(S2, S2, Matrix.identity(3))


def test_kernel_image_examples():
    ki = kernel_image(Morphism.identity(S2))
    assert ki.kernel.dim == 0 and ki.image == full_space(2)
    ki = kernel_image(Morphism.zero(S2, S2))
    assert ki.kernel == full_space(2) and ki.image.dim == 0
    P, (p1, p2) = product([S2, S2])
    ki = kernel_image(p1)
    assert ki.kernel == span([(0, 0, 1, 0), (0, 0, 0, 1)], 4)
    assert ki.kernel_is_ideal.passed and ki.image_is_subalgebra.passed


def test_kernel_image_rejects_non_morphism():
    with pytest.raises(PreconditionError):
        kernel_image(Morphism(S2, S2, M([[0, 1], [1, 0]])))


def test_first_iso_examples():
    phi = first_iso(Morphism.identity(S2))
    assert phi.matrix == Matrix.identity(2)
    phi = first_iso(Morphism.zero(S2, S2))
    assert phi.matrix.shape == (0, 0)
    P, (p1, _) = product([S2, S2])
    phi = first_iso(p1)
    assert phi.source.dim == phi.target.dim == 2 and rank(phi.matrix) == 2
    assert is_morphism(phi).passed


def test_rank_nullity_for_morphisms(catalog):
    for B in catalog.values():
        P, projs = product([B, B])
        for f in projs + injections(P, projs):
            ki = kernel_image(f)
            assert ki.kernel.dim + ki.image.dim == f.source.dim


# -- products, equalizers, coequalizers ---------------------------------------------------


def test_product_of_one():
    P, (p,) = product([S2])
    assert P == S2 and p.matrix == Matrix.identity(2)


def test_product_of_zero_algebras():
    P, _ = product([BolAlgebra.zero(1), BolAlgebra.zero(2)])
    assert P == BolAlgebra.zero(3)


def test_product_componentwise():
    P, projs = product([S2, S2])
    assert P.dim == 4
    assert P.mul((1, 0, 0, 0), (0, 1, 0, 0)) == (1, 0, 0, 0)
    assert P.mul((1, 0, 0, 0), (0, 0, 0, 1)) == (0, 0, 0, 0)
    assert all(is_morphism(p).passed for p in projs)
    assert check_axioms(P).passed


def test_product_empty():
    with pytest.raises(ValueError):
        product([])


def test_equalizer_examples():
    idm = Morphism.identity(S2)
    E, incl = equalizer(idm, idm)
    assert E == full_space(2)
    E, _ = equalizer(idm, Morphism.zero(S2, S2))
    assert E.dim == 0


def test_equalizer_of_projections_is_diagonal():
    P, (p1, p2) = product([S2, S2])
    E, incl = equalizer(p1, p2)
    assert E == span([(1, 0, 1, 0), (0, 1, 0, 1)], 4)
    assert is_subalgebra(P, E)[0]
    assert (p1 @ incl).matrix == (p2 @ incl).matrix


def test_equalizer_shape_mismatch():
    with pytest.raises(DimensionError):
        equalizer(Morphism.identity(S2), Morphism.zero(S2, BolAlgebra.zero(1)))


def test_coequalizer_modes_diverge():
    idm = Morphism.identity(S2)
    Qd, pd = coequalizer(idm, idm, "difference")
    Qp, pp = coequalizer(idm, idm, "paper")
    assert Qd == S2 and Qp.dim == 0
    for p in (pd, pp):
        assert (p @ idm).matrix == (p @ idm).matrix


def test_coequalizer_of_injections():
    P, projs = product([S2, S2])
    i1, i2 = injections(P, projs)
    Q, p = coequalizer(i1, i2)
    # identifying the two copies also forces (e1,0) = (e1,-e1).(e2,0) into the ideal
    assert Q.dim == 1
    assert (p @ i1).matrix == (p @ i2).matrix
    assert is_morphism(p).passed


def test_factorization_through_product():
    P, projs = product([S2, S2])
    cone = [Morphism.identity(S2), Morphism.identity(S2)]
    u, chk = factor_limit(projs, cone)
    assert chk.passed and u.matrix == M([[1, 0], [0, 1], [1, 0], [0, 1]])


def test_factorization_failure_reported():
    # a first projection does not coequalize the injections, so nothing factors it
    P, projs = product([S2, S2])
    i1, i2 = injections(P, projs)
    Q, p = coequalizer(i1, i2)
    u, chk = factor_colimit([p], [projs[0]])
    assert not chk.passed and u is None


def test_universal_checks_validate_lengths():
    with pytest.raises(ValueError):
        factor_limit([], [])


def test_kernel_is_nullspace():
    P, (p1, _) = product([S2, S2])
    assert kernel_image(p1).kernel == nullspace(p1.matrix)


def test_catalog_projections_are_morphisms(catalog):
    for B in catalog.values():
        for I in (zero_subspace(B.dim), full_space(B.dim)):
            Q, p = quotient(B, I)
            assert is_morphism(p).passed
