"""Small named algebras used by the CLI examples and the test-suite."""

from __future__ import annotations

from .algebra import BolAlgebra, LieAlgebra, from_lie_algebra, from_lie_pair, standard_subspace


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra.abelian(n)


def solvable2() -> LieAlgebra:
    """[e1, e2] = e1."""
    return LieAlgebra.from_entries(2, {(0, 1): (1, 0)})


def heisenberg() -> LieAlgebra:
    """[e1, e2] = e3, e3 central."""
    return LieAlgebra.from_entries(3, {(0, 1): (0, 0, 1)})


def sl2() -> LieAlgebra:
    """Basis (e, f, h) with [e,f] = h, [h,e] = 2e, [h,f] = -2f."""
    return LieAlgebra.from_entries(3, {(0, 1): (0, 0, 1), (2, 0): (2, 0, 0), (2, 1): (0, -2, 0)})


def so3() -> LieAlgebra:
    """[e1,e2] = e3, [e2,e3] = e1, [e3,e1] = e2."""
    return LieAlgebra.from_entries(3, {(0, 1): (0, 0, 1), (1, 2): (1, 0, 0), (2, 0): (0, 1, 0)})


def sl2_pair() -> BolAlgebra:
    """The Bol algebra on span{e, f} inside sl2, split along span{h}."""
    return from_lie_pair(sl2(), standard_subspace(3, [0, 1]), standard_subspace(3, [2]))


def lie_catalog() -> dict[str, LieAlgebra]:
    return {
        "abelian2": abelian(2),
        "solvable2": solvable2(),
        "heisenberg": heisenberg(),
        "sl2": sl2(),
        "so3": so3(),
    }


def bol_catalog() -> dict[str, BolAlgebra]:
    """Algebras that pass every identity under the consistent profile."""
    out = {f"zero{n}": BolAlgebra.zero(n) for n in (1, 2, 3)}
    for name, L in lie_catalog().items():
        out[f"lie-{name}"] = from_lie_algebra(L)
    out["sl2-pair"] = sl2_pair()
    out["lts-sl2"] = from_lie_algebra(sl2()).with_binary_zeroed()
    out["lts-solvable2"] = from_lie_algebra(solvable2()).with_binary_zeroed()
    return out
