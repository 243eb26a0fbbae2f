"""Ideals, quotients, morphisms and finite (co)limits of Bol algebras."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as cartesian
from typing import Literal, Sequence

from .algebra import BolAlgebra
from .errors import DimensionError, PreconditionError, QuotientError
from .linalg import (
    Matrix,
    Subspace,
    column_space,
    complement_indices,
    contains,
    coordinates,
    full_space,
    nullspace,
    rank,
    reduce_mod,
    solve_matrix,
    span,
    subspace_sum,
    unit_vector,
    zero_subspace,
)
from .report import Check

IdealMode = Literal["literal", "strong"]


def _products(B: BolAlgebra, I: Subspace, mode: IdealMode):
    """Yield (kind, indices, vector) for every product an ideal must absorb.

    Indices are 1-based: the first is the position in I's basis (or the
    algebra basis when the I-element sits in a later slot), the rest are
    algebra basis indices.
    """
    if mode not in ("literal", "strong"):
        raise ValueError(f"unknown ideal mode {mode!r}")
    n = B.dim
    e = [unit_vector(n, i) for i in range(n)]
    for p, u in enumerate(I.basis):
        for j in range(n):
            yield "I.B", (p + 1, j + 1), B.mul(u, e[j])
    for p, u in enumerate(I.basis):
        for j, k in cartesian(range(n), repeat=2):
            yield "(I;B,B)", (p + 1, j + 1, k + 1), B.tri(u, e[j], e[k])
    if mode == "strong":
        for p, u in enumerate(I.basis):
            for j, k in cartesian(range(n), repeat=2):
                yield "(B;I,B)", (j + 1, p + 1, k + 1), B.tri(e[j], u, e[k])
        for p, u in enumerate(I.basis):
            for j, k in cartesian(range(n), repeat=2):
                yield "(B;B,I)", (j + 1, k + 1, p + 1), B.tri(e[j], e[k], u)


def _check_ambient(B: BolAlgebra, S: Subspace) -> None:
    if S.ambient_dim != B.dim:
        raise DimensionError(f"subspace of Q^{S.ambient_dim} in a {B.dim}-dimensional algebra")


def is_ideal(B: BolAlgebra, I: Subspace, mode: IdealMode = "literal") -> tuple[bool, tuple | None]:
    """Decide whether ``I`` is an ideal; the witness is ``(kind, indices, product)``."""
    _check_ambient(B, I)
    for kind, idx, w in _products(B, I, mode):
        if not contains(I, w):
            return False, (kind, idx, w)
    return True, None


def ideal_check(B: BolAlgebra, I: Subspace, mode: IdealMode = "literal") -> Check:
    ok, wit = is_ideal(B, I, mode)
    if ok:
        return Check(f"ideal-{mode}", True)
    kind, idx, w = wit
    return Check(f"ideal-{mode}", False, idx, w, f"{kind} not contained")


def ideal_closure(B: BolAlgebra, X: Subspace, mode: IdealMode = "literal") -> Subspace:
    """Smallest ideal containing ``X``: saturate with products until nothing new appears."""
    _check_ambient(B, X)
    I = X
    while True:
        grown = span(list(I.basis) + [w for _, _, w in _products(B, I, mode)], B.dim)
        if grown.dim == I.dim:
            return I
        I = grown


def is_subalgebra(B: BolAlgebra, S: Subspace) -> tuple[bool, tuple | None]:
    """Closure of ``S`` under both operations, checked on its basis."""
    _check_ambient(B, S)
    bs = S.basis
    for (i, u), (j, v) in cartesian(enumerate(bs), repeat=2):
        w = B.mul(u, v)
        if not contains(S, w):
            return False, ("S.S", (i + 1, j + 1), w)
    for (i, u), (j, v), (k, x) in cartesian(enumerate(bs), repeat=3):
        w = B.tri(u, v, x)
        if not contains(S, w):
            return False, ("(S;S,S)", (i + 1, j + 1, k + 1), w)
    return True, None


def restrict(B: BolAlgebra, S: Subspace) -> BolAlgebra:
    """The sub-Bol algebra on ``S``, in coordinates of its canonical basis."""
    ok, wit = is_subalgebra(B, S)
    if not ok:
        raise PreconditionError("subalgebra", "subspace not closed under the operations", wit)
    bs = S.basis
    d = len(bs)
    binary = [[coordinates(S, B.mul(bs[i], bs[j])) for j in range(d)] for i in range(d)]
    ternary = [[[coordinates(S, B.tri(bs[i], bs[j], bs[k])) for k in range(d)] for j in range(d)]
               for i in range(d)]
    return BolAlgebra(d, binary, ternary)


# -- morphisms ------------------------------------------------------------------


@dataclass(frozen=True)
class Morphism:
    source: BolAlgebra
    target: BolAlgebra
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.shape != (self.target.dim, self.source.dim):
            raise DimensionError(
                f"map of shape {self.matrix.shape} between algebras of dimension "
                f"{self.source.dim} -> {self.target.dim}")

    def __call__(self, v):
        return self.matrix.apply(v)

    def __matmul__(self, other: "Morphism") -> "Morphism":
        """self o other."""
        if other.target.dim != self.source.dim:
            raise DimensionError("morphisms are not composable")
        return Morphism(other.source, self.target, self.matrix @ other.matrix)

    @classmethod
    def identity(cls, B: BolAlgebra) -> "Morphism":
        return cls(B, B, Matrix.identity(B.dim))

    @classmethod
    def zero(cls, source: BolAlgebra, target: BolAlgebra) -> "Morphism":
        return cls(source, target, Matrix.zeros(target.dim, source.dim))


def is_morphism(f: Morphism) -> Check:
    """f(x.y) = f(x).f(y) and f((x;y,z)) = (f x; f y, f z) on every basis tuple."""
    S, T, F = f.source, f.target, f.matrix
    n = S.dim
    img = F.columns()
    for i, j in cartesian(range(n), repeat=2):
        d = _diff(F.apply(S.binary[i][j]), T.mul(img[i], img[j]))
        if any(d):
            return Check("morphism-binary", False, (i + 1, j + 1), d, "f(x.y) != f(x).f(y)")
    for i, j, k in cartesian(range(n), repeat=3):
        d = _diff(F.apply(S.ternary[i][j][k]), T.tri(img[i], img[j], img[k]))
        if any(d):
            return Check("morphism-ternary", False, (i + 1, j + 1, k + 1), d, "f((x;y,z)) != (fx;fy,fz)")
    return Check("morphism", True)


def _diff(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _require_morphism(f: Morphism, what: str = "input") -> None:
    chk = is_morphism(f)
    if not chk.passed:
        raise PreconditionError("not-a-morphism", f"{what} does not preserve {chk.name.split('-')[-1]}",
                                chk.witness)


@dataclass(frozen=True)
class KernelImage:
    kernel: Subspace
    image: Subspace
    kernel_is_ideal: Check
    image_is_subalgebra: Check


def kernel_image(f: Morphism) -> KernelImage:
    _require_morphism(f)
    ker = nullspace(f.matrix)
    im = column_space(f.matrix)
    ok, wit = is_subalgebra(f.target, im)
    return KernelImage(ker, im, ideal_check(f.source, ker, "literal"),
                       Check("image-subalgebra", ok, wit[1] if wit else None, wit[2] if wit else None))


# -- quotients -------------------------------------------------------------------


def quotient(B: BolAlgebra, I: Subspace, mode: IdealMode = "literal") -> tuple[BolAlgebra, Morphism]:
    """B / I on the complement spanned by the standard vectors outside I's pivots.

    Well-definedness is verified directly: every product with an element of
    ``I`` in any slot must land in ``I``.
    """
    ok, wit = is_ideal(B, I, mode)
    if not ok:
        raise PreconditionError("not-an-ideal", f"{wit[0]} leaves the subspace", wit)
    n = B.dim
    e = [unit_vector(n, i) for i in range(n)]
    for p, u in enumerate(I.basis):
        for j in range(n):
            for slot, w in ((1, B.mul(u, e[j])), (2, B.mul(e[j], u))):
                if not contains(I, w):
                    raise QuotientError("ill-defined-quotient", f"binary slot {slot}", (slot, p + 1, j + 1, w))
        for j, k in cartesian(range(n), repeat=2):
            for slot, w in ((1, B.tri(u, e[j], e[k])), (2, B.tri(e[j], u, e[k])), (3, B.tri(e[j], e[k], u))):
                if not contains(I, w):
                    raise QuotientError("ill-defined-quotient", f"ternary slot {slot}",
                                        (slot, p + 1, j + 1, k + 1, w))
    comp = complement_indices(I)
    d = len(comp)

    def project(v):
        r = reduce_mod(I, v)
        return tuple(r[c] for c in comp)

    binary = [[project(B.binary[a][b]) for b in comp] for a in comp]
    ternary = [[[project(B.ternary[a][b][c]) for c in comp] for b in comp] for a in comp]
    Q = BolAlgebra(d, binary, ternary)
    P = Matrix.from_columns([project(e[i]) for i in range(n)], d)
    return Q, Morphism(B, Q, P)


def first_iso(f: Morphism, mode: IdealMode = "literal") -> Morphism:
    """Induced isomorphism source / ker f -> im f (image taken in its canonical basis)."""
    ki = kernel_image(f)
    Q, proj = quotient(f.source, ki.kernel, mode)
    Im = restrict(f.target, ki.image)
    comp = complement_indices(ki.kernel)
    cols = [coordinates(ki.image, f.matrix.column(c)) for c in comp]
    phi = Morphism(Q, Im, Matrix.from_columns(cols, Im.dim))
    if Q.dim != Im.dim or rank(phi.matrix) != Q.dim:
        raise PreconditionError("first-iso", "induced map is not bijective", (Q.dim, Im.dim))
    _require_morphism(phi, "induced map")
    return phi


# -- finite limits and colimits ----------------------------------------------------


def product(algebras: Sequence[BolAlgebra]) -> tuple[BolAlgebra, list[Morphism]]:
    """Componentwise operations on the direct sum; also the finite coproduct."""
    if not algebras:
        raise ValueError("product of an empty list")
    N = sum(A.dim for A in algebras)
    offsets = []
    off = 0
    for A in algebras:
        offsets.append(off)
        off += A.dim
    zero = (0,) * N
    binary = [[zero] * N for _ in range(N)]
    ternary = [[[zero] * N for _ in range(N)] for _ in range(N)]
    for A, o in zip(algebras, offsets):
        pad = lambda v, o=o, d=A.dim: (0,) * o + tuple(v) + (0,) * (N - o - d)  # noqa: E731
        for i, j in cartesian(range(A.dim), repeat=2):
            binary[o + i][o + j] = pad(A.binary[i][j])
            for k in range(A.dim):
                ternary[o + i][o + j][o + k] = pad(A.ternary[i][j][k])
    P = BolAlgebra(N, binary, ternary)
    projs = []
    for A, o in zip(algebras, offsets):
        rows = [unit_vector(N, o + i) for i in range(A.dim)]
        projs.append(Morphism(P, A, Matrix(A.dim, N, tuple(rows))))
    return P, projs


def injections(P: BolAlgebra, projections: Sequence[Morphism]) -> list[Morphism]:
    """Coproduct injections of a finite product (transposes of the projections)."""
    return [Morphism(p.target, P, p.matrix.T) for p in projections]


def _parallel(f: Morphism, g: Morphism) -> None:
    if f.source != g.source or f.target != g.target:
        raise DimensionError("morphisms must share source and target")
    _require_morphism(f, "f")
    _require_morphism(g, "g")


def equalizer(f: Morphism, g: Morphism) -> tuple[Subspace, Morphism]:
    """E = {x : f(x) = g(x)} with its inclusion morphism."""
    _parallel(f, g)
    E = nullspace(f.matrix - g.matrix)
    sub = restrict(f.source, E)
    incl = Morphism(sub, f.source, E.basis_columns() if E.dim else Matrix.zeros(f.source.dim, 0))
    _require_morphism(incl, "inclusion")
    return E, incl


def coequalizer(f: Morphism, g: Morphism, mode: Literal["difference", "paper"] = "difference",
                ideal_mode: IdealMode = "literal") -> tuple[BolAlgebra, Morphism]:
    """Quotient of the common target.

    ``difference`` kills the ideal generated by im(f - g); ``paper`` kills the
    ideal generated by im f + im g.
    """
    _parallel(f, g)
    if mode == "difference":
        gen = column_space(f.matrix - g.matrix)
    elif mode == "paper":
        gen = subspace_sum(column_space(f.matrix), column_space(g.matrix))
    else:
        raise ValueError(f"unknown coequalizer mode {mode!r}")
    I = ideal_closure(f.target, gen, ideal_mode)
    return quotient(f.target, I, ideal_mode)


# -- universal property spot checks -------------------------------------------------


def factor_limit(legs: Sequence[Morphism], cone: Sequence[Morphism]) -> tuple[Morphism | None, Check]:
    """Find the unique u with legs[i] o u = cone[i] for all i.

    ``legs`` share their source L (the limit object); ``cone`` shares its
    source C.  The check passes when u exists, is unique and is a morphism.
    """
    if len(legs) != len(cone) or not legs:
        raise ValueError("legs and cone must be nonempty and of equal length")
    L, C = legs[0].source, cone[0].source
    A = _vstack([p.matrix for p in legs], L.dim)
    H = _vstack([h.matrix for h in cone], C.dim)
    sol = solve_matrix(A, H)
    if sol is None:
        return None, Check("factorization", False, detail="no factorization exists")
    X, unique = sol
    u = Morphism(C, L, X)
    if not unique:
        return u, Check("factorization", False, detail="factorization is not unique")
    chk = is_morphism(u)
    return u, Check("factorization", chk.passed, chk.witness, chk.residual, chk.detail)


def factor_colimit(legs: Sequence[Morphism], cocone: Sequence[Morphism]) -> tuple[Morphism | None, Check]:
    """Find the unique u with u o legs[i] = cocone[i] for all i (legs share a target)."""
    if len(legs) != len(cocone) or not legs:
        raise ValueError("legs and cocone must be nonempty and of equal length")
    Q, T = legs[0].target, cocone[0].target
    # u P_i = H_i  <=>  P_i^T u^T = H_i^T, stacked over i
    A = _vstack([p.matrix.T for p in legs], Q.dim)
    H = _vstack([h.matrix.T for h in cocone], T.dim)
    sol = solve_matrix(A, H)
    if sol is None:
        return None, Check("factorization", False, detail="no factorization exists")
    Xt, unique = sol
    u = Morphism(Q, T, Xt.T)
    if not unique:
        return u, Check("factorization", False, detail="factorization is not unique")
    chk = is_morphism(u)
    return u, Check("factorization", chk.passed, chk.witness, chk.residual, chk.detail)


def _vstack(mats: Sequence[Matrix], ncols: int) -> Matrix:
    rows = tuple(r for M in mats for r in M.rows)
    return Matrix(len(rows), ncols, rows)


__all__ = [
    "IdealMode", "KernelImage", "Morphism", "coequalizer", "equalizer", "factor_colimit", "factor_limit",
    "first_iso", "full_space", "ideal_check", "ideal_closure", "injections", "is_ideal", "is_morphism",
    "is_subalgebra", "kernel_image", "product", "quotient", "restrict", "zero_subspace",
]
