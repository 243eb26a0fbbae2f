"""Bol algebras and Lie algebras given by structure constants.

A :class:`BolAlgebra` of dimension ``n`` stores

* ``binary[i][j]`` -- coordinates of ``e_i . e_j``
* ``ternary[i][j][k]`` -- coordinates of ``(e_i; e_j, e_k)``

with 0-based indices.  Nothing is validated at construction time beyond
shapes; :func:`check_axioms` reports which identities hold.  Witnesses in
reports use 1-based indices, matching the file format.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Literal, Mapping, Sequence

from .errors import DimensionError, PreconditionError
from .linalg import (
    Matrix,
    Subspace,
    Vector,
    add,
    coordinates,
    full_space,
    is_zero,
    lincomb,
    span,
    sub,
    subspace_intersect,
    unit_vector,
    vec,
    zero_vector,
)
from .report import Check, CheckReport, scan

Profile = Literal["consistent", "literal"]
PROFILES = ("consistent", "literal")


def _zero_tensor(n: int, order: int):
    if order == 1:
        return zero_vector(n)
    return tuple(_zero_tensor(n, order - 1) for _ in range(n))


def _freeze(data, n: int, order: int):
    """Convert nested sequences to nested tuples of Fractions, checking every axis has length n."""
    if order == 1:
        if len(data) != n:
            raise DimensionError(f"expected a vector of length {n}, got {len(data)}")
        return vec(data)
    if len(data) != n:
        raise DimensionError(f"expected {n} entries along a tensor axis, got {len(data)}")
    return tuple(_freeze(d, n, order - 1) for d in data)


def _from_sparse(n: int, order: int, entries: Mapping[tuple, Sequence]):
    grid = _nested_lists(n, order - 1)
    for key, value in entries.items():
        if len(key) != order - 1 or any(not 0 <= k < n for k in key):
            raise DimensionError(f"index {key} out of range for dimension {n}")
        node = grid
        for k in key[:-1]:
            node = node[k]
        node[key[-1]] = vec(value)
    return _freeze(grid, n, order)


def _nested_lists(n: int, depth: int):
    if depth == 1:
        return [zero_vector(n) for _ in range(n)]
    return [_nested_lists(n, depth - 1) for _ in range(n)]


def _combine(coeffs: Sequence, pick, n: int) -> Vector:
    """sum_k coeffs[k] * pick(k) skipping zero coefficients."""
    out = [Fraction(0)] * n
    for k, c in enumerate(coeffs):
        if c:
            for i, a in enumerate(pick(k)):
                if a:
                    out[i] += c * a
    return tuple(out)


@dataclass(frozen=True)
class BolAlgebra:
    dim: int
    binary: tuple
    ternary: tuple

    def __post_init__(self):
        object.__setattr__(self, "binary", _freeze(self.binary, self.dim, 3))
        object.__setattr__(self, "ternary", _freeze(self.ternary, self.dim, 4))

    @classmethod
    def zero(cls, n: int) -> "BolAlgebra":
        return cls(n, _zero_tensor(n, 3), _zero_tensor(n, 4))

    @classmethod
    def from_entries(cls, n: int, binary: Mapping | None = None, ternary: Mapping | None = None) -> "BolAlgebra":
        """Build from sparse 0-based entries ``{(i, j): vector}`` and ``{(i, j, k): vector}``."""
        return cls(n, _from_sparse(n, 3, binary or {}), _from_sparse(n, 4, ternary or {}))

    # -- evaluation -------------------------------------------------------

    def basis(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        """x . y extended bilinearly."""
        self._check(x, y)
        n = self.dim
        return _combine(x, lambda i: _combine(y, lambda j: self.binary[i][j], n), n)

    def tri(self, x: Sequence, y: Sequence, z: Sequence) -> Vector:
        """(x; y, z) extended trilinearly."""
        self._check(x, y, z)
        n = self.dim
        t = self.ternary
        return _combine(x, lambda i: _combine(y, lambda j: _combine(z, lambda k: t[i][j][k], n), n), n)

    def d_apply(self, alpha: Sequence, beta: Sequence, x: Sequence) -> Vector:
        """D_{alpha,beta}(x) = (x; alpha, beta)."""
        return self.tri(x, alpha, beta)

    def _check(self, *args):
        for a in args:
            if len(a) != self.dim:
                raise DimensionError(f"vector of length {len(a)} in a {self.dim}-dimensional algebra")

    def with_binary_zeroed(self) -> "BolAlgebra":
        return BolAlgebra(self.dim, _zero_tensor(self.dim, 3), self.ternary)

    def is_binary_zero(self) -> bool:
        return all(is_zero(v) for row in self.binary for v in row)


@dataclass(frozen=True)
class LieAlgebra:
    dim: int
    bracket_table: tuple

    def __post_init__(self):
        object.__setattr__(self, "bracket_table", _freeze(self.bracket_table, self.dim, 3))

    @classmethod
    def from_entries(cls, n: int, entries: Mapping | None = None, antisymmetrize: bool = True) -> "LieAlgebra":
        """Sparse 0-based ``{(i, j): [e_i, e_j]}``; with ``antisymmetrize`` the (j, i) entries are filled in."""
        entries = dict(entries or {})
        if antisymmetrize:
            for (i, j), v in list(entries.items()):
                if (j, i) not in entries:
                    entries[(j, i)] = tuple(-Fraction(a) for a in v)
        return cls(n, _from_sparse(n, 3, entries))

    @classmethod
    def abelian(cls, n: int) -> "LieAlgebra":
        return cls(n, _zero_tensor(n, 3))

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        n = self.dim
        if len(x) != n or len(y) != n:
            raise DimensionError(f"vectors must have length {n}")
        return _combine(x, lambda i: _combine(y, lambda j: self.bracket_table[i][j], n), n)


# -- evaluation entry point -------------------------------------------------

_ARITY = {"binary": 2, "ternary": 3, "d-operator": 3, "delta-operator": 3}


def evaluate(B: BolAlgebra, op: str, *args: Sequence) -> Vector:
    """Evaluate one of the algebra's operations on vectors.

    ``d-operator`` takes ``(x, alpha, beta)`` and returns ``(x; alpha, beta)``;
    ``delta-operator`` takes ``(alpha, beta, x)`` and returns ``(alpha; beta, x)``.
    """
    if op not in _ARITY:
        raise ValueError(f"unknown operation {op!r}")
    if len(args) != _ARITY[op]:
        raise DimensionError(f"{op} takes {_ARITY[op]} arguments, got {len(args)}")
    if op == "binary":
        return B.mul(*args)
    return B.tri(*args)


def d_matrix(B: BolAlgebra, alpha: Sequence, beta: Sequence) -> Matrix:
    """Matrix of x -> (x; alpha, beta) in the standard basis."""
    n = B.dim
    return Matrix.from_columns([B.tri(B.basis(c), alpha, beta) for c in range(n)], n)


# -- identity residuals (0-based basis indices) --------------------------------


def _res_skew_binary(B, i, j):
    return add(B.binary[i][j], B.binary[j][i])


def _res_skew_ternary(B, x, y, z):
    return add(B.ternary[x][y][z], B.ternary[x][z][y])


def _res_alternating(B, x, _x, y):
    return B.ternary[x][x][y]


def _res_cyclic(B, x, y, z):
    t = B.ternary
    return add(add(t[x][y][z], t[z][x][y]), t[y][z][x])


def _res_ternary_derivation(B, x, y, z, a, b):
    # D(x;y,z) - (Dx;y,z) - (x;Dy,z) - (x;y,Dz) with D = (-; a, b)
    n, t = B.dim, B.ternary
    lhs = _combine(t[x][y][z], lambda k: t[k][a][b], n)
    r1 = _combine(t[x][a][b], lambda k: t[k][y][z], n)
    r2 = _combine(t[y][a][b], lambda k: t[x][k][z], n)
    r3 = _combine(t[z][a][b], lambda k: t[x][y][k], n)
    return sub(sub(sub(lhs, r1), r2), r3)


def _res_pseudo_derivation(B, x, y, a, b):
    # (x.y; a,b) - (x;a,b).y - x.(y;a,b) - (a.b; x,y) - (x.y).(a.b)
    n, c, t = B.dim, B.binary, B.ternary
    xy = c[x][y]
    ab = c[a][b]
    lhs = _combine(xy, lambda k: t[k][a][b], n)
    r1 = _combine(t[x][a][b], lambda k: c[k][y], n)
    r2 = _combine(t[y][a][b], lambda k: c[x][k], n)
    r3 = _combine(ab, lambda k: t[k][x][y], n)
    r4 = B.mul(xy, ab)
    return sub(sub(sub(sub(lhs, r1), r2), r3), r4)


RESIDUALS = {
    "skew-binary": (_res_skew_binary, 2),
    "ternary-skew": (_res_skew_ternary, 3),
    "ternary-alternating": (_res_alternating, 3),
    "cyclic": (_res_cyclic, 3),
    "ternary-derivation": (_res_ternary_derivation, 5),
    "pseudo-derivation": (_res_pseudo_derivation, 4),
}


def residual(B: BolAlgebra, name: str, witness: Sequence[int]) -> Vector:
    """Re-evaluate a named identity at a 1-based witness tuple."""
    fn, _ = RESIDUALS[name]
    return fn(B, *(i - 1 for i in witness))


def _tuples(n: int, k: int):
    return product(range(n), repeat=k)


def _ternary_checks(B: BolAlgebra, profile: Profile) -> list[Check]:
    n = B.dim
    if profile == "consistent":
        first = scan("ternary-skew", _tuples(n, 3), lambda *i: _res_skew_ternary(B, *i),
                     "(x;y,z) = -(x;z,y)")
    elif profile == "literal":
        first = scan("ternary-alternating", ((x, x, y) for x in range(n) for y in range(n)),
                     lambda *i: _res_alternating(B, *i), "(x;x,y) = 0")
    else:
        raise ValueError(f"unknown profile {profile!r}")
    return [
        first,
        scan("cyclic", _tuples(n, 3), lambda *i: _res_cyclic(B, *i),
             "(x;y,z) + (z;x,y) + (y;z,x) = 0"),
        scan("ternary-derivation", _tuples(n, 5), lambda *i: _res_ternary_derivation(B, *i),
             "((x;y,z);a,b) = ((x;a,b);y,z) + (x;(y;a,b),z) + (x;y,(z;a,b))"),
    ]


def check_lts(B: BolAlgebra, profile: Profile = "consistent") -> CheckReport:
    """Lie-triple-system identities only; the binary tensor is ignored."""
    return CheckReport(_ternary_checks(B, profile))


def check_axioms(B: BolAlgebra, profile: Profile = "consistent") -> CheckReport:
    """All Bol algebra identities on every basis tuple.

    ``profile="consistent"`` takes skewness of the ternary operation in its
    last two slots; ``profile="literal"`` takes ``(x;x,y) = 0`` instead.
    """
    n = B.dim
    checks = [scan("skew-binary", _tuples(n, 2), lambda *i: _res_skew_binary(B, *i), "x.y = -y.x")]
    checks += _ternary_checks(B, profile)
    checks.append(scan("pseudo-derivation", _tuples(n, 4), lambda *i: _res_pseudo_derivation(B, *i),
                       "(x.y;a,b) = (x;a,b).y + x.(y;a,b) + (a.b;x,y) + (x.y).(a.b)"))
    return CheckReport(checks)


def opposite(B: BolAlgebra, variant: Literal["section2", "theorem"] = "section2") -> BolAlgebra:
    """Opposite algebra.

    ``section2``: [x;y,z] = -(z;x,y), [x,y] = -x.y.
    ``theorem``:  [x;y,z] = -(x;y,z), [x,y] = -x.y.
    """
    n = B.dim
    neg = lambda v: tuple(-a for a in v)  # noqa: E731
    binary = [[neg(B.binary[i][j]) for j in range(n)] for i in range(n)]
    if variant == "section2":
        ternary = [[[neg(B.ternary[z][x][y]) for z in range(n)] for y in range(n)] for x in range(n)]
    elif variant == "theorem":
        ternary = [[[neg(B.ternary[x][y][z]) for z in range(n)] for y in range(n)] for x in range(n)]
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return BolAlgebra(n, binary, ternary)


# -- Lie algebras -------------------------------------------------------------


def jacobi_check(L: LieAlgebra) -> CheckReport:
    n, b = L.dim, L.bracket_table

    def jac(i, j, k):
        # [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]]
        t1 = _combine(b[j][k], lambda m: b[i][m], n)
        t2 = _combine(b[k][i], lambda m: b[j][m], n)
        t3 = _combine(b[i][j], lambda m: b[k][m], n)
        return add(add(t1, t2), t3)

    return CheckReport([
        scan("antisymmetry", _tuples(n, 2), lambda i, j: add(b[i][j], b[j][i]), "[x,y] = -[y,x]"),
        scan("jacobi", _tuples(n, 3), jac, "[x,[y,z]] + [y,[z,x]] + [z,[x,y]] = 0"),
    ])


def from_lie_algebra(L: LieAlgebra) -> BolAlgebra:
    """x.y = [x,y] and (x;y,z) = [x,[y,z]]."""
    rep = jacobi_check(L)
    if not rep.passed:
        bad = rep.failures()[0]
        raise PreconditionError(bad.name, "input is not a Lie algebra", bad.witness)
    n, b = L.dim, L.bracket_table
    ternary = [[[_combine(b[j][k], lambda m: b[i][m], n) for k in range(n)] for j in range(n)] for i in range(n)]
    return BolAlgebra(n, b, ternary)


def from_lie_pair(G: LieAlgebra, bsub: Subspace, hsub: Subspace) -> BolAlgebra:
    """Bol algebra on ``bsub`` from a splitting ``G = bsub + hsub``.

    xi.eta = projection of [xi,eta] onto ``bsub`` along ``hsub``;
    (zeta; xi, eta) = [zeta, [xi, eta]].  The result is expressed in the
    canonical basis of ``bsub``.  Raises :class:`PreconditionError` naming the
    failed condition with a witness vector.
    """
    N = G.dim
    if bsub.ambient_dim != N or hsub.ambient_dim != N:
        raise DimensionError("subspaces must live in the Lie algebra")
    if bsub.dim + hsub.dim != N:
        raise PreconditionError("direct-sum", f"dimensions {bsub.dim} + {hsub.dim} != {N}")
    meet = subspace_intersect(bsub, hsub)
    if meet.dim:
        raise PreconditionError("direct-sum", "subspaces intersect nontrivially", meet.basis[0])
    bb = list(bsub.basis)
    n = len(bb)
    brackets = [[G.bracket(u, v) for v in bb] for u in bb]
    derived = span((w for row in brackets for w in row), N)
    overlap = subspace_intersect(derived, bsub)
    if overlap.dim:
        raise PreconditionError("bracket-meets-B", "[B,B] meets B nontrivially", overlap.basis[0])
    triple = [[[G.bracket(bb[i], brackets[j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
    for i, j, k in _tuples(n, 3):
        w = triple[i][j][k]
        if coordinates(bsub, w) is None:
            raise PreconditionError("triple-closure", f"[b{i + 1},[b{j + 1},b{k + 1}]] not in B", w)

    # projection along hsub: solve v = sum a_i b_i + sum c_j h_j
    frame = Matrix.from_columns(bb + list(hsub.basis), N)
    inv = _inverse(frame)

    def proj(v):
        return inv.apply(v)[:n]

    binary = [[proj(brackets[i][j]) for j in range(n)] for i in range(n)]
    ternary = [[[coordinates(bsub, triple[i][j][k]) for k in range(n)] for j in range(n)] for i in range(n)]
    return BolAlgebra(n, binary, ternary)


def _inverse(M: Matrix) -> Matrix:
    from .linalg import solve_matrix

    sol = solve_matrix(M, Matrix.identity(M.nrows))
    if sol is None or not sol[1]:
        raise DimensionError("matrix is singular")
    return sol[0]


def standard_subspace(n: int, indices: Sequence[int]) -> Subspace:
    """Span of the 0-based standard basis vectors ``indices``."""
    return span((unit_vector(n, i) for i in indices), n)


__all__ = [
    "BolAlgebra", "LieAlgebra", "PROFILES", "RESIDUALS", "check_axioms", "check_lts", "d_matrix",
    "evaluate", "from_lie_algebra", "from_lie_pair", "jacobi_check", "opposite",
    "residual", "standard_subspace",
]
