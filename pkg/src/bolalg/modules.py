"""Bol modules, representation operators and their identities.

A module is stored through its action matrices on basis elements of the
algebra::

    act_bin[i]      v -> e_i . v
    act_right[i]    v -> v . e_i      (None: defined as -e_i . v)
    act_vbb[i][j]   v -> [v; e_i, e_j]
    act_bvb[i][j]   v -> [e_i; v, e_j]
    act_bbv[i][j]   v -> [e_i; e_j, v]

and the representation operators are read off from them:
``m(a,b) = [a;b,-]``, ``c(a,b) = [a;-,b]``, ``r(a,b) = [-;a,b]``,
``L_t = t.(-)``, ``R_t = (-).t``.  When ``opposite`` is set the operators
live in End(V)^op, i.e. composition is taken in reverse order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Literal, Sequence

from .algebra import BolAlgebra, Profile, check_axioms
from .errors import DimensionError
from .linalg import Matrix, block_diag, matrix_sum, unit_vector
from .report import Check, CheckReport, scan


def _mats(data, m: int, depth: int):
    if depth == 0:
        M = data if isinstance(data, Matrix) else Matrix.from_rows(data, ncols=m)
        if M.shape != (m, m):
            raise DimensionError(f"action matrix of shape {M.shape}, expected {m}x{m}")
        return M
    return tuple(_mats(d, m, depth - 1) for d in data)


@dataclass(frozen=True)
class BolModule:
    alg_dim: int
    mod_dim: int
    act_bin: tuple
    act_vbb: tuple
    act_bvb: tuple
    act_bbv: tuple
    act_right: tuple | None = None
    opposite: bool = False

    def __post_init__(self):
        n, m = self.alg_dim, self.mod_dim
        for name, depth in (("act_bin", 1), ("act_vbb", 2), ("act_bvb", 2), ("act_bbv", 2), ("act_right", 1)):
            data = getattr(self, name)
            if data is None:
                continue
            if len(data) != n or (depth == 2 and any(len(row) != n for row in data)):
                raise DimensionError(f"{name} must be indexed by {n} algebra basis elements")
            object.__setattr__(self, name, _mats(data, m, depth))

    @classmethod
    def zero(cls, n: int, m: int) -> "BolModule":
        Z = Matrix.zeros(m, m)
        pair = tuple(tuple(Z for _ in range(n)) for _ in range(n))
        return cls(n, m, tuple(Z for _ in range(n)), pair, pair, pair)

    # -- representation operators ----------------------------------------

    def _lin1(self, mats, t: Sequence) -> Matrix:
        m = self.mod_dim
        return matrix_sum((M.scaled(c) for c, M in zip(t, mats) if c), m, m)

    def _lin2(self, mats, a: Sequence, b: Sequence) -> Matrix:
        m = self.mod_dim
        terms = (mats[i][j].scaled(a[i] * b[j]) for i in range(self.alg_dim) if a[i]
                 for j in range(self.alg_dim) if b[j])
        return matrix_sum(terms, m, m)

    def L(self, t: Sequence) -> Matrix:
        return self._lin1(self.act_bin, t)

    def R(self, t: Sequence) -> Matrix:
        if self.act_right is None:
            return -self.L(t)
        return self._lin1(self.act_right, t)

    def right_actions(self) -> tuple:
        """act_right, materialized when it is implicit."""
        if self.act_right is not None:
            return self.act_right
        return tuple(-M for M in self.act_bin)

    def r(self, a: Sequence, b: Sequence) -> Matrix:
        return self._lin2(self.act_vbb, a, b)

    def c(self, a: Sequence, b: Sequence) -> Matrix:
        return self._lin2(self.act_bvb, a, b)

    def m(self, a: Sequence, b: Sequence) -> Matrix:
        return self._lin2(self.act_bbv, a, b)

    def compose(self, *ops: Matrix) -> Matrix:
        """ops[0] o ops[1] o ... in the representation algebra."""
        seq = reversed(ops) if self.opposite else ops
        out = Matrix.identity(self.mod_dim)
        for op in seq:
            out = out @ op
        return out

    def identity(self) -> Matrix:
        return Matrix.identity(self.mod_dim)


def _check_dims(B: BolAlgebra, V: BolModule) -> None:
    if B.dim != V.alg_dim:
        raise DimensionError(f"module over a {V.alg_dim}-dimensional algebra used with dimension {B.dim}")


def regular_module(B: BolAlgebra) -> BolModule:
    """The algebra acting on itself through its own operations."""
    n, c, t = B.dim, B.binary, B.ternary

    def mat(col):
        return Matrix.from_columns([col(k) for k in range(n)], n)

    return BolModule(
        n, n,
        act_bin=tuple(mat(lambda k, i=i: c[i][k]) for i in range(n)),
        act_right=tuple(mat(lambda k, i=i: c[k][i]) for i in range(n)),
        act_vbb=tuple(tuple(mat(lambda k, i=i, j=j: t[k][i][j]) for j in range(n)) for i in range(n)),
        act_bvb=tuple(tuple(mat(lambda k, i=i, j=j: t[i][k][j]) for j in range(n)) for i in range(n)),
        act_bbv=tuple(tuple(mat(lambda k, i=i, j=j: t[i][j][k]) for j in range(n)) for i in range(n)),
    )


def direct_sum(V: BolModule, W: BolModule) -> BolModule:
    if V.alg_dim != W.alg_dim:
        raise DimensionError("modules over algebras of different dimension")
    if V.opposite != W.opposite:
        raise DimensionError("cannot add an ordinary and an opposite representation")
    n = V.alg_dim
    bd = lambda a, b: block_diag([a, b])  # noqa: E731
    pair = lambda x, y: tuple(tuple(bd(x[i][j], y[i][j]) for j in range(n)) for i in range(n))  # noqa: E731
    right = None
    if V.act_right is not None or W.act_right is not None:
        vr, wr = V.right_actions(), W.right_actions()
        right = tuple(bd(vr[i], wr[i]) for i in range(n))
    return BolModule(
        n, V.mod_dim + W.mod_dim,
        act_bin=tuple(bd(V.act_bin[i], W.act_bin[i]) for i in range(n)),
        act_vbb=pair(V.act_vbb, W.act_vbb),
        act_bvb=pair(V.act_bvb, W.act_bvb),
        act_bbv=pair(V.act_bbv, W.act_bbv),
        act_right=right,
        opposite=V.opposite,
    )


# -- identities ---------------------------------------------------------------


def _basis_tuples(n: int, k: int):
    return product(range(n), repeat=k)


def _module_identities(B: BolAlgebra, V: BolModule) -> dict:
    n = B.dim
    e = lambda i: unit_vector(n, i)  # noqa: E731
    D = lambda a, b, g: B.tri(e(g), e(a), e(b))  # D_{a,b}(g) = (g; a, b)  # noqa: E731

    def ax1(i):
        return V.L(e(i)) + V.R(e(i))

    def ax2(a, b):
        return V.r(e(a), e(b)) + V.r(e(b), e(a))

    def ax3(a, b):
        return V.r(e(a), e(b)) + V.c(e(a), e(b)) + V.m(e(a), e(b))

    def ax4(a, b, g, t):
        lhs = V.c(B.tri(e(a), e(b), e(g)), e(t))
        rhs = (V.compose(V.m(e(a), e(b)), V.c(e(g), e(t)))
               + V.compose(V.c(e(a), e(g)), V.c(e(b), e(t)))
               + V.compose(V.r(e(b), e(g)), V.c(e(a), e(t))))
        return lhs - rhs

    def p2(a, b):
        return V.m(e(a), e(b)) + V.r(e(a), e(b))

    def p4(a, b, g, t):
        lhs = V.c(D(a, b, g), e(t))
        rhs = (V.compose(V.m(e(a), e(b)), V.c(e(g), e(t)))
               + V.compose(V.c(e(a), e(g)), V.c(e(b), e(t)))
               + V.compose(V.r(e(b), e(g)), V.c(e(a), e(t))))
        return lhs - rhs

    def p5(a, b, t):
        ba = B.mul(e(b), e(a))
        lhs = V.compose(V.m(e(a), e(b)), V.L(e(t)))
        rhs = (V.L(D(a, b, t))
               + V.compose(V.L(e(t)), V.r(e(a), e(b)))
               + V.m(ba, e(t))
               + V.compose(V.L(ba), V.L(e(t))))
        return lhs - rhs

    return {"ax1": ax1, "ax2": ax2, "ax3": ax3, "ax4": ax4, "p2": p2, "p4": p4, "p5": p5}


def check_module(B: BolAlgebra, V: BolModule) -> CheckReport:
    """Module axioms (1)-(5) on all basis tuples; (5) is taken in its operator form p5."""
    _check_dims(B, V)
    n = B.dim
    f = _module_identities(B, V)
    return CheckReport([
        scan("module-1", _basis_tuples(n, 1), f["ax1"], "a.v = -v.a"),
        scan("module-2", _basis_tuples(n, 2), f["ax2"], "[v;a,b] + [v;b,a] = 0"),
        scan("module-3", _basis_tuples(n, 2), f["ax3"], "[v;a,b] + [a;v,b] + [a;b,v] = 0"),
        scan("module-4", _basis_tuples(n, 4), f["ax4"],
             "[(a;b,g);v,t] = [a;b,[g;v,t]] + [a;[b;v,t],g] + [[a;v,t];b,g]"),
        scan("module-5", _basis_tuples(n, 3), f["p5"],
             "[a;b,t.v] = D_ab(t).v + t.[v;a,b] + [b.a;t,v] + (b.a).(t.v)"),
    ])


def check_p_properties(B: BolAlgebra, V: BolModule) -> CheckReport:
    """Operator identities p1-p5, each reported on its own."""
    _check_dims(B, V)
    n = B.dim
    f = _module_identities(B, V)
    return CheckReport([
        scan("p1", _basis_tuples(n, 1), f["ax1"], "R_t = L_{-t}"),
        scan("p2", _basis_tuples(n, 2), f["p2"], "m(a,b) + r(a,b) = 0"),
        scan("p3", _basis_tuples(n, 2), f["ax3"], "m(a,b) + c(a,b) + r(a,b) = 0"),
        scan("p4", _basis_tuples(n, 4), f["p4"],
             "c(D_ab(g),t) = m(a,b)c(g,t) + c(a,g)c(b,t) + r(b,g)c(a,t)"),
        scan("p5", _basis_tuples(n, 3), f["p5"],
             "m(a,b)L_t = L_{D_ab(t)} + L_t r(a,b) + m(b.a,t) + L_{b.a} L_t"),
    ])


def check_prop_composite(B: BolAlgebra, V: BolModule,
                         form: Literal["literal", "derived"] = "derived") -> CheckReport:
    """The m/r composite identity obtained from p4 by eliminating c.

    ``literal`` keeps the third left-hand term as r(b,a) o m(a,t);
    ``derived`` uses r(b,g) o m(a,t), which is what the substitution
    c = -m - r into p4 actually produces.
    """
    _check_dims(B, V)
    if form not in ("literal", "derived"):
        raise ValueError(f"unknown form {form!r}")
    n = B.dim
    e = lambda i: unit_vector(n, i)  # noqa: E731
    m, r, comp = V.m, V.r, V.compose

    def res(a, b, g, t):
        A, Bv, G, T = e(a), e(b), e(g), e(t)
        d = B.tri(G, A, Bv)
        third = comp(r(Bv, A), m(A, T)) if form == "literal" else comp(r(Bv, G), m(A, T))
        lhs = comp(m(A, Bv), m(G, T)) + comp(m(A, Bv), r(G, T)) + third + comp(r(Bv, G), r(A, T))
        rhs = (m(d, T) + r(d, T) + comp(m(A, G), m(Bv, T)) + comp(m(A, G), r(Bv, T))
               + comp(r(A, G), m(Bv, T)) + comp(r(A, G), r(Bv, T)))
        return lhs - rhs

    return CheckReport([scan(f"composite-{form}", _basis_tuples(n, 4), res)])


# -- split extension ------------------------------------------------------------


@dataclass
class ExtensionResult:
    algebra: BolAlgebra
    report: CheckReport = field(default_factory=CheckReport)


def extension_algebra(B: BolAlgebra, V: BolModule, profile: Profile = "consistent") -> ExtensionResult:
    """The algebra B + V with V an abelian ideal.

    Products with exactly one module argument use the corresponding action;
    products with two or more module arguments vanish.
    """
    from .ideals import ideal_check, is_subalgebra
    from .linalg import span

    _check_dims(B, V)
    n, mdim = B.dim, V.mod_dim
    N = n + mdim
    zero = (0,) * N

    def pad_b(v):
        return tuple(v) + (0,) * mdim

    def pad_v(v):
        return (0,) * n + tuple(v)

    right = V.right_actions()
    binary = [[zero] * N for _ in range(N)]
    ternary = [[[zero] * N for _ in range(N)] for _ in range(N)]
    for i, j in product(range(n), repeat=2):
        binary[i][j] = pad_b(B.binary[i][j])
        for k in range(n):
            ternary[i][j][k] = pad_b(B.ternary[i][j][k])
    for i in range(n):
        for k in range(mdim):
            binary[i][n + k] = pad_v(V.act_bin[i].column(k))
            binary[n + k][i] = pad_v(right[i].column(k))
    for i, j in product(range(n), repeat=2):
        for k in range(mdim):
            ternary[n + k][i][j] = pad_v(V.act_vbb[i][j].column(k))
            ternary[i][n + k][j] = pad_v(V.act_bvb[i][j].column(k))
            ternary[i][j][n + k] = pad_v(V.act_bbv[i][j].column(k))
    E = BolAlgebra(N, binary, ternary)

    vpart = span((unit_vector(N, n + k) for k in range(mdim)), N)
    bpart = span((unit_vector(N, i) for i in range(n)), N)
    report = check_axioms(E, profile)
    vchk = ideal_check(E, vpart, "strong")
    report.checks.append(Check("V-ideal", vchk.passed, vchk.witness, vchk.residual, vchk.detail))
    ok, wit = is_subalgebra(E, bpart)
    report.checks.append(Check("B-subalgebra", ok, wit[1] if wit else None, wit[2] if wit else None))
    return ExtensionResult(E, report)
