"""Dual and opposite representations, the operator-identity language and its dualization.

Identities are written in a small language, e.g.::

    sym a, b; m(a,b) + c(a,b) + r(a,b) = 0
    L(t) . r(a,b) = 2 * m(a,b)

A chain ``A . B`` denotes the composite A o B (B is applied first).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Callable, Mapping, Sequence

from .algebra import BolAlgebra
from .errors import DimensionError, IdentitySyntaxError, PreconditionError
from .linalg import Matrix, matrix_sum, unit_vector
from .modules import BolModule
from .report import Check

# -- dual and opposite modules -----------------------------------------------------


def dual_module(B: BolAlgebra, V: BolModule, strict: bool = False) -> BolModule:
    """Module on V*: each operator acts by precomposition, with pair arguments swapped.

    m*(a,b) = m(b,a)^T, c*(a,b) = c(b,a)^T, r*(a,b) = r(b,a)^T,
    L*_t = L_t^T and R*_t = R_t^T.  With ``strict`` the right action is
    instead L_t^T, i.e. R* coincides with L*.
    """
    if B.dim != V.alg_dim:
        raise DimensionError("module and algebra dimensions differ")
    n = V.alg_dim
    swapT = lambda acts: tuple(tuple(acts[j][i].T for j in range(n)) for i in range(n))  # noqa: E731
    if strict:
        right = tuple(M.T for M in V.act_bin)
    elif V.act_right is None:
        right = None
    else:
        right = tuple(M.T for M in V.act_right)
    return BolModule(
        n, V.mod_dim,
        act_bin=tuple(M.T for M in V.act_bin),
        act_vbb=swapT(V.act_vbb),
        act_bvb=swapT(V.act_bvb),
        act_bbv=swapT(V.act_bbv),
        act_right=right,
        opposite=V.opposite,
    )


def opposite_rep(B: BolAlgebra, V: BolModule) -> BolModule:
    """Opposite representation in End(V)^op: pair arguments swapped, L and R exchanged."""
    if B.dim != V.alg_dim:
        raise DimensionError("module and algebra dimensions differ")
    n = V.alg_dim
    swap = lambda acts: tuple(tuple(acts[j][i] for j in range(n)) for i in range(n))  # noqa: E731
    if V.act_right is None:
        left, right = tuple(-M for M in V.act_bin), None
    else:
        left, right = V.act_right, V.act_bin
    return BolModule(
        n, V.mod_dim,
        act_bin=left,
        act_vbb=swap(V.act_vbb),
        act_bvb=swap(V.act_bvb),
        act_bbv=swap(V.act_bbv),
        act_right=right,
        opposite=not V.opposite,
    )


# -- identity AST ---------------------------------------------------------------------

PAIR_ATOMS = ("r", "c", "m")
SINGLE_ATOMS = ("L", "R")


@dataclass(frozen=True)
class Atom:
    kind: str  # L, R, r, c, m or id
    args: tuple = ()

    def __str__(self) -> str:
        return "id" if self.kind == "id" else f"{self.kind}({','.join(self.args)})"


@dataclass(frozen=True)
class Term:
    coeff: Fraction
    chain: tuple

    def __str__(self) -> str:
        body = " . ".join(str(a) for a in self.chain)
        return body if self.coeff == 1 else f"{self.coeff} * {body}"


@dataclass(frozen=True)
class Identity:
    symbols: tuple
    lhs: tuple
    rhs: tuple
    declared: bool = False

    def to_text(self) -> str:
        head = f"sym {', '.join(self.symbols)}; " if self.declared and self.symbols else ""
        return f"{head}{_side_text(self.lhs)} = {_side_text(self.rhs)}"

    __str__ = to_text


def _side_text(terms: Sequence[Term]) -> str:
    if not terms:
        return "0"
    out = str(terms[0])
    for t in terms[1:]:
        out += f" - {Term(-t.coeff, t.chain)}" if t.coeff < 0 else f" + {t}"
    return out


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*.,;()=]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            rest = text[pos:]
            if rest.strip() == "":
                toks.append(("end", "", len(text) + 1))
                return toks
            col = pos + (len(rest) - len(rest.lstrip())) + 1
            raise IdentitySyntaxError(f"unexpected character {text[col - 1]!r}", col)
        kind = m.lastgroup
        toks.append((kind, m.group(kind), m.start(kind) + 1))
        pos = m.end()


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0
        self.symbols: list[str] = []
        self.declared = False

    @property
    def tok(self):
        return self.toks[self.i]

    def peek(self, k: int = 1):
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def fail(self, message: str, *expected: str):
        raise IdentitySyntaxError(message, self.tok[2], expected)

    def expect(self, value: str):
        kind, val, _ = self.tok
        if val != value or kind == "end":
            self.fail(f"unexpected {val or 'end of input'!r}", repr(value))
        self.i += 1

    def name(self) -> str:
        kind, val, _ = self.tok
        if kind != "name":
            self.fail(f"unexpected {val or 'end of input'!r}", "NAME")
        self.i += 1
        return val

    def parse(self) -> Identity:
        while self.tok[0] == "name" and self.tok[1] == "sym":
            self.i += 1
            self.declared = True
            self._declare(self.name())
            while self.tok[1] == ",":
                self.i += 1
                self._declare(self.name())
            self.expect(";")
        lhs = self.expr()
        self.expect("=")
        rhs = self.expr()
        if self.tok[0] != "end":
            self.fail(f"unexpected {self.tok[1]!r}", "'+'", "'-'", "end of input")
        return Identity(tuple(self.symbols), lhs, rhs, self.declared)

    def _declare(self, s: str):
        if s not in self.symbols:
            self.symbols.append(s)

    def symbol(self) -> str:
        pos = self.tok[2]
        s = self.name()
        if s not in self.symbols:
            if self.declared:
                raise IdentitySyntaxError(f"undeclared symbol {s!r}", pos)
            self.symbols.append(s)
        return s

    def expr(self) -> tuple:
        kind, val, _ = self.tok
        if kind == "num" and val == "0" and self.peek()[1] != "*":
            self.i += 1
            return ()
        terms = [self.term(Fraction(1))]
        while self.tok[1] in ("+", "-"):
            sign = Fraction(1) if self.tok[1] == "+" else Fraction(-1)
            self.i += 1
            terms.append(self.term(sign))
        return tuple(terms)

    def term(self, sign: Fraction) -> Term:
        coeff = sign
        kind, val, _ = self.tok
        if val in ("+", "-") and self.peek()[0] == "num":
            if val == "-":
                coeff = -coeff
            self.i += 1
            kind, val, _ = self.tok
            if kind != "num":
                self.fail("expected a rational coefficient", "RATIONAL")
        if kind == "num":
            coeff *= Fraction(val)
            self.i += 1
            self.expect("*")
        chain = [self.atom()]
        while self.tok[1] == ".":
            self.i += 1
            chain.append(self.atom())
        return Term(coeff, tuple(chain))

    def atom(self) -> Atom:
        kind, val, _ = self.tok
        if kind == "name" and val == "id":
            self.i += 1
            return Atom("id")
        if kind == "name" and val in SINGLE_ATOMS:
            self.i += 1
            self.expect("(")
            s = self.symbol()
            self.expect(")")
            return Atom(val, (s,))
        if kind == "name" and val in PAIR_ATOMS:
            self.i += 1
            self.expect("(")
            a = self.symbol()
            self.expect(",")
            b = self.symbol()
            self.expect(")")
            return Atom(val, (a, b))
        self.fail(f"unexpected {val or 'end of input'!r}", "L(", "R(", "r(", "c(", "m(", "id")


def parse_identity(text: str) -> Identity:
    """Parse an operator identity; raises :class:`IdentitySyntaxError` with a 1-based position."""
    return _Parser(text).parse()


_DUAL_KIND = {"L": "R", "R": "L", "r": "r", "c": "c", "m": "m", "id": "id"}


def _dual_atom(a: Atom) -> Atom:
    return Atom(_DUAL_KIND[a.kind], tuple(reversed(a.args)))


def dualize_identity(ident: Identity) -> Identity:
    """Swap L and R, reverse the arguments of r, c, m and reverse every composition chain."""

    def side(terms):
        return tuple(Term(t.coeff, tuple(_dual_atom(a) for a in reversed(t.chain))) for t in terms)

    return Identity(ident.symbols, side(ident.lhs), side(ident.rhs), ident.declared)


# -- evaluation -----------------------------------------------------------------------

Derived = Mapping[str, Callable[[Mapping[str, tuple]], tuple]]


def _atom_matrix(V: BolModule, a: Atom, env: Mapping[str, tuple]) -> Matrix:
    if a.kind == "id":
        return V.identity()
    if a.kind == "L":
        return V.L(env[a.args[0]])
    if a.kind == "R":
        return V.R(env[a.args[0]])
    x, y = env[a.args[0]], env[a.args[1]]
    return {"r": V.r, "c": V.c, "m": V.m}[a.kind](x, y)


def evaluate_side(V: BolModule, terms: Sequence[Term], env: Mapping[str, tuple]) -> Matrix:
    mdim = V.mod_dim
    return matrix_sum((V.compose(*(_atom_matrix(V, a, env) for a in t.chain)).scaled(t.coeff)
                       for t in terms if t.coeff), mdim, mdim)


def check_identity(B: BolAlgebra, V: BolModule, ident: Identity,
                   env: Mapping[str, Sequence] | None = None, derived: Derived | None = None,
                   name: str = "identity") -> Check:
    """Compare both sides as operators on V.

    With ``env`` the free symbols are bound to the given vectors; without it
    every assignment of basis vectors is tried, which decides the identity
    for this (B, V) because each atom is multilinear in its symbols.
    ``derived`` maps symbol names to functions of the free binding (e.g.
    ``d = (g; a, b)``); such symbols are never enumerated.
    """
    if B.dim != V.alg_dim:
        raise DimensionError("module and algebra dimensions differ")
    derived = dict(derived or {})
    free = [s for s in ident.symbols if s not in derived]
    n = B.dim

    def residual(binding):
        full = dict(binding)
        for s, fn in derived.items():
            full[s] = tuple(fn(binding))
        return evaluate_side(V, ident.lhs, full) - evaluate_side(V, ident.rhs, full)

    if env is not None:
        missing = [s for s in free if s not in env]
        if missing:
            raise PreconditionError("unbound-symbol", f"no binding for {', '.join(missing)}", tuple(missing))
        binding = {s: tuple(Fraction(x) for x in env[s]) for s in free}
        for s, v in binding.items():
            if len(v) != n:
                raise DimensionError(f"binding for {s} has length {len(v)}, expected {n}")
        res = residual(binding)
        if res.is_zero():
            return Check(name, True)
        return Check(name, False, None, res.flat(), "fails under the given binding")

    for idx in product(range(n), repeat=len(free)):
        binding = {s: unit_vector(n, i) for s, i in zip(free, idx)}
        res = residual(binding)
        if not res.is_zero():
            detail = ", ".join(f"{s}=e{i + 1}" for s, i in zip(free, idx))
            return Check(name, False, tuple(i + 1 for i in idx), res.flat(), detail)
    return Check(name, True)


# -- built-in identities ----------------------------------------------------------------


@dataclass(frozen=True)
class BuiltinIdentity:
    name: str
    text: str
    derived_spec: dict = field(default_factory=dict)

    @property
    def identity(self) -> Identity:
        return parse_identity(self.text)

    def derived_for(self, B: BolAlgebra) -> dict:
        """Derived-symbol functions evaluated in ``B``."""
        out = {}
        for sym, (op, args) in self.derived_spec.items():
            if op == "D":  # D_{a,b}(g) = (g; a, b)
                out[sym] = lambda bnd, a=args: B.tri(bnd[a[2]], bnd[a[0]], bnd[a[1]])
            elif op == "mul":
                out[sym] = lambda bnd, a=args: B.mul(bnd[a[0]], bnd[a[1]])
        return out


BUILTINS = {
    "p1": BuiltinIdentity("p1", "sym t; R(t) = -1 * L(t)"),
    "p2": BuiltinIdentity("p2", "sym a, b; m(a,b) + r(a,b) = 0"),
    "p3": BuiltinIdentity("p3", "sym a, b; m(a,b) + c(a,b) + r(a,b) = 0"),
    "p4": BuiltinIdentity(
        "p4", "sym a, b, g, t, d; c(d,t) = m(a,b) . c(g,t) + c(a,g) . c(b,t) + r(b,g) . c(a,t)",
        {"d": ("D", ("a", "b", "g"))}),
    "p5": BuiltinIdentity(
        "p5", "sym a, b, t, s, p; m(a,b) . L(t) = L(s) + L(t) . r(a,b) + m(p,t) + L(p) . L(t)",
        {"s": ("D", ("a", "b", "t")), "p": ("mul", ("b", "a"))}),
}


def check_builtin(B: BolAlgebra, V: BolModule, name: str, dual: bool = False,
                  derived_algebra: BolAlgebra | None = None) -> Check:
    """Check a built-in identity (or its dual); derived symbols are computed in ``derived_algebra``."""
    bi = BUILTINS[name]
    ident = dualize_identity(bi.identity) if dual else bi.identity
    return check_identity(B, V, ident, derived=bi.derived_for(derived_algebra or B),
                          name=f"{name}*" if dual else name)
