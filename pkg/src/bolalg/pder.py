"""Pseudo-derivations: pairs (D, z) with

    D(x.y) = D(x).y + x.D(y) + (z; x, y) + (x.y).z

for all x, y.  The condition is linear in D and z jointly, so the whole
solution set is a single nullspace in Q^(n*n + n); coordinates are D in
row-major order followed by z.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .algebra import BolAlgebra, d_matrix
from .errors import DimensionError
from .linalg import Matrix, Subspace, contains, nullspace, solve_affine, span, unit_vector


@dataclass(frozen=True)
class PDerSolution:
    algebra_dim: int
    pair_space: Subspace

    def split(self, v) -> tuple[Matrix, tuple]:
        """Unflatten a pair-space vector into (D, z)."""
        return split_pair(self.algebra_dim, v)

    def pairs(self) -> list[tuple[Matrix, tuple]]:
        return [self.split(b) for b in self.pair_space.basis]


@dataclass(frozen=True)
class CompanionSet:
    defined: bool
    particular: tuple | None = None
    homogeneous: Subspace | None = None

    def __contains__(self, z) -> bool:
        if not self.defined:
            return False
        return contains(self.homogeneous, tuple(a - b for a, b in zip(z, self.particular)))


def flatten_pair(D: Matrix, z) -> tuple:
    return D.flat() + tuple(Fraction(a) for a in z)


def split_pair(n: int, v) -> tuple[Matrix, tuple]:
    rows = tuple(tuple(v[r * n:(r + 1) * n]) for r in range(n))
    return Matrix(n, n, rows), tuple(v[n * n:])


def _basis_pairs(B: BolAlgebra) -> list[tuple[int, int]]:
    """Pairs (i, j) on which the identity is imposed.

    When the binary operation is skew and the ternary one is skew in its last
    two slots the (j, i) equation is the negative of the (i, j) one and (i, i)
    is vacuous, so i < j suffices.
    """
    n = B.dim
    c, t = B.binary, B.ternary
    skew_bin = all(c[i][j][k] == -c[j][i][k] for i, j, k in product(range(n), repeat=3))
    skew_ter = skew_bin and all(t[x][y][z][k] == -t[x][z][y][k] for x, y, z, k in product(range(n), repeat=4))
    if skew_ter:
        return [(i, j) for i in range(n) for j in range(i + 1, n)]
    return list(product(range(n), repeat=2))


def _constraint_rows(B: BolAlgebra, pairs) -> list[list[Fraction]]:
    """Rows of the linear system in the n*n + n unknowns (D row-major, then z)."""
    n, c, t = B.dim, B.binary, B.ternary
    rows = []
    for i, j in pairs:
        w = c[i][j]
        # coefficient of D[r][s] in component k of the residual
        for k in range(n):
            row = [Fraction(0)] * (n * n + n)
            # + D(e_i . e_j): component k gets sum_s D[k][s] w_s
            for s in range(n):
                if w[s]:
                    row[k * n + s] += w[s]
            # - D(e_i) . e_j = - sum_r D[r][i] (e_r . e_j)
            for r in range(n):
                if c[r][j][k]:
                    row[r * n + i] -= c[r][j][k]
            # - e_i . D(e_j) = - sum_r D[r][j] (e_i . e_r)
            for r in range(n):
                if c[i][r][k]:
                    row[r * n + j] -= c[i][r][k]
            # - (z; e_i, e_j) - (e_i . e_j) . z
            for q in range(n):
                coef = t[q][i][j][k] + sum((w[s] * c[s][q][k] for s in range(n) if w[s]), Fraction(0))
                if coef:
                    row[n * n + q] -= coef
            rows.append(row)
    return rows


def pder_solve(B: BolAlgebra) -> PDerSolution:
    n = B.dim
    rows = _constraint_rows(B, _basis_pairs(B))
    M = Matrix(len(rows), n * n + n, tuple(tuple(r) for r in rows))
    return PDerSolution(n, nullspace(M))


def pair_residual(B: BolAlgebra, D: Matrix, z) -> list[tuple]:
    """Residual vector of the defining identity at every basis pair (i, j), in order."""
    n = B.dim
    out = []
    for i, j in product(range(n), repeat=2):
        x, y = unit_vector(n, i), unit_vector(n, j)
        xy = B.mul(x, y)
        lhs = D.apply(xy)
        rhs = [B.mul(D.apply(x), y), B.mul(x, D.apply(y)), B.tri(z, x, y), B.mul(xy, z)]
        out.append(tuple(a - sum(r[k] for r in rhs) for k, a in enumerate(lhs)))
    return out


def companions_of(B: BolAlgebra, D: Matrix) -> CompanionSet:
    """Com(D): all z making D a pseudo-derivation (an affine subspace, possibly empty)."""
    n = B.dim
    if D.shape != (n, n):
        raise DimensionError(f"D must be {n}x{n}")
    rows = _constraint_rows(B, list(product(range(n), repeat=2)))
    Dflat = D.flat()
    A = Matrix(len(rows), n, tuple(tuple(r[n * n:]) for r in rows))
    # rows . (D, z) = 0  <=>  A z = -(D-part . D)
    b = tuple(-sum((a * d for a, d in zip(r[:n * n], Dflat) if a and d), Fraction(0)) for r in rows)
    sol = solve_affine(A, b)
    if sol is None:
        return CompanionSet(False)
    return CompanionSet(True, sol[0], sol[1])


def inner_pder_span(B: BolAlgebra) -> tuple[Subspace, bool]:
    """span{(D_{e_i,e_j}, e_i.e_j)} in the pair space, and whether it lies inside pder_solve(B)."""
    n = B.dim
    gens = []
    for i, j in product(range(n), repeat=2):
        a, b = unit_vector(n, i), unit_vector(n, j)
        gens.append(flatten_pair(d_matrix(B, a, b), B.mul(a, b)))
    S = span(gens, n * n + n)
    full = pder_solve(B).pair_space
    return S, S <= full


__all__ = [
    "CompanionSet", "PDerSolution", "companions_of", "flatten_pair", "inner_pder_span",
    "pair_residual", "pder_solve", "split_pair",
]
