"""Exact linear algebra over the rationals.

Scalars are :class:`fractions.Fraction`; vectors are plain tuples of
fractions; matrices are the immutable :class:`Matrix` below.  A
:class:`Subspace` always stores its basis in canonical reduced row-echelon
form, so two subspaces are equal exactly when their dataclasses compare equal.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Literal, Sequence

from .errors import DimensionError

Vector = tuple  # tuple[Fraction, ...]

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


def parse_rational(text: str) -> Fraction:
    """Parse ``-3/2``, ``7`` and friends; the denominator must be positive."""
    text = text.strip()
    if not _RATIONAL.match(text):
        raise ValueError(f"not a rational literal: {text!r}")
    value = Fraction(text)
    return value


def format_rational(x: Fraction) -> str:
    return str(Fraction(x))


def vec(values: Iterable) -> Vector:
    return tuple(Fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    v = [Fraction(0)] * n
    v[i] = Fraction(1)
    return tuple(v)


def is_zero(v: Sequence[Fraction]) -> bool:
    return not any(v)


def add(u: Vector, v: Vector) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Vector, v: Vector) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v: Vector) -> Vector:
    return tuple(c * a for a in v)


def lincomb(coeffs: Sequence, vectors: Sequence[Vector], n: int) -> Vector:
    """sum_k coeffs[k] * vectors[k] in dimension ``n`` (zero coefficients skipped)."""
    out = [Fraction(0)] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for i, a in enumerate(v):
                if a:
                    out[i] += c * a
    return tuple(out)


@dataclass(frozen=True)
class Matrix:
    """Immutable rectangular matrix of fractions.

    ``nrows``/``ncols`` are stored explicitly so that empty shapes such as
    ``0 x 3`` keep their column count.
    """

    nrows: int
    ncols: int
    rows: tuple

    def __post_init__(self):
        if len(self.rows) != self.nrows or any(len(r) != self.ncols for r in self.rows):
            raise DimensionError(f"ragged matrix data for shape {self.nrows}x{self.ncols}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], ncols: int | None = None) -> "Matrix":
        rows = tuple(vec(r) for r in rows)
        if ncols is None:
            if not rows:
                raise DimensionError("column count required for a matrix without rows")
            ncols = len(rows[0])
        return cls(len(rows), ncols, rows)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence], nrows: int) -> "Matrix":
        cols = [vec(c) for c in columns]
        if any(len(c) != nrows for c in cols):
            raise DimensionError("column length does not match row count")
        rows = tuple(tuple(c[i] for c in cols) for i in range(nrows))
        return cls(nrows, len(cols), rows)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "Matrix":
        return cls(nrows, ncols, tuple((Fraction(0),) * ncols for _ in range(nrows)))

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls(n, n, tuple(unit_vector(n, i) for i in range(n)))

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j: int) -> Vector:
        return tuple(r[j] for r in self.rows)

    def columns(self) -> list[Vector]:
        return [self.column(j) for j in range(self.ncols)]

    def transpose(self) -> "Matrix":
        return Matrix(self.ncols, self.nrows, tuple(self.columns()))

    @property
    def T(self) -> "Matrix":
        return self.transpose()

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.ncols:
            raise DimensionError(f"vector of length {len(v)} applied to {self.nrows}x{self.ncols} matrix")
        out = []
        for r in self.rows:
            s = Fraction(0)
            for a, b in zip(r, v):
                if a and b:
                    s += a * b
            out.append(s)
        return tuple(out)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot compose {self.shape} with {other.shape}")
        cols = other.columns()
        rows = []
        for r in self.rows:
            row = []
            for c in cols:
                s = Fraction(0)
                for a, b in zip(r, c):
                    if a and b:
                        s += a * b
                row.append(s)
            rows.append(tuple(row))
        return Matrix(self.nrows, other.ncols, tuple(rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.nrows, self.ncols, tuple(add(a, b) for a, b in zip(self.rows, other.rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._same_shape(other)
        return Matrix(self.nrows, self.ncols, tuple(sub(a, b) for a, b in zip(self.rows, other.rows)))

    def __neg__(self) -> "Matrix":
        return self.scaled(-1)

    def scaled(self, c) -> "Matrix":
        return Matrix(self.nrows, self.ncols, tuple(scale(c, r) for r in self.rows))

    def is_zero(self) -> bool:
        return all(is_zero(r) for r in self.rows)

    def flat(self) -> Vector:
        """Row-major flattening."""
        return tuple(a for r in self.rows for a in r)

    def _same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch {self.shape} vs {other.shape}")

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(a) for a in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: {body})"


def matrix_sum(mats: Iterable[Matrix], nrows: int, ncols: int) -> Matrix:
    acc = [[Fraction(0)] * ncols for _ in range(nrows)]
    for m in mats:
        for i, r in enumerate(m.rows):
            row = acc[i]
            for j, a in enumerate(r):
                if a:
                    row[j] += a
    return Matrix(nrows, ncols, tuple(tuple(r) for r in acc))


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan elimination in place; returns (nonzero rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for col in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        if lead != 1:
            rows[r] = [a / lead for a in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
    return rows[:r], pivots


def rref(M: Matrix) -> tuple[Matrix, list[int]]:
    """Canonical reduced row-echelon form (same shape as ``M``) and pivot columns."""
    rows = [list(r) for r in M.rows]
    nonzero, pivots = _rref_rows(rows, M.ncols)
    padded = [tuple(r) for r in nonzero] + [zero_vector(M.ncols)] * (M.nrows - len(nonzero))
    return Matrix(M.nrows, M.ncols, tuple(padded)), pivots


def rref_rank(M: Matrix) -> tuple[Matrix, int]:
    R, pivots = rref(M)
    return R, len(pivots)


def rank(M: Matrix) -> int:
    return rref_rank(M)[1]


@dataclass(frozen=True)
class Subspace:
    """Subspace of Q^n held as a canonical RREF basis."""

    ambient_dim: int
    basis: tuple

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(i for i, a in enumerate(b) if a) for b in self.basis]

    def matrix(self) -> Matrix:
        """Basis vectors as rows."""
        return Matrix(self.dim, self.ambient_dim, self.basis)

    def basis_columns(self) -> Matrix:
        """Basis vectors as columns (an ``ambient_dim x dim`` inclusion matrix)."""
        return Matrix.from_columns(self.basis, self.ambient_dim)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __le__(self, other: "Subspace") -> bool:
        _check_ambient(self, other)
        return all(contains(other, b) for b in self.basis)

    def __repr__(self) -> str:
        body = ", ".join("(" + ",".join(str(a) for a in b) + ")" for b in self.basis)
        return f"Subspace(Q^{self.ambient_dim}: {{{body}}})"


def span(vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
    rows = [list(vec(v)) for v in vectors]
    for r in rows:
        if len(r) != ambient_dim:
            raise DimensionError(f"vector of length {len(r)} in Q^{ambient_dim}")
    nonzero, _ = _rref_rows(rows, ambient_dim)
    return Subspace(ambient_dim, tuple(tuple(r) for r in nonzero))


def zero_subspace(n: int) -> Subspace:
    return Subspace(n, ())


def full_space(n: int) -> Subspace:
    return Subspace(n, tuple(unit_vector(n, i) for i in range(n)))


def row_space(M: Matrix) -> Subspace:
    return span(M.rows, M.ncols)


def column_space(M: Matrix) -> Subspace:
    return span(M.columns(), M.nrows)


def nullspace(M: Matrix) -> Subspace:
    """Canonical basis of ``{v : M v = 0}``."""
    R, pivots = rref(M)
    n = M.ncols
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * n
        v[f] = Fraction(1)
        for row, p in enumerate(pivots):
            v[p] = -R.rows[row][f]
        basis.append(v)
    return span(basis, n)


def _check_ambient(A: Subspace, B: Subspace) -> None:
    if A.ambient_dim != B.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {A.ambient_dim} vs {B.ambient_dim}")


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    _check_ambient(A, B)
    return span(A.basis + B.basis, A.ambient_dim)


def subspace_intersect(A: Subspace, B: Subspace) -> Subspace:
    """A ∩ B from the kernel of the stacked system sum x_i a_i - sum y_j b_j = 0."""
    _check_ambient(A, B)
    n = A.ambient_dim
    if not A.basis or not B.basis:
        return zero_subspace(n)
    cols = list(A.basis) + [scale(-1, b) for b in B.basis]
    K = nullspace(Matrix.from_columns(cols, n))
    p = A.dim
    return span((lincomb(k[:p], A.basis, n) for k in K.basis), n)


def subspace_combine(A: Subspace, B: Subspace, mode: Literal["sum", "intersect"]) -> Subspace:
    if mode == "sum":
        return subspace_sum(A, B)
    if mode == "intersect":
        return subspace_intersect(A, B)
    raise ValueError(f"unknown mode {mode!r}")


def reduce_mod(A: Subspace, v: Sequence) -> Vector:
    """Remainder of ``v`` after clearing the pivot columns of ``A``'s basis."""
    if len(v) != A.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} against subspace of Q^{A.ambient_dim}")
    w = list(vec(v))
    for b, p in zip(A.basis, A.pivots):
        f = w[p]
        if f:
            w = [x - f * y for x, y in zip(w, b)]
    return tuple(w)


def contains(A: Subspace, v: Sequence) -> bool:
    return is_zero(reduce_mod(A, v))


def coordinates(A: Subspace, v: Sequence) -> Vector | None:
    """Coefficients of ``v`` in ``A``'s canonical basis, or None if ``v`` is outside ``A``."""
    if not contains(A, v):
        return None
    return tuple(Fraction(v[p]) for p in A.pivots)


def complement_indices(A: Subspace) -> list[int]:
    """Standard basis indices that complete ``A``'s basis (its non-pivot columns)."""
    piv = set(A.pivots)
    return [i for i in range(A.ambient_dim) if i not in piv]


def solve_affine(M: Matrix, b: Sequence) -> tuple[Vector, Subspace] | None:
    """One solution of ``M v = b`` plus the homogeneous solution space, or None."""
    if len(b) != M.nrows:
        raise DimensionError(f"right-hand side of length {len(b)} for {M.nrows} equations")
    n = M.ncols
    aug = [list(r) + [Fraction(x)] for r, x in zip(M.rows, b)]
    nonzero, pivots = _rref_rows(aug, n + 1)
    if n in pivots:
        return None
    particular = [Fraction(0)] * n
    for row, p in zip(nonzero, pivots):
        particular[p] = row[n]
    return tuple(particular), nullspace(M)


def solve_matrix(A: Matrix, H: Matrix) -> tuple[Matrix, bool] | None:
    """Solve ``A X = H`` column by column.

    Returns ``(X, unique)`` or None when some column is inconsistent.
    """
    if A.nrows != H.nrows:
        raise DimensionError(f"cannot solve {A.shape} X = {H.shape}")
    cols = []
    unique = A.ncols == rank(A)
    for h in H.columns():
        sol = solve_affine(A, h)
        if sol is None:
            return None
        cols.append(sol[0])
    return Matrix.from_columns(cols, A.ncols), unique


def block_diag(blocks: Sequence[Matrix]) -> Matrix:
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for r in b.rows:
            rows.append((Fraction(0),) * off + tuple(r) + (Fraction(0),) * (nc - off - b.ncols))
        off += b.ncols
    return Matrix(nr, nc, tuple(rows))
