"""The Lie algebra G = B + wedge^2 B built around a Bol algebra B.

Coordinates: the first n are B, followed by one coordinate per pair i < j
standing for e_i ^ e_j.  Brackets on basis elements:

    [x, y]          = x.y + x^y
    [z, x^y]        = (z; x, y)         ([x^y, z] = -(z; x, y))
    [x^y, u^v]      = [x^y, u]^v + u^[x^y, v]

The last line is used for the earlier pair in the wedge ordering and the
reverse bracket is its negative, so antisymmetry holds by construction;
the Jacobi identity is left to :func:`verify_envelope`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .algebra import BolAlgebra, LieAlgebra, from_lie_pair, jacobi_check
from .errors import PreconditionError
from .linalg import Vector, span, unit_vector
from .report import Check, CheckReport


@dataclass(frozen=True)
class EnvelopingAlgebra:
    base: BolAlgebra
    total: LieAlgebra
    wedge_pairs: tuple  # wedge_pairs[p] = (i, j), 0-based, i < j

    @property
    def n(self) -> int:
        return self.base.dim

    def wedge_index(self, i: int, j: int) -> int:
        return self.n + self.wedge_pairs.index((i, j))

    def b_part(self):
        return span((unit_vector(self.total.dim, i) for i in range(self.n)), self.total.dim)

    def wedge_part(self):
        N = self.total.dim
        return span((unit_vector(N, i) for i in range(self.n, N)), N)

    def legend(self) -> list[str]:
        names = [f"e{i + 1}" for i in range(self.n)]
        names += [f"e{i + 1}^e{j + 1}" for i, j in self.wedge_pairs]
        return names


def build_envelope(B: BolAlgebra, scheme: str = "lts-standard") -> EnvelopingAlgebra:
    if scheme != "lts-standard":
        raise ValueError(f"unknown scheme {scheme!r}")
    n = B.dim
    pairs = tuple(combinations(range(n), 2))
    N = n + len(pairs)
    index = {p: n + k for k, p in enumerate(pairs)}

    def wedge(u: Vector, v: Vector) -> list[Fraction]:
        """Coordinates of u ^ v in the full algebra."""
        out = [Fraction(0)] * N
        for i, j in pairs:
            coef = u[i] * v[j] - u[j] * v[i]
            if coef:
                out[index[(i, j)]] = coef
        return out

    def embed(v: Vector) -> list[Fraction]:
        return list(v) + [Fraction(0)] * (N - n)

    table = [[[Fraction(0)] * N for _ in range(N)] for _ in range(N)]
    e = [unit_vector(n, i) for i in range(n)]
    for a in range(n):
        for b in range(n):
            w = wedge(e[a], e[b])
            table[a][b] = [x + y for x, y in zip(embed(B.binary[a][b]), w)]
    for (i, j), p in index.items():
        for k in range(n):
            t = B.ternary[k][i][j]
            table[k][p] = embed(t)
            table[p][k] = [-x for x in embed(t)]

    def act(i, j, v: Vector) -> Vector:
        """[e_i ^ e_j, v] restricted to B: -(v; e_i, e_j)."""
        return tuple(-x for x in B.tri(v, e[i], e[j]))

    for (p_pair, p), (q_pair, q) in combinations(index.items(), 2):
        i, j = p_pair
        u, v = q_pair
        val = [x + y for x, y in zip(wedge(act(i, j, e[u]), e[v]), wedge(e[u], act(i, j, e[v])))]
        table[p][q] = val
        table[q][p] = [-x for x in val]
    return EnvelopingAlgebra(B, LieAlgebra(N, table), pairs)


def verify_envelope(E: EnvelopingAlgebra) -> CheckReport:
    """Jacobi identity of the total algebra plus the two retraction laws on B."""
    report = jacobi_check(E.total)
    n, G, B = E.n, E.total, E.base
    e = [unit_vector(G.dim, i) for i in range(n)]

    def proj(v):
        return tuple(v[:n])

    bad = None
    for a in range(n):
        for b in range(n):
            if proj(G.bracket(e[a], e[b])) != B.binary[a][b]:
                bad = (a + 1, b + 1)
                break
        if bad:
            break
    report.checks.append(Check("retraction-binary", bad is None, bad, detail="pi[x,y] = x.y"))

    bad = None
    for k in range(n):
        for a in range(n):
            for b in range(n):
                xy = G.bracket(e[a], e[b])
                # B-part of [z, [x,y] - x.y] must be (z; x, y)
                wedge_only = tuple(0 if i < n else x for i, x in enumerate(xy))
                if proj(G.bracket(e[k], wedge_only)) != B.ternary[k][a][b] and bad is None:
                    bad = (k + 1, a + 1, b + 1)
    report.checks.append(Check("retraction-ternary", bad is None, bad, detail="pi[z, x^y] = (z;x,y)"))
    return report


def roundtrip(B: BolAlgebra) -> CheckReport:
    """Rebuild B from its envelope via the Lie-pair construction and compare exactly."""
    E = build_envelope(B)
    ver = verify_envelope(E)
    if not ver.passed:
        bad = ver.failures()[0]
        raise PreconditionError(f"envelope:{bad.name}", "envelope verification failed", bad.witness)
    try:
        R = from_lie_pair(E.total, E.b_part(), E.wedge_part())
    except PreconditionError as exc:
        raise PreconditionError(f"lie-pair:{exc.condition}", str(exc), exc.witness) from exc
    n = B.dim
    bin_bad = [(i + 1, j + 1) for i in range(n) for j in range(n) if R.binary[i][j] != B.binary[i][j]]
    ter_bad = [(i + 1, j + 1, k + 1) for i in range(n) for j in range(n) for k in range(n)
               if R.ternary[i][j][k] != B.ternary[i][j][k]]
    return CheckReport([
        Check("recovered-binary", not bin_bad, bin_bad[0] if bin_bad else None,
              detail=f"{len(bin_bad)} mismatching entries"),
        Check("recovered-ternary", not ter_bad, ter_bad[0] if ter_bad else None,
              detail=f"{len(ter_bad)} mismatching entries"),
    ])


def recovered_algebra(B: BolAlgebra) -> BolAlgebra:
    E = build_envelope(B)
    return from_lie_pair(E.total, E.b_part(), E.wedge_part())
