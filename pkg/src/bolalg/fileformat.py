"""Line-oriented text formats for algebras, modules and morphisms.

Algebra files::

    bolalg 1                      # or: liealg 1
    dim 2
    field Q
    bin 1 2 = 1 0                 # e_1 . e_2   (bracket for liealg)
    ter 1 1 2 = -2 0              # (e_1; e_1, e_2)

Module files::

    bolmod 1
    algdim 2
    moddim 2
    Lact 1 = 0 1 ; 0 0            # matrix of v -> e_1 . v, rows ';'-separated
    Ract 1 = ...                  # optional: v -> v . e_1
    vbb 1 2 = ...                 # v -> [v; e_1, e_2]
    bvb 1 2 = ...                 # v -> [e_1; v, e_2]
    bbv 1 2 = ...                 # v -> [e_1; e_2, v]
    opposite                      # optional: operators live in End(V)^op

Morphism files::

    bolmor 1
    source 2
    target 3
    map = 1 0 ; 0 1 ; 0 0         # target x source matrix

Indices are 1-based, unlisted entries are zero, ``#`` starts a comment.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product

from .algebra import BolAlgebra, LieAlgebra
from .errors import FormatError
from .linalg import Matrix, parse_rational
from .modules import BolModule

FORMAT_VERSION = "1"


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def _rationals(tokens, no: int) -> tuple:
    try:
        return tuple(parse_rational(t) for t in tokens)
    except ValueError as exc:
        raise FormatError(str(exc), no) from None


def _int(token: str, no: int, what: str) -> int:
    try:
        val = int(token)
    except ValueError:
        raise FormatError(f"{what} must be an integer, got {token!r}", no) from None
    if val < 0:
        raise FormatError(f"{what} must be nonnegative", no)
    return val


def _header(lines, allowed: dict[str, str]):
    try:
        no, line = next(lines)
    except StopIteration:
        raise FormatError("empty file") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] not in allowed:
        raise FormatError(f"expected header {' or '.join(f'{k!r} {FORMAT_VERSION}' for k in allowed)}", no)
    if parts[1] != FORMAT_VERSION:
        raise FormatError(f"unsupported format version {parts[1]!r}", no)
    return parts[0]


def _keyword_int(lines, keyword: str) -> int:
    try:
        no, line = next(lines)
    except StopIteration:
        raise FormatError(f"missing {keyword!r} line") from None
    parts = line.split()
    if len(parts) != 2 or parts[0] != keyword:
        raise FormatError(f"expected '{keyword} <n>'", no)
    return _int(parts[1], no, keyword)


def _entry(line: str, no: int, nidx: int, bound: int):
    head, sep, tail = line.partition("=")
    if not sep:
        raise FormatError("missing '='", no)
    parts = head.split()
    if len(parts) != nidx + 1:
        raise FormatError(f"{parts[0]!r} takes {nidx} indices", no)
    idx = tuple(_int(p, no, "index") for p in parts[1:])
    for i in idx:
        if not 1 <= i <= bound:
            raise FormatError(f"index {i} out of range 1..{bound}", no)
    return parts[0], tuple(i - 1 for i in idx), tail


def parse_algebra_file(text: str) -> BolAlgebra | LieAlgebra:
    lines = _lines(text)
    kind = _header(lines, {"bolalg": "", "liealg": ""})
    n = _keyword_int(lines, "dim")
    try:
        no, line = next(lines)
    except StopIteration:
        raise FormatError("missing 'field Q' line") from None
    if line.split() != ["field", "Q"]:
        raise FormatError("only 'field Q' is supported", no)
    binary: dict = {}
    ternary: dict = {}
    for no, line in lines:
        word = line.split()[0]
        if word == "legend" and kind == "liealg":
            continue
        if word == "bin":
            _, idx, tail = _entry(line, no, 2, n)
            target = binary
        elif word == "ter" and kind == "bolalg":
            _, idx, tail = _entry(line, no, 3, n)
            target = ternary
        else:
            raise FormatError(f"unexpected line {line!r}", no)
        vals = _rationals(tail.split(), no)
        if len(vals) != n:
            raise FormatError(f"expected {n} coordinates, got {len(vals)}", no)
        if idx in target:
            raise FormatError(f"duplicate entry {word} {' '.join(str(i + 1) for i in idx)}", no)
        target[idx] = vals
    if kind == "liealg":
        return LieAlgebra.from_entries(n, binary, antisymmetrize=False)
    return BolAlgebra.from_entries(n, binary, ternary)


def _matrix(tail: str, m: int, no: int, ncols: int | None = None) -> Matrix:
    ncols = m if ncols is None else ncols
    rows = [r.split() for r in tail.split(";")] if tail.strip() else []
    if m == 0 and rows == []:
        return Matrix.zeros(0, ncols)
    if len(rows) != m or any(len(r) != ncols for r in rows):
        raise FormatError(f"expected {m} rows of {ncols} rationals", no)
    return Matrix(m, ncols, tuple(_rationals(r, no) for r in rows))


def parse_module_file(text: str) -> BolModule:
    lines = _lines(text)
    _header(lines, {"bolmod": ""})
    n = _keyword_int(lines, "algdim")
    m = _keyword_int(lines, "moddim")
    single = {"Lact": {}, "Ract": {}}
    pairs = {"vbb": {}, "bvb": {}, "bbv": {}}
    opposite = False
    for no, line in lines:
        word = line.split()[0]
        if line == "opposite":
            opposite = True
            continue
        if word in single:
            _, idx, tail = _entry(line, no, 1, n)
            store = single[word]
        elif word in pairs:
            _, idx, tail = _entry(line, no, 2, n)
            store = pairs[word]
        else:
            raise FormatError(f"unexpected line {line!r}", no)
        if idx in store:
            raise FormatError(f"duplicate entry {word} {' '.join(str(i + 1) for i in idx)}", no)
        store[idx] = _matrix(tail, m, no)
    Z = Matrix.zeros(m, m)
    one = lambda d: tuple(d.get((i,), Z) for i in range(n))  # noqa: E731
    two = lambda d: tuple(tuple(d.get((i, j), Z) for j in range(n)) for i in range(n))  # noqa: E731
    return BolModule(
        n, m,
        act_bin=one(single["Lact"]),
        act_vbb=two(pairs["vbb"]),
        act_bvb=two(pairs["bvb"]),
        act_bbv=two(pairs["bbv"]),
        act_right=one(single["Ract"]) if single["Ract"] else None,
        opposite=opposite,
    )


def parse_morphism_file(text: str) -> Matrix:
    lines = _lines(text)
    _header(lines, {"bolmor": ""})
    src = _keyword_int(lines, "source")
    tgt = _keyword_int(lines, "target")
    try:
        no, line = next(lines)
    except StopIteration:
        raise FormatError("missing 'map = ...' line") from None
    head, sep, tail = line.partition("=")
    if head.strip() != "map" or not sep:
        raise FormatError("expected 'map = <rows>'", no)
    M = _matrix(tail, tgt, no, ncols=src)
    for no, line in lines:
        raise FormatError(f"unexpected line {line!r}", no)
    return M


def parse_vector(text: str) -> tuple:
    """Comma-separated rationals, e.g. ``1,-1/2,0``."""
    return tuple(parse_rational(t) for t in text.split(","))


def parse_matrix_rows(text: str) -> Matrix:
    """Rows separated by ';', entries by whitespace or commas."""
    rows = [r.replace(",", " ").split() for r in text.split(";")]
    return Matrix.from_rows([[parse_rational(x) for x in r] for r in rows])


# -- writers -----------------------------------------------------------------------


def _fmt(v) -> str:
    return " ".join(str(Fraction(a)) for a in v)


def _fmt_matrix(M: Matrix) -> str:
    return " ; ".join(_fmt(r) for r in M.rows)


def dump_algebra(B: BolAlgebra) -> str:
    n = B.dim
    out = [f"bolalg {FORMAT_VERSION}", f"dim {n}", "field Q"]
    for i, j in product(range(n), repeat=2):
        if any(B.binary[i][j]):
            out.append(f"bin {i + 1} {j + 1} = {_fmt(B.binary[i][j])}")
    for i, j, k in product(range(n), repeat=3):
        if any(B.ternary[i][j][k]):
            out.append(f"ter {i + 1} {j + 1} {k + 1} = {_fmt(B.ternary[i][j][k])}")
    return "\n".join(out) + "\n"


def dump_lie(L: LieAlgebra, legend: list[str] | None = None) -> str:
    n = L.dim
    out = [f"liealg {FORMAT_VERSION}", f"dim {n}", "field Q"]
    for k, name in enumerate(legend or []):
        out.append(f"legend {k + 1} {name}")
    for i, j in product(range(n), repeat=2):
        if any(L.bracket_table[i][j]):
            out.append(f"bin {i + 1} {j + 1} = {_fmt(L.bracket_table[i][j])}")
    return "\n".join(out) + "\n"


def dump_module(V: BolModule) -> str:
    n = V.alg_dim
    out = [f"bolmod {FORMAT_VERSION}", f"algdim {n}", f"moddim {V.mod_dim}"]
    if V.opposite:
        out.append("opposite")
    for i in range(n):
        if not V.act_bin[i].is_zero():
            out.append(f"Lact {i + 1} = {_fmt_matrix(V.act_bin[i])}")
    if V.act_right is not None:
        for i in range(n):
            # keep one line even when zero so an explicit R survives the round trip
            if not V.act_right[i].is_zero() or i == 0:
                out.append(f"Ract {i + 1} = {_fmt_matrix(V.act_right[i])}")
    for word, acts in (("vbb", V.act_vbb), ("bvb", V.act_bvb), ("bbv", V.act_bbv)):
        for i, j in product(range(n), repeat=2):
            if not acts[i][j].is_zero():
                out.append(f"{word} {i + 1} {j + 1} = {_fmt_matrix(acts[i][j])}")
    return "\n".join(out) + "\n"


def dump_morphism(M: Matrix) -> str:
    return f"bolmor {FORMAT_VERSION}\nsource {M.ncols}\ntarget {M.nrows}\nmap = {_fmt_matrix(M)}\n"
