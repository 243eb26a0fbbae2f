"""Command-line front end: ``bolalg <command> [files] [options]``.

Every command prints one report, in a human table or as versioned JSON
(``--format machine``).  Exit status is derived from the report alone:
0 when every check passes, 1 when some check fails, 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import Callable

from . import algebra as alg
from . import duality, envelope, ideals, modules, pder
from .errors import BolalgError, PreconditionError
from .fileformat import (
    dump_algebra,
    dump_lie,
    dump_module,
    dump_morphism,
    parse_algebra_file,
    parse_matrix_rows,
    parse_module_file,
    parse_morphism_file,
    parse_vector,
)
from .linalg import format_rational, span
from .report import Check, Report


class UsageError(BolalgError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- input helpers ---------------------------------------------------------------------


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _bol(path: str) -> alg.BolAlgebra:
    A = parse_algebra_file(_read(path))
    if not isinstance(A, alg.BolAlgebra):
        raise UsageError(f"{path}: expected a bolalg file, got liealg")
    return A


def _lie(path: str) -> alg.LieAlgebra:
    A = parse_algebra_file(_read(path))
    if not isinstance(A, alg.LieAlgebra):
        raise UsageError(f"{path}: expected a liealg file, got bolalg")
    return A


def _module(path: str, B: alg.BolAlgebra) -> modules.BolModule:
    V = parse_module_file(_read(path))
    if V.alg_dim != B.dim:
        raise UsageError(f"{path}: module over a {V.alg_dim}-dimensional algebra, expected {B.dim}")
    return V


def _morphism(path: str, S: alg.BolAlgebra, T: alg.BolAlgebra) -> ideals.Morphism:
    M = parse_morphism_file(_read(path))
    if M.shape != (T.dim, S.dim):
        raise UsageError(f"{path}: map is {M.nrows}x{M.ncols}, expected {T.dim}x{S.dim}")
    return ideals.Morphism(S, T, M)


def _vectors(texts, n: int, what: str):
    out = []
    for t in texts or []:
        try:
            v = parse_vector(t)
        except ValueError as exc:
            raise UsageError(f"{what}: {exc}") from None
        if len(v) != n:
            raise UsageError(f"{what}: vector {t!r} has {len(v)} entries, expected {n}")
        out.append(v)
    return span(out, n)


def _basis_text(S) -> list[str]:
    return [",".join(format_rational(x) for x in v) for v in S.basis]


def _write(args, text: str) -> dict:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
        return {"output": args.out}
    return {}


def _morphism_check(f: ideals.Morphism, name: str) -> Check:
    c = ideals.is_morphism(f)
    return Check(name, c.passed, c.witness, c.residual, c.detail)


def _equal_check(name: str, A, Bm, detail: str) -> Check:
    if A == Bm:
        return Check(name, True, detail=detail)
    diff = A - Bm
    return Check(name, False, None, diff.flat(), detail)


# -- commands ---------------------------------------------------------------------------
# Each handler returns (checks, data).


def cmd_check(args):
    A = parse_algebra_file(_read(args.algebra))
    if isinstance(A, alg.LieAlgebra):
        rep = alg.jacobi_check(A)
        data = {"kind": "liealg", "dim": A.dim}
        if rep.passed:
            rep.extend(alg.check_axioms(alg.from_lie_algebra(A), args.profile))
        return rep.checks, data
    return alg.check_axioms(A, args.profile).checks, {"kind": "bolalg", "dim": A.dim, "profile": args.profile}


def cmd_lts(args):
    B = _bol(args.algebra)
    return alg.check_lts(B, args.profile).checks, {"dim": B.dim, "profile": args.profile}


def cmd_ideal(args):
    B = _bol(args.algebra)
    I = _vectors(args.vec, B.dim, "--vec")
    return [ideals.ideal_check(B, I, args.mode)], {"subspace_dim": I.dim, "mode": args.mode}


def cmd_closure(args):
    B = _bol(args.algebra)
    X = _vectors(args.vec, B.dim, "--vec")
    J = ideals.ideal_closure(B, X, args.mode)
    checks = [ideals.ideal_check(B, J, args.mode), Check("contains-generators", X <= J)]
    return checks, {"dim": J.dim, "basis": _basis_text(J), "mode": args.mode}


def cmd_quotient(args):
    B = _bol(args.algebra)
    I = _vectors(args.vec, B.dim, "--vec")
    Q, proj = ideals.quotient(B, I, args.mode)
    checks = [ideals.ideal_check(B, I, args.mode), _morphism_check(proj, "projection-morphism")]
    return checks, {"dim": Q.dim, **_write(args, dump_algebra(Q))}


def cmd_morph(args):
    S, T = _bol(args.source), _bol(args.target)
    return [ideals.is_morphism(_morphism(args.map, S, T))], {}


def cmd_kernel(args):
    S, T = _bol(args.source), _bol(args.target)
    ki = ideals.kernel_image(_morphism(args.map, S, T))
    k, i = ki.kernel_is_ideal, ki.image_is_subalgebra
    checks = [Check("kernel-ideal", k.passed, k.witness, k.residual, k.detail), i]
    data = {"kernel_dim": ki.kernel.dim, "kernel": _basis_text(ki.kernel),
            "image_dim": ki.image.dim, "image": _basis_text(ki.image)}
    return checks, data


def cmd_iso(args):
    S, T = _bol(args.source), _bol(args.target)
    phi = ideals.first_iso(_morphism(args.map, S, T), args.mode)
    from .linalg import rank

    n = phi.source.dim
    checks = [
        Check("dimension", phi.source.dim == phi.target.dim, detail="dim B/ker f = dim im f"),
        Check("bijective", rank(phi.matrix) == n),
        _morphism_check(phi, "induced-morphism"),
    ]
    return checks, {"quotient_dim": n, "image_dim": phi.target.dim, **_write(args, dump_morphism(phi.matrix))}


def cmd_product(args):
    algs = [_bol(p) for p in args.algebras]
    P, projs = ideals.product(algs)
    checks = [_morphism_check(p, f"projection-{k + 1}") for k, p in enumerate(projs)]
    if args.via:
        C = _bol(args.via)
        if len(args.leg) != len(algs):
            raise UsageError(f"need {len(algs)} --leg maps, got {len(args.leg)}")
        cone = [_morphism(m, C, A) for m, A in zip(args.leg, algs)]
        checks.append(ideals.factor_limit(projs, cone)[1])
    return checks, {"dim": P.dim, **_write(args, dump_algebra(P))}


def _parallel_pair(args):
    S, T = _bol(args.source), _bol(args.target)
    return S, T, _morphism(args.f, S, T), _morphism(args.g, S, T)


def cmd_equalizer(args):
    S, T, f, g = _parallel_pair(args)
    E, incl = ideals.equalizer(f, g)
    checks = [
        _morphism_check(incl, "inclusion-morphism"),
        _equal_check("equalizes", (f @ incl).matrix, (g @ incl).matrix, "f o e = g o e"),
    ]
    if args.via:
        C = _bol(args.via)
        if len(args.leg) != 1:
            raise UsageError("equalizer takes exactly one --leg map")
        checks.append(ideals.factor_limit([incl], [_morphism(args.leg[0], C, S)])[1])
    return checks, {"dim": E.dim, "basis": _basis_text(E), **_write(args, dump_algebra(incl.source))}


def cmd_coequalizer(args):
    S, T, f, g = _parallel_pair(args)
    Q, p = ideals.coequalizer(f, g, args.mode)
    checks = [
        _morphism_check(p, "projection-morphism"),
        _equal_check("coequalizes", (p @ f).matrix, (p @ g).matrix, "p o f = p o g"),
    ]
    if args.via:
        C = _bol(args.via)
        if len(args.leg) != 1:
            raise UsageError("coequalizer takes exactly one --leg map")
        checks.append(ideals.factor_colimit([p], [_morphism(args.leg[0], T, C)])[1])
    return checks, {"dim": Q.dim, "mode": args.mode, **_write(args, dump_algebra(Q))}


def cmd_pder(args):
    B = _bol(args.algebra)
    sol = pder.pder_solve(B)
    bad = None
    for k, (D, z) in enumerate(sol.pairs()):
        if any(any(r) for r in pder.pair_residual(B, D, z)):
            bad = (k + 1,)
            break
    checks = [Check("basis-pairs-satisfy", bad is None, bad)]
    return checks, {"dim": sol.pair_space.dim, "basis": _basis_text(sol.pair_space)}


def cmd_companions(args):
    B = _bol(args.algebra)
    try:
        D = parse_matrix_rows(args.matrix)
    except ValueError as exc:
        raise UsageError(f"--matrix: {exc}") from None
    com = pder.companions_of(B, D)
    data = {"defined": com.defined}
    if com.defined:
        data["particular"] = [format_rational(x) for x in com.particular]
        data["homogeneous"] = _basis_text(com.homogeneous)
    return [Check("has-companion", com.defined, detail="D is a pseudo-derivation for some z")], data


def cmd_inner(args):
    B = _bol(args.algebra)
    S, ok = pder.inner_pder_span(B)
    return [Check("inner-in-pder", ok, detail="(D_ab, a.b) solves the pseudo-derivation system")], {"dim": S.dim}


def cmd_regrep(args):
    B = _bol(args.algebra)
    V = modules.regular_module(B)
    return modules.check_module(B, V).checks, {"moddim": V.mod_dim, **_write(args, dump_module(V))}


def cmd_modcheck(args):
    B = _bol(args.algebra)
    mods = [_module(p, B) for p in args.modules]
    V = mods[0]
    for W in mods[1:]:
        V = modules.direct_sum(V, W)
    return modules.check_module(B, V).checks, {"moddim": V.mod_dim, **_write(args, dump_module(V))}


def cmd_pcheck(args):
    B = _bol(args.algebra)
    V = _module(args.module, B)
    rep = modules.check_p_properties(B, V).extend(modules.check_prop_composite(B, V, args.form))
    return rep.checks, {"form": args.form}


def cmd_extension(args):
    B = _bol(args.algebra)
    res = modules.extension_algebra(B, _module(args.module, B), args.profile)
    return res.report.checks, {"dim": res.algebra.dim, **_write(args, dump_algebra(res.algebra))}


def cmd_dual(args):
    B = _bol(args.algebra)
    V = _module(args.module, B)
    W = duality.dual_module(B, V, args.strict)
    back = duality.dual_module(B, W, args.strict)
    return [Check("involution", back == V, detail="(V*)* = V")], {"strict": args.strict, **_write(args, dump_module(W))}


def cmd_opposite(args):
    B = _bol(args.algebra)
    if args.module:
        V = _module(args.module, B)
        W = duality.opposite_rep(B, V)
        checks = [Check("involution", duality.opposite_rep(B, W) == V)]
        return checks, _write(args, dump_module(W))
    O = alg.opposite(B, args.variant)
    rep = alg.check_axioms(O, args.profile)
    return rep.checks, {"variant": args.variant, **_write(args, dump_algebra(O))}


def cmd_identity(args):
    B = _bol(args.algebra)
    V = _module(args.module, B)
    if bool(args.expr_file) == bool(args.builtin):
        raise UsageError("give exactly one of --expr-file and --builtin")
    if args.builtin:
        bi = duality.BUILTINS[args.builtin]
        ident, derived, name = bi.identity, bi.derived_for(B), args.builtin
    else:
        ident, derived, name = duality.parse_identity(_read(args.expr_file)), None, "identity"
    if args.dual:
        ident, name = duality.dualize_identity(ident), name + "*"
    env = None
    if args.bind:
        env = {}
        for item in args.bind:
            sym, eq, val = item.partition("=")
            if not eq:
                raise UsageError(f"--bind expects name=vector, got {item!r}")
            try:
                env[sym.strip()] = parse_vector(val)
            except ValueError as exc:
                raise UsageError(f"--bind {sym}: {exc}") from None
    chk = duality.check_identity(B, V, ident, env=env, derived=derived, name=name)
    return [chk], {"identity": ident.to_text()}


def cmd_envelope(args):
    B = _bol(args.algebra)
    try:
        E = envelope.build_envelope(B, args.scheme)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = envelope.verify_envelope(E)
    data = {"total_dim": E.total.dim, "legend": E.legend(), "scheme": args.scheme}
    return rep.checks, {**data, **_write(args, dump_lie(E.total, E.legend()))}


def cmd_roundtrip(args):
    B = _bol(args.algebra)
    return envelope.roundtrip(B).checks, {"dim": B.dim}


def cmd_frompair(args):
    G = _lie(args.lie)
    Bs = _vectors(args.b, G.dim, "--b")
    Hs = _vectors(args.h, G.dim, "--h")
    B = alg.from_lie_pair(G, Bs, Hs)
    checks = [Check(name, True) for name in ("direct-sum", "bracket-meets-B", "triple-closure")]
    return checks, {"dim": B.dim, **_write(args, dump_algebra(B))}


# -- parser ------------------------------------------------------------------------------

# command -> (handler, library operations it exposes)
COMMANDS: dict[str, tuple[Callable, tuple[str, ...]]] = {
    "check": (cmd_check, ("check_axioms", "jacobi_check", "from_lie_algebra")),
    "lts": (cmd_lts, ("check_lts",)),
    "ideal": (cmd_ideal, ("is_ideal",)),
    "closure": (cmd_closure, ("ideal_closure",)),
    "quotient": (cmd_quotient, ("quotient",)),
    "morph": (cmd_morph, ("is_morphism",)),
    "kernel": (cmd_kernel, ("kernel_image",)),
    "iso": (cmd_iso, ("first_iso",)),
    "product": (cmd_product, ("product", "factor_limit")),
    "equalizer": (cmd_equalizer, ("equalizer",)),
    "coequalizer": (cmd_coequalizer, ("coequalizer", "factor_colimit")),
    "pder": (cmd_pder, ("pder_solve",)),
    "companions": (cmd_companions, ("companions_of",)),
    "inner": (cmd_inner, ("inner_pder_span",)),
    "regrep": (cmd_regrep, ("regular_module",)),
    "modcheck": (cmd_modcheck, ("check_module", "direct_sum")),
    "pcheck": (cmd_pcheck, ("check_p_properties", "check_prop_composite")),
    "extension": (cmd_extension, ("extension_algebra",)),
    "dual": (cmd_dual, ("dual_module",)),
    "opposite": (cmd_opposite, ("opposite", "opposite_rep")),
    "identity": (cmd_identity, ("parse_identity", "dualize_identity", "check_identity")),
    "envelope": (cmd_envelope, ("build_envelope", "verify_envelope")),
    "roundtrip": (cmd_roundtrip, ("roundtrip",)),
    "frompair": (cmd_frompair, ("from_lie_pair",)),
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("human", "machine"), default="human")

    out = _Parser(add_help=False)
    out.add_argument("--out", metavar="FILE", help="write the constructed object here")

    profile = _Parser(add_help=False)
    profile.add_argument("--profile", choices=alg.PROFILES, default="consistent")

    mode = _Parser(add_help=False)
    mode.add_argument("--mode", choices=("literal", "strong"), default="literal", help="ideal notion")

    vecs = _Parser(add_help=False)
    vecs.add_argument("--vec", action="append", default=[], metavar="Q,Q,...", help="spanning vector (repeatable)")

    mapfiles = _Parser(add_help=False)
    mapfiles.add_argument("source")
    mapfiles.add_argument("target")

    cone = _Parser(add_help=False)
    cone.add_argument("--via", metavar="ALG", help="apex of a cone/cocone to factor")
    cone.add_argument("--leg", action="append", default=[], metavar="MAP", help="cone/cocone leg (repeatable)")

    p = _Parser(prog="bolalg", description="Exact verification toolkit for Bol algebras.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, help_, parents=()):
        return sub.add_parser(name, help=help_, parents=[common, *parents])

    add("check", "Bol axioms (or Jacobi, for liealg files)", [profile]).add_argument("algebra")
    add("lts", "Lie-triple-system identities", [profile]).add_argument("algebra")
    add("ideal", "is the span of --vec an ideal", [mode, vecs]).add_argument("algebra")
    add("closure", "ideal generated by --vec", [mode, vecs]).add_argument("algebra")
    add("quotient", "quotient by the span of --vec", [mode, vecs, out]).add_argument("algebra")
    add("morph", "is MAP a morphism", [mapfiles]).add_argument("map")
    add("kernel", "kernel and image of MAP", [mapfiles]).add_argument("map")
    add("iso", "first isomorphism theorem for MAP", [mapfiles, mode, out]).add_argument("map")
    add("product", "direct product", [out, cone]).add_argument("algebras", nargs="+")

    q = add("equalizer", "equalizer of F and G", [mapfiles, out, cone])
    q.add_argument("f")
    q.add_argument("g")
    q = add("coequalizer", "coequalizer of F and G", [mapfiles, out, cone])
    q.add_argument("f")
    q.add_argument("g")
    q.add_argument("--mode", choices=("difference", "paper"), default="difference",
                   help="kill im(f-g) or im f + im g")

    add("pder", "pseudo-derivation pair space").add_argument("algebra")
    q = add("companions", "companion set of a linear map")
    q.add_argument("algebra")
    q.add_argument("--matrix", required=True, metavar="ROWS", help="rows separated by ';'")
    add("inner", "inner pseudo-derivations").add_argument("algebra")

    add("regrep", "regular module and its axioms", [out]).add_argument("algebra")
    q = add("modcheck", "module axioms (direct sum when several modules)", [out])
    q.add_argument("algebra")
    q.add_argument("modules", nargs="+")
    q = add("pcheck", "operator properties p1-p5 and the composite identity")
    q.add_argument("algebra")
    q.add_argument("module")
    q.add_argument("--form", choices=("literal", "derived"), default="derived")
    q = add("extension", "split extension B + V", [profile, out])
    q.add_argument("algebra")
    q.add_argument("module")

    q = add("dual", "dual module", [out])
    q.add_argument("algebra")
    q.add_argument("module")
    q.add_argument("--strict", action="store_true", help="right action of V* is the transposed left one")
    q = add("opposite", "opposite algebra, or opposite representation when MODULE is given", [profile, out])
    q.add_argument("algebra")
    q.add_argument("module", nargs="?")
    q.add_argument("--variant", choices=("section2", "theorem"), default="section2")
    q = add("identity", "check an operator identity on a module")
    q.add_argument("algebra")
    q.add_argument("module")
    q.add_argument("--expr-file", metavar="FILE")
    q.add_argument("--builtin", choices=sorted(duality.BUILTINS))
    q.add_argument("--dual", action="store_true", help="check the dualized identity")
    q.add_argument("--bind", action="append", metavar="SYM=Q,Q,...", help="bind a symbol (repeatable)")

    q = add("envelope", "enveloping Lie algebra", [out])
    q.add_argument("algebra")
    q.add_argument("--scheme", default="lts-standard")
    add("roundtrip", "rebuild the algebra from its envelope").add_argument("algebra")
    q = add("frompair", "Bol algebra from a Lie algebra split as B + h", [out])
    q.add_argument("lie")
    q.add_argument("--b", action="append", default=[], metavar="Q,Q,...", required=True)
    q.add_argument("--h", action="append", default=[], metavar="Q,Q,...")
    return p


def run_command(argv: list[str]) -> tuple[int, Report, str]:
    """Parse and execute; returns (exit code, report, output format)."""
    fmt = "machine" if "--format=machine" in argv or _flag_value(argv, "--format") == "machine" else "human"
    command = next((a for a in argv if a in COMMANDS), "bolalg")
    start = time.perf_counter()
    try:
        args = build_parser().parse_args(argv)
        fmt = args.format
        checks, data = COMMANDS[args.command][0](args)
        report = Report(args.command, tuple(checks), data, _elapsed(start))
    except PreconditionError as exc:
        report = Report(command, (Check(exc.condition, False, _witness(exc.witness), detail=exc.message),),
                        {}, _elapsed(start))
    except (BolalgError, ValueError) as exc:
        report = Report.error(command, str(exc), _elapsed(start))
    return report.exit_code, report, fmt


def _flag_value(argv, flag):
    try:
        return argv[argv.index(flag) + 1]
    except (ValueError, IndexError):
        return None


def _elapsed(start: float) -> float:
    return round(time.perf_counter() - start, 6)


def _witness(w):
    if w is None:
        return None
    return w if isinstance(w, tuple) else (w,)


# -- report rendering ---------------------------------------------------------------------


def _fmt_witness(w) -> str:
    if w is None:
        return "-"
    if isinstance(w, tuple):
        return "(" + ",".join(_fmt_witness(x) for x in w) + ")"
    return str(w)


def emit_report(report: Report, fmt: str = "human") -> str:
    if fmt == "machine":
        return json.dumps(report.to_dict(), indent=2) + "\n"
    if fmt != "human":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"command  {report.command}", f"status   {report.status}", f"timing   {report.timing:.6f}s"]
    if report.checks:
        rows = [("check", "verdict", "witness", "residual")]
        for c in report.checks:
            res = "-" if c.residual is None else " ".join(format_rational(x) for x in c.residual)
            rows.append((c.name, c.verdict, _fmt_witness(c.witness), res))
        widths = [max(len(r[k]) for r in rows) for k in range(3)]
        lines.append("")
        for r in rows:
            lines.append("  ".join(x.ljust(w) for x, w in zip(r, widths)) + "  " + r[3])
        details = [(c.name, c.detail) for c in report.checks if not c.passed and c.detail]
        for name, d in details:
            lines.append(f"  {name}: {d}")
    if report.data:
        lines.append("")
        width = max(len(k) for k in report.data)
        for k, v in report.data.items():
            shown = ", ".join(map(str, v)) if isinstance(v, list) else str(v)
            lines.append(f"{k.ljust(width)}  {shown}")
    return "\n".join(lines) + "\n"


def parse_report(text: str) -> Report:
    """Inverse of the machine format."""
    return Report.from_dict(json.loads(text))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    if not argv or argv[0] in ("-h", "--help"):
        build_parser().print_help()
        return 0 if argv else 2
    code, report, fmt = run_command(argv)
    text = emit_report(report, fmt)
    (sys.stdout if report.status != "error" or fmt == "machine" else sys.stderr).write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
