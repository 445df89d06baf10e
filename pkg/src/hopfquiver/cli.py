"""Command-line interface.

Every command prints one JSON document.  Exit status: 0 on success, 1 when a
verification fails (or an algebra is rejected), 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path as FsPath

from . import __version__
from .bicharacter import (Bicharacter, default_conductor, enumerate_bicharacters,
                          enumerate_skew_bicharacters, trivial_bicharacter)
from .errors import HopfQuiverError, InfiniteDimensional, NotConnected
from .groups import parse_group
from .path_hopf import PathHopfAlgebra, verify_graded_bialgebra
from .pbw import (PBWAlgebra, Presentation, c2_presentation, check_confluence, classify,
                  closure_dimension, dimension, e_presentation, format_monomial, gr_embed_check,
                  h_presentation, normalize, parse_word, verify_hopf)
from .quiver import build_quiver, parse_ram
from .rform import RForm, check_coquasi, check_cotriangular, solve_rforms
from .scalar import scalar_from_json, scalar_to_json

GRAMMAR_VERSION = 1


class UsageError(Exception):
    pass


# context --------------------------------------------------------------------------


def _load_json(text: str):
    """Inline JSON or a path to a JSON file."""
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        return json.loads(text)
    p = FsPath(text)
    if not p.exists():
        raise UsageError(f"no such file: {text}")
    return json.loads(p.read_text())


def _context(args, need_ram: bool = True):
    spec = _load_json(args.spec) if getattr(args, "spec", None) else {}
    gtext = args.group or spec.get("group")
    if not gtext:
        raise UsageError("--group (or --spec) is required")
    G = parse_group(gtext)
    ram_text = args.ram or spec.get("ram")
    if need_ram and not ram_text:
        raise UsageError("--ram (or --spec) is required")
    R = parse_ram(G, ram_text) if ram_text else None
    N = args.conductor or spec.get("conductor")
    B = _bichar(args, spec, G, N)
    max_len = args.max_len if args.max_len is not None else spec.get("max_len", 3)
    return G, R, B, max_len


def _bichar(args, spec, G, N):
    if getattr(args, "bichar", None):
        B = Bicharacter.from_json(_load_json(args.bichar))
    elif "bichar" in spec:
        B = Bicharacter.from_json(spec["bichar"])
    else:
        lam = args.lam if getattr(args, "lam", None) is not None else spec.get("lambda")
        if getattr(args, "trivial_bichar", False):
            lam = None
        N = int(N) if N else default_conductor(G)
        if lam is None or int(lam) == 1:
            return trivial_bicharacter(G, N)
        if int(lam) != -1:
            raise UsageError("--lambda must be 1 or -1")
        if N % 2:
            raise UsageError(f"--lambda -1 needs an even conductor, got {N}")
        k = G.rank
        return Bicharacter(G, N, tuple(tuple(N // 2 if u == v else 0 for v in range(k)) for u in range(k)))
    if B.group != G:
        raise UsageError("bicharacter group differs from --group")
    if N and int(N) != B.conductor:
        B = B.with_conductor(int(N))
    return B


def _algebra(G, R, B):
    return PathHopfAlgebra(build_quiver(G, R), B)


def _parse_algebra(text: str) -> Presentation:
    """C2:n, E:n:m, H:m:n:q=<value> with value -1, 1, zetaN or zetaN^k."""
    parts = text.split(":")
    try:
        if parts[0] == "C2" and len(parts) == 2:
            return c2_presentation(int(parts[1]))
        if parts[0] == "E" and len(parts) == 3:
            return e_presentation(int(parts[1]), int(parts[2]))
        if parts[0] == "H" and len(parts) in (3, 4):
            m, n = int(parts[1]), int(parts[2])
            q = parts[3] if len(parts) == 4 else "q=-1"
            q = q[2:] if q.startswith("q=") else q
            import math

            N = math.lcm(m, n)
            if q == "-1":
                N = math.lcm(N, 2)
                return h_presentation(m, n, N // 2, N)
            if q == "1":
                return h_presentation(m, n, 0, N)
            mm = re.fullmatch(r"zeta(\d+)(?:\^(-?\d+))?", q)
            if mm:
                order, k = int(mm.group(1)), int(mm.group(2) or 1)
                N = math.lcm(N, order)
                return h_presentation(m, n, (k * (N // order)) % N, N)
    except ValueError as exc:
        raise UsageError(f"bad --algebra {text!r}: {exc}") from exc
    raise UsageError(f"bad --algebra {text!r}; expected C2:n, E:n:m or H:m:n:q=...")


def _presentation(args) -> Presentation:
    if getattr(args, "presentation", None):
        return Presentation.from_json(_load_json(args.presentation))
    if getattr(args, "algebra", None):
        return _parse_algebra(args.algebra)
    G, R, B, _ = _context(args)
    return classify(G, R, B)


def _vector_json(H, u) -> list:
    return H.format_vector(u)


# commands --------------------------------------------------------------------------


def cmd_quiver(args):
    G, R, B, _ = _context(args)
    Q = build_quiver(G, R)
    out = {
        "group": str(G),
        "ram": [{"element": G.format_element(g), "mult": m} for g, m in R.support],
        "arrow_rule": "R_g arrows x -> g x at every vertex x",
        "out_degree": Q.out_degree(),
        "connected": Q.is_connected(),
    }
    if G.is_finite():
        out["vertices"] = [G.format_element(x) for x in G.elements()]
        out["components"] = [[G.format_element(x) for x in c] for c in Q.connected_components()]
    return 0, out


def cmd_bichars(args):
    G = parse_group(args.group or "")
    N = args.conductor
    if args.skew:
        Bs = enumerate_skew_bicharacters(G, N)
    else:
        Bs = enumerate_bicharacters(G, N)
    return 0, {"count": len(Bs), "bichars": [B.to_json() for B in Bs]}


def cmd_mult(args):
    G, R, B, _ = _context(args)
    H = _algebra(G, R, B)
    a, b = H.quiver.parse_path(args.a), H.quiver.parse_path(args.b)
    prod = H.mul(H.vec(a), H.vec(b))
    return 0, {"a": H.format_key(a), "b": H.format_key(b), "product": _vector_json(H, prod)}


def cmd_coproduct(args):
    G, R, B, _ = _context(args)
    H = _algebra(G, R, B)
    p = H.quiver.parse_path(args.p)
    terms = sorted(H.basis_coproduct(p).items(), key=lambda kc: (len(kc[0][1].steps), kc[0]))
    return 0, {"path": H.format_key(p),
               "coproduct": [{"left": H.format_key(l), "right": H.format_key(r), "coeff": scalar_to_json(c)}
                             for (l, r), c in terms]}


def cmd_antipode(args):
    G, R, B, _ = _context(args)
    H = _algebra(G, R, B)
    p = H.quiver.parse_path(args.p)
    return 0, {"path": H.format_key(p), "antipode": _vector_json(H, H.antipode_path(p))}


def _report(rep):
    return (0 if rep.ok else 1), rep.to_json()


def cmd_check_bialgebra(args):
    G, R, B, L = _context(args)
    return _report(verify_graded_bialgebra(build_quiver(G, R), B, L))


def _rform_and_ctx(args):
    if getattr(args, "presentation", None) or getattr(args, "algebra", None):
        P = _presentation(args)
        ctx = PBWAlgebra(P)
        L = args.max_len
        parse_key = lambda s: _monomial_literal(P, s)
        # --trivial-bichar replaces the degree-0 part of the form, not the algebra
        B = trivial_bicharacter(P.group, P.bichar.conductor) if args.trivial_bichar else P.bichar
    else:
        G, R, B, L = _context(args)
        ctx = _algebra(G, R, B)
        parse_key = ctx.quiver.parse_path
    if args.rform:
        data = _load_json(args.rform)
        B0 = Bicharacter.from_json(data["bichar"]) if "bichar" in data else B
        table = {}
        for row in data.get("higher", []):
            table[(parse_key(row["a"]), parse_key(row["b"]))] = scalar_from_json(row["value"], B0.conductor)
        if "values" in data:
            R = RForm(B0, table).substitute({k: scalar_from_json(v, B0.conductor)
                                              for k, v in data["values"].items()})
        else:
            R = RForm(B0, table)
    else:
        R = RForm(B)
    return ctx, R, L


def _monomial_literal(P, text):
    lc = normalize(P, parse_word(P, text)) if text.strip() not in ("e", "1") else {P.unit(): 1}
    if len(lc) != 1 or list(lc.values())[0] != 1:
        raise UsageError(f"{text!r} is not a PBW basis monomial")
    return next(iter(lc))


def cmd_check_coquasi(args):
    ctx, R, L = _rform_and_ctx(args)
    return _report(check_coquasi(ctx, R, L))


def cmd_check_cotriangular(args):
    ctx, R, L = _rform_and_ctx(args)
    return _report(check_cotriangular(ctx, R, L))


def cmd_rforms(args):
    P = _presentation(args)
    fam = solve_rforms(P)
    return 0, fam.to_json()


def cmd_classify(args):
    G, R, B, _ = _context(args)
    try:
        P = classify(G, R, B)
    except InfiniteDimensional as exc:
        return 1, {"accepted": False, "error": "InfiniteDimensional", "generator": exc.generator,
                   "reason": str(exc)}
    except NotConnected as exc:
        return 1, {"accepted": False, "error": "NotConnected", "reason": str(exc)}
    return 0, {"accepted": True, "presentation": P.to_json(),
               "relations": [label for label, _ in P.labelled_relations()]}


def cmd_normalize(args):
    P = _presentation(args)
    lc = normalize(P, parse_word(P, args.word))
    items = sorted(lc.items(), key=lambda kc: (sum(kc[0].sigma), kc[0]))
    return 0, {"word": args.word,
               "normal_form": [{"monomial": format_monomial(P, m), "coeff": scalar_to_json(c)} for m, c in items]}


def cmd_confluence(args):
    return _report(check_confluence(_presentation(args)))


def cmd_verify_hopf(args):
    return _report(verify_hopf(_presentation(args)))


def cmd_dim(args):
    P = _presentation(args)
    d = dimension(P)
    out = {"dimension": d}
    if d <= 128:
        out["closure"] = closure_dimension(P)
    return 0, out


def cmd_gr_embed(args):
    P = _presentation(args)
    return _report(gr_embed_check(P, args.max_len if args.max_len is not None else 2))


COMMANDS = {
    "quiver": cmd_quiver,
    "bichars": cmd_bichars,
    "mult": cmd_mult,
    "coproduct": cmd_coproduct,
    "antipode": cmd_antipode,
    "check-bialgebra": cmd_check_bialgebra,
    "check-coquasi": cmd_check_coquasi,
    "check-cotriangular": cmd_check_cotriangular,
    "rforms": cmd_rforms,
    "classify": cmd_classify,
    "normalize": cmd_normalize,
    "confluence": cmd_confluence,
    "verify-hopf": cmd_verify_hopf,
    "dim": cmd_dim,
    "gr-embed": cmd_gr_embed,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--group")
    common.add_argument("--ram")
    common.add_argument("--conductor", type=int)
    common.add_argument("--max-len", dest="max_len", type=int)
    common.add_argument("--json-out", dest="json_out")
    common.add_argument("--spec", help="context JSON: group, ram, bichar or lambda, conductor, max_len")
    common.add_argument("--lambda", dest="lam", type=int, help="R(g,g) = +1 or -1 on every generator")
    common.add_argument("--trivial-bichar", dest="trivial_bichar", action="store_true")
    common.add_argument("--bichar", help="bicharacter JSON (inline or file)")
    common.add_argument("--presentation", help="presentation JSON (inline or file)")
    common.add_argument("--algebra", help="C2:n, E:n:m or H:m:n:q=zeta4")

    parser = _Parser(prog="hopfquiver", parents=[common])
    parser.add_argument("--version", action="version", version=f"hopfquiver {__version__}")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "bichars":
            sp.add_argument("--skew", action="store_true")
        elif name == "mult":
            sp.add_argument("--a", required=True)
            sp.add_argument("--b", required=True)
        elif name in ("coproduct", "antipode"):
            sp.add_argument("--p", required=True)
        elif name in ("check-coquasi", "check-cotriangular"):
            sp.add_argument("--rform")
        elif name == "normalize":
            sp.add_argument("--word", required=True)
    return parser


def _merge_globals(ns: argparse.Namespace, argv: list[str]) -> argparse.Namespace:
    # options given before the subcommand are shadowed by the subparser defaults; reparse them
    pre = build_parser().parse_known_args(argv[: argv.index(ns.command)] if ns.command in argv else [])[0]
    for k, v in vars(pre).items():
        if k != "command" and v not in (None, False) and getattr(ns, k, None) in (None, False):
            setattr(ns, k, v)
    return ns


def run(argv: list[str] | None = None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdout = stdout or sys.stdout
    command = next((a for a in argv if a in COMMANDS), None)
    try:
        args = build_parser().parse_args(argv)
        if not args.command:
            raise UsageError("a subcommand is required: " + ", ".join(COMMANDS))
        args = _merge_globals(args, argv)
        command = args.command
        code, payload = COMMANDS[command](args)
    except (UsageError, HopfQuiverError, ValueError, KeyError, json.JSONDecodeError) as exc:
        payload = {"error": type(exc).__name__, "message": str(exc)}
        code = 2
        args = None
    doc = {"tool": "hopfquiver", "version": __version__, "grammar": GRAMMAR_VERSION,
           "command": command, "exit": code, "result": payload}
    text = json.dumps(doc, indent=2, ensure_ascii=False)
    print(text, file=stdout)
    out_file = getattr(args, "json_out", None) if args is not None else None
    if out_file:
        FsPath(out_file).write_text(text + "\n")
    return code


def main() -> None:
    sys.exit(run())
