"""Command-line front end.

Usage: ``omcat GROUP VERB [options]``.  Exit status is 0 on success, 1 for a
domain error (bad input, violated precondition, failed check) and 2 when a
resource guard trips.  Errors are reported on stderr as one JSON object.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import os
import sys
from collections.abc import Callable
from dataclasses import dataclass, field

from . import algebra as alg
from .fixtures import FIXTURES, fixture
from .graded import ZERO, GradedMatrix
from .io import (
    FormatError,
    dump_json,
    load_json,
    matrix_from_json,
    mu_table_from_json,
    mu_table_to_json,
    om_from_json,
    om_to_json,
    program_from_json,
)
from .linalg import Field
from .om_construct import ConstructionError, RationalMatrix, realizable_om
from .om_core import (
    AxiomError,
    DimensionError,
    OrientedMatroid,
    ResourceError,
    check_axioms,
    dual,
    minor,
)
from .om_program import ConsistencyError, MuTable, NonEuclidean, Program, ProgramError
from .param_space import ParameterSpaceError, default_parameter_space

log = logging.getLogger("omcat")

FORMATS = ("text", "json", "csv", "dot")


class DomainError(Exception):
    """A check the user asked for came out negative."""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass
class Output:
    """Collects what a verb prints; written once at the end."""

    text: list[str] = field(default_factory=list)

    def line(self, s: str = "") -> None:
        self.text.append(s)

    def render(self) -> str:
        return "\n".join(self.text) + ("\n" if self.text else "")


# ---------------------------------------------------------------------------
# input loading


def _load_doc(args):
    if args.fixture and args.input:
        raise UsageError("give either --fixture or --input, not both")
    if args.input:
        return "input", load_json(args.input)
    if args.fixture:
        return "fixture", args.fixture
    raise UsageError("an input is required (--fixture NAME or --input PATH)")


def _program_from_matrix(doc) -> Program:
    rows, labels = matrix_from_json(doc)
    if labels is None:
        n = len(rows[0]) - 2
        labels = [str(i + 1) for i in range(n)] + ["g", "f"]
    return Program(realizable_om(RationalMatrix(rows), labels), name="matrix")


def _guard(P: Program, args) -> Program:
    if args.max_covectors is not None:
        P.max_covectors = args.max_covectors
    if args.max_topes is not None:
        P.max_topes = args.max_topes
    return P


def load_subject(args) -> Program | MuTable | OrientedMatroid:
    """A program, a bare mu table or (for ``om`` verbs) an oriented matroid."""
    kind, doc = _load_doc(args)
    if kind == "fixture":
        fx = fixture(doc, seed=args.seed)
        if fx.program is not None:
            return _guard(fx.program, args)
        if fx.mu_table is not None:
            return fx.mu_table
        raise DomainError(f"fixture {doc!r} carries no data: {fx.note}")
    if isinstance(doc, list):
        return mu_table_from_json(doc)
    if not isinstance(doc, dict):
        raise FormatError("input must be a JSON object or a list of mu-table rows")
    if "cocircuits" in doc:
        if "g" in doc or "f" in doc or {"g", "f"} <= set(map(str, doc.get("ground", ()))):
            return _guard(program_from_json(doc), args)
        return om_from_json(doc, validate=False)
    rows = doc.get("rows")
    if isinstance(rows, list) and rows and isinstance(rows[0], dict):
        return mu_table_from_json(doc)
    if isinstance(rows, list):
        return _guard(_program_from_matrix(doc), args)
    raise FormatError("unrecognised input: expected an oriented matroid, program, matrix or mu table")


def need_program(subject) -> Program:
    if not isinstance(subject, Program):
        kind = "a mu table" if isinstance(subject, MuTable) else "an oriented matroid without g and f"
        raise DomainError(f"this verb needs a full program, got {kind}")
    return subject


def need_om(subject) -> OrientedMatroid:
    if isinstance(subject, Program):
        return subject.om
    if isinstance(subject, OrientedMatroid):
        return subject
    raise DomainError("this verb needs an oriented matroid")


def parameter_space(P: Program, args):
    return default_parameter_space(P, args.seed, Field.parse(args.field))


# ---------------------------------------------------------------------------
# formatting helpers


def emit_matrix(out: Output, H: GradedMatrix, fmt: str) -> None:
    if fmt == "json":
        out.line(json.dumps(H.to_json()))
    elif fmt == "csv":
        out.text.append(H.to_csv().rstrip("\n"))
    else:
        out.line(str(H))


def emit_json(out: Output, obj) -> None:
    out.text.append(dump_json(obj).rstrip("\n"))


def emit_table(out: Output, header: list[str], rows: list[list], fmt: str) -> None:
    if fmt == "json":
        emit_json(out, [dict(zip(header, r)) for r in rows])
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        out.text.append(buf.getvalue().rstrip("\n"))
    else:
        widths = [max(len(str(x)) for x in [h] + [r[k] for r in rows]) for k, h in enumerate(header)]
        out.line("  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip())
        for r in rows:
            out.line("  ".join(str(x).ljust(w) for x, w in zip(r, widths)).rstrip())


def _labels(args, M: OrientedMatroid, spec: str | None) -> list[str]:
    if not spec:
        return []
    names = [s.strip() for s in spec.split(",") if s.strip()]
    bad = [s for s in names if s not in M.ground]
    if bad:
        raise DomainError(f"unknown elements {bad}; ground set is {list(M.ground)}")
    return names


# ---------------------------------------------------------------------------
# verbs


def om_check(args, out: Output) -> None:
    M = need_om(load_subject(args))
    report = check_axioms(M.cocircuits)
    chi_ok = M.chirotope is None or M.chirotope_consistent()
    if args.format == "json":
        emit_json(out, {"axioms": bool(report), "detail": str(report), "chirotope": chi_ok})
    else:
        out.line(f"axioms: {report}")
        if M.chirotope is not None:
            out.line(f"chirotope: {'consistent' if chi_ok else 'inconsistent with the cocircuits'}")
    if not report or not chi_ok:
        raise DomainError(str(report) if not report else "chirotope does not match the cocircuits")


def om_dual(args, out: Output) -> None:
    M = need_om(load_subject(args))
    emit_json(out, om_to_json(dual(M), with_chirotope=False))


def om_minor(args, out: Output) -> None:
    M = need_om(load_subject(args))
    dele = _labels(args, M, args.delete)
    con = _labels(args, M, args.contract)
    if set(dele) & set(con):
        raise DomainError(f"elements {sorted(set(dele) & set(con))} are both deleted and contracted")
    emit_json(out, om_to_json(minor(M, dele, con), with_chirotope=False))


def program_analyze(args, out: Output) -> None:
    P = need_program(load_subject(args))
    gen = P.is_generic()
    info = {
        "name": P.name,
        "n": P.n,
        "d": P.d,
        "generic": bool(gen),
    }
    if gen:
        info.update({
            "feasible": len(P.feasible),
            "bounded": len(P.bounded),
            "bounded_feasible": len(P.bounded_feasible),
            "bases": len(P.bases),
            "euclidean": bool(P.is_euclidean()),
        })
    else:
        info["reason"] = str(gen)
    if args.format == "json":
        emit_json(out, info)
    else:
        for k, v in info.items():
            out.line(f"{k}: {v}")
    if not gen:
        P.require_generic()


def program_graph(args, out: Output) -> None:
    P = need_program(load_subject(args))
    if args.format in ("dot", "text"):
        out.text.append(P.to_dot().rstrip("\n"))
        return
    G = P.graph
    edges = [[str(e.covector), str(e.tail) if e.tail else "", str(e.head) if e.head else ""] for e in G.edges]
    emit_table(out, ["edge", "tail", "head"], edges, args.format)


def program_mu(args, out: Output) -> None:
    s = load_subject(args)
    T = s if isinstance(s, MuTable) else need_program(s).mu_table()
    if args.format == "json":
        emit_json(out, mu_table_to_json(T))
        return
    emit_table(out, ["basis", "tope"], [list(r) for r in T.rows()], args.format)


def program_cone(args, out: Output) -> None:
    s = load_subject(args)
    T = s if isinstance(s, MuTable) else need_program(s).mu_table()
    cone = T.cone
    pairs = sorted([str(b), str(a)] for (b, a) in cone.pairs if a != b)
    info = {"pairs": pairs, "antisymmetric": cone.antisymmetric}
    if cone.antisymmetric:
        info["hasse"] = sorted([str(a), str(b)] for a, b in cone.hasse())
    else:
        info["cycle"] = [str(x) for x in cone.cycle]
    if isinstance(s, Program):
        info["euclidean"] = bool(s.is_euclidean())
    if args.format == "json":
        emit_json(out, info)
        return
    out.line(f"antisymmetric closure: {cone.antisymmetric}")
    if "euclidean" in info:
        out.line(f"euclidean: {info['euclidean']}")
    if cone.antisymmetric:
        out.line("hasse (upper > lower):")
        for a, b in info["hasse"]:
            out.line(f"  {a} > {b}")
    else:
        out.line("cycle: " + " -> ".join(info["cycle"]))
    out.line(f"strict pairs (lower < upper): {len(pairs)}")
    for b, a in pairs:
        out.line(f"  {b} < {a}")


def _table_or_program(s):
    if isinstance(s, (MuTable, Program)):
        return s
    raise DomainError("this verb needs a program or a mu table")


def algebra_hilbert(args, out: Output) -> None:
    s = _table_or_program(load_subject(args))
    if isinstance(s, Program):
        s.require_generic()
    target = s.dual if args.dual and isinstance(s, Program) else (s.dual() if args.dual else s)
    emit_matrix(out, alg.hilbert_matrix(target), args.format)


def algebra_koszul(args, out: Output) -> None:
    s = _table_or_program(load_subject(args))
    rep = alg.koszul_identity(s)
    if args.format == "json":
        emit_json(out, {"status": "PASS" if rep.ok else "FAIL",
                        "residual": rep.residual.to_json(), "xty_residual": rep.xty_residual.to_json()})
    else:
        out.line(f"koszul identity: {'PASS' if rep.ok else 'FAIL'}")
        out.line("residual H(q) H_dual(-q)^T - I:")
        out.line(str(rep.residual))
    if not rep.ok:
        raise DomainError("Koszul identity fails")


def algebra_kgroup(args, out: Output) -> None:
    s = _table_or_program(load_subject(args))
    T = s if isinstance(s, MuTable) else s.mu_table()
    H = alg.hilbert_matrix(T)
    topes = T.topes if not args.tope else [t for t in T.topes if str(t) == args.tope]
    if args.tope and not topes:
        raise DomainError(f"{args.tope} is not a bounded feasible tope")
    rows, ok = [], True
    for a in topes:
        cls = alg.kgroup_projective(T, a)
        exp = alg.expand_in_simples(T, cls)
        match = all(exp.get(b, ZERO) == H[a, b] for b in T.topes)
        ok &= match
        terms = " + ".join(f"({c})[V_{g}]" if str(c) != "1" else f"[V_{g}]"
                           for g, c in sorted(cls.items(), key=lambda kv: (kv[1].min_degree, str(kv[0]))))
        rows.append([str(a), len(cls), terms, "yes" if match else "no"])
    emit_table(out, ["tope", "standards", "class", "matches_H"], rows, args.format)
    if not ok:
        raise DomainError("standard-class expansion disagrees with the Hilbert matrix")


def algebra_selfdual(args, out: Output) -> None:
    P = need_program(load_subject(args))
    a, b = alg.self_dual_conditions(P)
    H = alg.hilbert_matrix(P)
    agree = a == b
    info = {"covers_infinite_subtope": [str(x) for x in a], "dual_faces_feasible": [str(x) for x in b],
            "agree": agree, "palindromic_rows": {str(x): alg.palindromic_row(H, x) for x in a}}
    if args.format == "json":
        emit_json(out, info)
    else:
        out.line("covers a subtope vanishing only on g: " + " ".join(info["covers_infinite_subtope"]))
        out.line("every dual cocircuit face feasible:   " + " ".join(info["dual_faces_feasible"]))
        out.line(f"conditions agree: {agree}")
        for x, p in info["palindromic_rows"].items():
            out.line(f"  row {x} palindromic: {p}")
    if not agree:
        raise DomainError("self-dual conditions disagree")


def algebra_oracle(args, out: Output) -> None:
    from .oracle import path_algebra_oracle

    P = need_program(load_subject(args))
    U = parameter_space(P, args)
    kw = {}
    if args.max_topes is not None:
        kw["max_topes"] = args.max_topes
    res = path_algebra_oracle(P, U, model=args.model, **kw)
    H = alg.hilbert_matrix(P)
    ok = res.agrees_with(H)
    if args.format == "json":
        emit_json(out, {"status": "PASS" if ok else "FAIL", "model": args.model, "dims": res.dims.to_json()})
    elif args.format == "csv":
        emit_matrix(out, res.dims, "csv")
    else:
        out.line(f"oracle ({args.model}) vs closed form: {'PASS' if ok else 'FAIL'}")
        out.line(str(res.dims))
    if not ok:
        raise DomainError("oracle dimensions differ from the closed form")


def algebra_center(args, out: Output) -> None:
    P = need_program(load_subject(args))
    U = parameter_space(P, args)
    r = alg.center_rank(P, U)
    info = {"center_rank": r, "bases": len(P.bases), "status": "PASS" if r == len(P.bases) else "FAIL"}
    if args.explicit:
        from .balgebra import b_algebra

        kw = {"max_topes": args.max_topes} if args.max_topes is not None else {}
        B = b_algebra(P, U, **kw)
        dims = B.center_dims()
        info["explicit_center"] = dims
        if sum(dims) != r:
            info["status"] = "FAIL"
    if args.format == "json":
        emit_json(out, info)
    else:
        for k, v in info.items():
            out.line(f"{k}: {v}")
    if info["status"] != "PASS":
        raise DomainError("center rank check failed")


def fixtures_list(args, out: Output) -> None:
    rows = []
    for name in FIXTURES:
        if name == "uniform(d,n)":
            rows.append([name, "random uniform program drawn with --seed"])
            continue
        fx = fixture(name)
        rows.append([name, fx.note or f"{len(fx.facts)} certified facts"])
    emit_table(out, ["fixture", "note"], rows, args.format)


def fixtures_verify(args, out: Output) -> None:
    names = args.names or [n for n in FIXTURES if n != "uniform(d,n)"]
    rows, ok = [], True
    for name in names:
        fx = fixture(name, seed=args.seed)
        for claim, good in fx.verify():
            ok &= good
            rows.append([fx.name, "PASS" if good else "FAIL", claim])
    emit_table(out, ["fixture", "status", "fact"], rows, args.format)
    if not ok:
        raise DomainError("a certified fact failed")


VERBS: dict[tuple[str, str], Callable] = {
    ("om", "check"): om_check,
    ("om", "dual"): om_dual,
    ("om", "minor"): om_minor,
    ("program", "analyze"): program_analyze,
    ("program", "graph"): program_graph,
    ("program", "mu"): program_mu,
    ("program", "cone"): program_cone,
    ("algebra", "hilbert"): algebra_hilbert,
    ("algebra", "koszul"): algebra_koszul,
    ("algebra", "kgroup"): algebra_kgroup,
    ("algebra", "selfdual"): algebra_selfdual,
    ("algebra", "oracle"): algebra_oracle,
    ("algebra", "center"): algebra_center,
    ("fixtures", "list"): fixtures_list,
    ("fixtures", "verify"): fixtures_verify,
}


def _common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--fixture", metavar="NAME", help="named fixture (see 'fixtures list')")
    p.add_argument("--input", metavar="PATH", help="JSON file: program, oriented matroid, matrix or mu table")
    p.add_argument("--seed", type=int, default=0, help="seed for random parameter spaces and fixtures")
    p.add_argument("--field", default="q", help="q for the rationals or pP for GF(P)")
    p.add_argument("--out", metavar="PATH", help="write the result here instead of stdout")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.add_argument("--max-covectors", type=int, default=None)
    p.add_argument("--max-topes", type=int, default=None)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="omcat", description="Oriented matroid programs and their graded algebras.")
    groups = ap.add_subparsers(dest="group", required=True, parser_class=_Parser)
    verbs: dict[str, argparse._SubParsersAction] = {}
    for (g, v) in VERBS:
        if g not in verbs:
            gp = groups.add_parser(g)
            verbs[g] = gp.add_subparsers(dest="verb", required=True, parser_class=_Parser)
        p = verbs[g].add_parser(v)
        _common(p)
        if (g, v) == ("om", "minor"):
            p.add_argument("--delete", default="", help="comma-separated labels")
            p.add_argument("--contract", default="", help="comma-separated labels")
        if (g, v) == ("om", "check"):
            p.add_argument("path", nargs="?", help="same as --input")
        if (g, v) == ("algebra", "hilbert"):
            p.add_argument("--dual", action="store_true", help="matrix of the dual program")
        if (g, v) == ("algebra", "kgroup"):
            p.add_argument("--tope", help="only this tope")
        if (g, v) == ("algebra", "oracle"):
            p.add_argument("--model", choices=("quadratic", "cube"), default="quadratic")
        if (g, v) == ("algebra", "center"):
            p.add_argument("--explicit", action="store_true", help="also solve for the center of B")
        if (g, v) == ("fixtures", "verify"):
            p.add_argument("names", nargs="*", help="fixtures to verify (default: all)")
    return ap


def _fail(kind: str, exc: BaseException, code: int) -> int:
    sys.stderr.write(json.dumps({"status": "error", "kind": kind, "reason": str(exc)}) + "\n")
    return code


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=os.environ.get("OMCAT_LOG", "WARNING").upper(),
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        return _fail("usage", exc, 1)
    if getattr(args, "path", None):
        if args.input:
            return _fail("usage", UsageError("give the input once"), 1)
        args.input = args.path
    out = Output()
    code = 0
    try:
        VERBS[(args.group, args.verb)](args, out)
    except ResourceError as exc:
        return _fail("resource", exc, 2)
    except DomainError as exc:
        code = _fail("check-failed", exc, 1)
    except (ProgramError, AxiomError, FormatError, NonEuclidean, ParameterSpaceError, ConsistencyError,
            ConstructionError, DimensionError, UsageError, KeyError, ValueError, OSError) as exc:
        if not out.text:
            return _fail(type(exc).__name__, exc, 1)
        code = _fail(type(exc).__name__, exc, 1)
    text = out.render()
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
