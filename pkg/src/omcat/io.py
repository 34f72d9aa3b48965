"""JSON readers and writers for oriented matroids, programs, mu tables and
rational matrices."""

from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path

from .linalg import format_rational, parse_rational
from .om_core import AxiomError, OrientedMatroid, SignVector, check_axioms, sign_key
from .om_program import MuTable, Program


class FormatError(ValueError):
    """Malformed input document."""


def load_json(path) -> object:
    try:
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path}: {exc}") from exc


def dump_json(obj, path=None) -> str:
    text = json.dumps(obj, indent=1, sort_keys=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _key(labels: Sequence[str], idx: Sequence[int]) -> str:
    names = [labels[i] for i in idx]
    return "".join(names) if all(len(s) == 1 for s in labels) else ",".join(names)


def _parse_key(labels: Sequence[str], key: str) -> tuple[int, ...]:
    parts = key.split(",") if "," in key or not all(len(s) == 1 for s in labels) else list(key)
    try:
        return tuple(labels.index(p) for p in parts)
    except ValueError:
        raise FormatError(f"chirotope key {key!r} uses unknown labels") from None


_SIGN = {"+": 1, "-": -1, "0": 0, 1: 1, -1: -1, 0: 0}


def om_to_json(M: OrientedMatroid, with_chirotope: bool = True) -> dict:
    out = {
        "ground": list(M.ground),
        "cocircuits": [str(y) for y in sorted(M.cocircuits, key=sign_key)],
    }
    if with_chirotope and M.chirotope is not None:
        out["chirotope"] = {
            _key(M.ground, t): "+" if s > 0 else "-" if s < 0 else "0"
            for t, s in sorted(M.chirotope.items())
        }
    return out


def om_from_json(doc: dict, validate: bool = True) -> OrientedMatroid:
    if not isinstance(doc, dict) or "ground" not in doc or "cocircuits" not in doc:
        raise FormatError("oriented matroid JSON needs 'ground' and 'cocircuits'")
    ground = [str(x) for x in doc["ground"]]
    cocs = []
    for s in doc["cocircuits"]:
        if len(s) != len(ground):
            raise FormatError(f"cocircuit {s!r} has length {len(s)}, ground has {len(ground)}")
        try:
            cocs.append(SignVector.from_str(s))
        except ValueError as exc:
            raise FormatError(str(exc)) from exc
    chi = None
    if "chirotope" in doc:
        chi = {}
        for k, v in doc["chirotope"].items():
            idx = _parse_key(ground, k)
            if list(idx) != sorted(idx):
                raise FormatError(f"chirotope key {k!r} must list elements in ground order")
            if v not in _SIGN:
                raise FormatError(f"bad chirotope sign {v!r}")
            chi[idx] = _SIGN[v]
    M = OrientedMatroid(ground, cocs, chirotope=chi)
    if validate:
        report = check_axioms(M.cocircuits)
        if not report:
            raise AxiomError(report)
        if chi is not None and not M.chirotope_consistent():
            raise FormatError("chirotope does not match the cocircuits")
    return M


def program_to_json(P: Program) -> dict:
    out = om_to_json(P.om)
    out["g"] = P.g_label
    out["f"] = P.f_label
    return out


def program_from_json(doc: dict, **kwargs) -> Program:
    M = om_from_json(doc)
    return Program(M, g=doc.get("g", "g"), f=doc.get("f", "f"), **kwargs)


def mu_table_to_json(T: MuTable) -> list:
    rows = []
    for b, a in sorted(T.mu.items(), key=lambda kv: sorted(kv[0])):
        rows.append({"basis": [_maybe_int(T.labels[i]) for i in sorted(b)], "tope": str(a)})
    return rows


def _maybe_int(s: str):
    return int(s) if s.isdigit() else s


def mu_table_from_json(doc, labels: Sequence[str] | None = None, provenance: str = "") -> MuTable:
    if isinstance(doc, dict):
        labels = labels or doc.get("labels")
        provenance = provenance or doc.get("provenance", "")
        rows = doc.get("rows", [])
    else:
        rows = doc
    if not rows:
        raise FormatError("empty mu table")
    for r in rows:
        if not isinstance(r, dict) or not isinstance(r.get("tope"), str) or not isinstance(r.get("basis"), list):
            raise FormatError(f"mu-table rows need 'basis' (list) and 'tope' (string), got {r!r}")
    n = len(rows[0]["tope"])
    labels = [str(x) for x in (labels or range(1, n + 1))]
    mu = {}
    for r in rows:
        try:
            b = frozenset(labels.index(str(x)) for x in r["basis"])
            a = SignVector.from_str(r["tope"])
        except (KeyError, ValueError) as exc:
            raise FormatError(f"bad mu-table row {r!r}") from exc
        if b in mu:
            raise FormatError(f"basis {r['basis']} listed twice")
        mu[b] = a
    return MuTable(tuple(labels), mu, provenance)


def matrix_to_json(rows, labels: Sequence[str] | None = None) -> dict:
    out = {"rows": [[format_rational(parse_rational(x)) for x in r] for r in rows]}
    if labels is not None:
        out["labels"] = list(labels)
    return out


def matrix_from_json(doc) -> tuple[list[list], list[str] | None]:
    rows = doc["rows"] if isinstance(doc, dict) else doc
    try:
        conv = [[parse_rational(x) for x in r] for r in rows]
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise FormatError(f"bad matrix entry: {exc}") from exc
    labels = doc.get("labels") if isinstance(doc, dict) else None
    return conv, labels
