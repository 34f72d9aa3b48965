"""Named example programs with certified facts that are re-checked on demand."""

from __future__ import annotations

import re
from collections.abc import Callable
from dataclasses import dataclass, field
from importlib import resources

from .io import load_json, mu_table_from_json, program_from_json
from .om_construct import (
    ConstructionError,
    RationalMatrix,
    random_program,
    realizable_om,
)
from .om_core import SignVector
from .om_program import MuTable, Program

S = SignVector.from_str


@dataclass(frozen=True)
class Fact:
    claim: str
    source: str
    check: Callable[[], bool] = field(compare=False, repr=False)


@dataclass
class Fixture:
    name: str
    program: Program | None
    mu_table: MuTable | None
    facts: list[Fact]
    note: str = ""

    def verify(self) -> list[tuple[str, bool]]:
        out = []
        for fact in self.facts:
            try:
                ok = bool(fact.check())
            except Exception as exc:  # a crashing check is a failed check
                ok = False
                fact = Fact(f"{fact.claim} (raised {type(exc).__name__}: {exc})", fact.source, fact.check)
            out.append((fact.claim, ok))
        return out


def _data(name: str):
    return load_json(resources.files("omcat") / "data" / name)


# ---------------------------------------------------------------------------
# EFM(8)

EFM8_UP_SET = ["+++---", "++++--", "+++-+-", "+++--+", "-+++--", "+-+-+-", "++---+", "++++++"]
EFM8_BELOW_456 = {"346", "145", "256"}


def efm8_table() -> MuTable:
    return mu_table_from_json(_data("efm8_mu_table.json"))


def efm8_program() -> Program:
    return program_from_json(_data("efm8.json"))


def _efm8_table_facts(T: MuTable) -> list[Fact]:
    a = S("+++---")
    rows = dict(T.rows())
    return [
        Fact("20 rows, one per 3-subset of E_6", "example list",
             lambda: len(T.mu) == 20 and all(len(b) == 3 for b in T.mu)),
        Fact("contains (456, +++---) and (123, ++++++)", "example list",
             lambda: rows.get("456") == "+++---" and rows.get("123") == "++++++"),
        Fact("(125, ++-+++) stored for the duplicated 123 row", "typo repair",
             lambda: rows.get("125") == "++-+++"),
        Fact("up-set of +++--- has the 8 listed topes", "example up-set",
             lambda: {str(x) for x in T.up_set(a)} == set(EFM8_UP_SET)),
        Fact("topes strictly below mu(456) come from 346, 145, 256", "example text",
             lambda: {T.basis_label(T.basis_of(x)) for x in T.down_set(a) if x != a} == EFM8_BELOW_456),
        Fact("cone relation closure is not antisymmetric", "non-Euclidean",
             lambda: not T.cone.antisymmetric),
    ]


def _efm8_fixture() -> Fixture:
    T = efm8_table()
    P = efm8_program()
    P.name = "efm8"
    facts = _efm8_table_facts(T) + [
        Fact("reconstructed program is generic", "definition", lambda: bool(P.is_generic())),
        Fact("underlying matroid is uniform of rank 3 on 6 elements", "example",
             lambda: P.d == 3 and P.n == 6 and len(P.bases) == 20),
        Fact("mu reproduces the table", "reconstruction", lambda: P.mu == T.mu),
        Fact("G_P has a directed cycle", "non-Euclidean", lambda: not P.is_euclidean()),
    ]
    return Fixture("efm8", P, T, facts,
                   note="chirotope reconstructed from the mu table; see scripts/reconstruct_efm8.py")


def _efm8_table_fixture() -> Fixture:
    T = efm8_table()
    return Fixture("efm8_mu_table", None, T, _efm8_table_facts(T), note=T.provenance)


# ---------------------------------------------------------------------------
# planar fixtures

# Four lines x=0, y=0, y=1/2, x+y=1, written as (x, y, s) functionals on the
# cone over the plane.  The objective has negative weight on both coordinates.
FIGURE1_MATRIX = [
    ["0", "0", "1", "-1", "0", "1"],
    ["1", "1", "0", "-1", "0", "2"],
    ["0", "-1/2", "0", "1", "1", "0"],
]
FIGURE1_LABELS = ["1", "2", "3", "4", "g", "f"]
FIGURE1_NAMES = {"alpha": "++++", "beta": "+-++", "gamma": "+--+", "delta": "--++", "epsilon": "---+"}
FIGURE1_HASSE = {("alpha", "beta"), ("beta", "gamma"), ("beta", "delta"),
                 ("gamma", "epsilon"), ("delta", "epsilon")}

# Two points on a line: x >= 0 and x <= 1, objective x.
U12_MATRIX = [["1", "1", "0", "1"], ["0", "-1", "1", "0"]]
U12_LABELS = ["1", "2", "g", "f"]


def figure1_program() -> Program:
    P = Program(realizable_om(RationalMatrix(FIGURE1_MATRIX), FIGURE1_LABELS), name="figure1")
    P.matrix = RationalMatrix(FIGURE1_MATRIX)
    return P


def u1_2_line_program() -> Program:
    P = Program(realizable_om(RationalMatrix(U12_MATRIX), U12_LABELS), name="u1_2_line")
    P.matrix = RationalMatrix(U12_MATRIX)
    return P


def _figure1_fixture() -> Fixture:
    P = figure1_program()
    name = {S(v): k for k, v in FIGURE1_NAMES.items()}

    def hasse():
        cone = P.cone
        return cone.antisymmetric and {(name[a], name[b]) for a, b in cone.hasse()} == FIGURE1_HASSE

    facts = [
        Fact("generic", "definition", lambda: bool(P.is_generic())),
        Fact("5 bounded feasible topes", "figure", lambda: len(P.bounded_feasible) == 5),
        Fact("bounded feasible topes are alpha..epsilon",
             "figure", lambda: {str(a) for a in P.bounded_feasible} == set(FIGURE1_NAMES.values())),
        Fact("Hasse diagram alpha > beta > {gamma, delta} > epsilon", "introduction", hasse),
        Fact("Euclidean (rank 3)", "rank at most 3", P.is_euclidean),
    ]
    return Fixture("figure1", P, None, facts)


def _u12_fixture() -> Fixture:
    P = u1_2_line_program()
    facts = [
        Fact("generic", "definition", lambda: bool(P.is_generic())),
        Fact("3 feasible topes, 2 bounded", "hand count",
             lambda: len(P.feasible) == 3 and len(P.bounded_feasible) == 2),
        Fact("|P| = |B| = 2", "bijection", lambda: len(P.bounded_feasible) == len(P.bases) == 2),
        Fact("mu({1}) is the half-line --, mu({2}) the segment +-", "hand count",
             lambda: P.mu == {frozenset({0}): S("--"), frozenset({1}): S("+-")}),
    ]
    return Fixture("u1_2_line", P, None, facts)


def _uniform_fixture(d: int, n: int, seed: int) -> Fixture:
    from math import comb

    P = random_program(n, d, seed, uniform=True)
    P.name = f"uniform({d},{n})"
    facts = [
        Fact("generic", "construction", lambda: bool(P.is_generic())),
        Fact(f"{comb(n, d)} bases", "uniform matroid", lambda: len(P.bases) == comb(n, d)),
        Fact("|P| = |B|", "bijection", lambda: len(P.bounded_feasible) == len(P.bases)),
        Fact("mu(b) = mu_dual(complement of b)", "duality",
             lambda: P.mu_table().dual().mu == P.dual.mu),
    ]
    return Fixture(P.name, P, None, facts, note=f"seed {seed}")


def _vamos_fixture() -> Fixture:
    return Fixture(
        "vamos_note", None, None, [],
        note="The Vamos matroid is not orientable, so it yields no program; "
             "listed only as a pointer that the underlying matroid must be orientable.",
    )


FIXTURES = ("efm8_mu_table", "efm8", "figure1", "u1_2_line", "uniform(d,n)", "vamos_note")

_UNIFORM = re.compile(r"uniform\((\d+),\s*(\d+)\)$")


def fixture(name: str, seed: int = 0) -> Fixture:
    """Load a named fixture.  ``uniform(d,n)`` draws a random program with ``seed``."""
    simple = {
        "efm8_mu_table": _efm8_table_fixture,
        "efm8": _efm8_fixture,
        "figure1": _figure1_fixture,
        "u1_2_line": _u12_fixture,
        "vamos_note": _vamos_fixture,
    }
    if name in simple:
        return simple[name]()
    m = _UNIFORM.match(name.replace(" ", ""))
    if m:
        return _uniform_fixture(int(m.group(1)), int(m.group(2)), seed)
    raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")


def program_fixtures() -> list[Program]:
    """The fixtures that carry a full program (EFM(8), figure 1, the 2-point line)."""
    return [efm8_program(), figure1_program(), u1_2_line_program()]


__all__ = ["FIXTURES", "ConstructionError", "Fact", "Fixture", "fixture", "program_fixtures"]
