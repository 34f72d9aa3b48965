import json

import pytest
from suite import efm8_mu, figure1

from omcat.io import (
    FormatError,
    dump_json,
    load_json,
    matrix_from_json,
    matrix_to_json,
    mu_table_from_json,
    mu_table_to_json,
    om_from_json,
    om_to_json,
    program_from_json,
    program_to_json,
)
from omcat.om_core import AxiomError, uniform


def test_om_round_trip(tmp_path):
    M = uniform(3, 6)
    path = tmp_path / "m.json"
    dump_json(om_to_json(M), path)
    N = om_from_json(load_json(path))
    assert N == M and N.chirotope == M.chirotope


def test_program_round_trip():
    P = figure1()
    Q = program_from_json(json.loads(dump_json(program_to_json(P))))
    assert Q == P and Q.mu == P.mu


def test_mu_table_round_trip():
    T = efm8_mu()
    U = mu_table_from_json(mu_table_to_json(T))
    assert U.mu == T.mu
    assert mu_table_from_json({"labels": list(T.labels), "rows": mu_table_to_json(T)}).mu == T.mu


def test_matrix_round_trip():
    doc = matrix_to_json([["1/2", 0], [3, "-4/6"]], ["a", "b"])
    assert doc == {"rows": [["1/2", "0"], ["3", "-2/3"]], "labels": ["a", "b"]}
    rows, labels = matrix_from_json(doc)
    assert labels == ["a", "b"] and str(rows[1][1]) == "-2/3"


@pytest.mark.parametrize("doc", [
    {"ground": ["a"]},
    {"ground": ["a", "b"], "cocircuits": ["+"]},
    {"ground": ["a", "b"], "cocircuits": ["+x"]},
    {"ground": ["a", "b"], "cocircuits": ["+0", "-0"], "chirotope": {"c": "+"}},
    {"ground": ["a", "b"], "cocircuits": ["+0", "-0"], "chirotope": {"a": "?"}},
])
def test_malformed_oriented_matroids(doc):
    with pytest.raises(FormatError):
        om_from_json(doc)


def test_axiom_failure_on_load():
    with pytest.raises(AxiomError):
        om_from_json({"ground": ["a", "b"], "cocircuits": ["+0"]})
    assert om_from_json({"ground": ["a", "b"], "cocircuits": ["+0"]}, validate=False).n == 2


def test_inconsistent_chirotope():
    doc = om_to_json(uniform(2, 3))
    doc["chirotope"]["12"] = "-"
    with pytest.raises(FormatError):
        om_from_json(doc)


@pytest.mark.parametrize("doc", [[], [{"basis": [1]}], [{"basis": [9], "tope": "+"}],
                                 [{"basis": [1], "tope": "+-"}, {"basis": [1], "tope": "--"}]])
def test_malformed_mu_tables(doc):
    with pytest.raises(FormatError):
        mu_table_from_json(doc)


def test_bad_json_and_matrix(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text("{nope")
    with pytest.raises(FormatError):
        load_json(p)
    with pytest.raises(FormatError):
        matrix_from_json([["x"]])
