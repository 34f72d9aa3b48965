import csv
import io
import json
from fractions import Fraction

import sympy
from hypothesis import given
from hypothesis import strategies as st
from sympy.parsing.sympy_parser import (
    convert_xor,
    implicit_multiplication,
    parse_expr,
    standard_transformations,
)

from omcat.graded import ONE, ZERO, GradedMatrix, LaurentPoly, from_graded_dims, q_power
from omcat.om_core import SignVector

q = sympy.Symbol("q")
POINTS = [Fraction(2), Fraction(-3), Fraction(1, 2), Fraction(-5, 7)]

polys = st.builds(LaurentPoly, st.integers(-4, 4), st.lists(st.integers(-5, 5), max_size=5))


def parse(text: str):
    rules = standard_transformations + (implicit_multiplication, convert_xor)
    return parse_expr(text, local_dict={"q": q}, transformations=rules)


def as_sympy(p: LaurentPoly):
    return parse(str(p))


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a and a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a and a - a == ZERO


@given(polys, polys)
def test_arithmetic_matches_evaluation(a, b):
    for x in POINTS:
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)
        assert (a - b).evaluate(x) == a.evaluate(x) - b.evaluate(x)
        assert a.substitute_neg().evaluate(x) == a.evaluate(-x)


@given(polys)
def test_printed_form_parses_back(a):
    assert sympy.expand(as_sympy(a) - sum(c * q**k for k, c in a.to_dict().items())) == 0


@given(polys)
def test_normal_form(a):
    assert a == LaurentPoly.from_dict(a.to_dict())
    if not a.is_zero():
        assert a.coeffs[0] != 0 and a.coeffs[-1] != 0
    assert a.at_one() == a.evaluate(1)


def test_palindromes_and_printing():
    p = LaurentPoly.from_dict({1: 1, 3: 2, 5: 1})
    assert p.is_palindromic() and p.is_palindromic(6) and not p.is_palindromic(5)
    assert str(p) == "q + 2q^3 + q^5"
    assert str(LaurentPoly.from_dict({-2: -1, 0: 3})) == "-q^(-2) + 3"
    assert str(ZERO) == "0"
    assert from_graded_dims([1, 2, 1], shift=1) == p
    assert q_power(3, -2) == LaurentPoly(3, [-2])
    assert LaurentPoly(5, [0, 0]) == ZERO and ZERO.max_degree is None


ORDER = [SignVector.from_str(s) for s in ("+-", "--", "++")]
entries = st.lists(polys, min_size=9, max_size=9).map(
    lambda xs: GradedMatrix(ORDER, [xs[0:3], xs[3:6], xs[6:9]]))


@given(entries, entries)
def test_matrix_product_matches_evaluation(A, B):
    C = A @ B
    x = Fraction(3, 2)
    for i in range(3):
        for j in range(3):
            assert C[i, j].evaluate(x) == sum(A[i, k].evaluate(x) * B[k, j].evaluate(x) for k in range(3))
    assert (A @ B).T == B.T @ A.T
    assert A @ GradedMatrix.identity(ORDER) == A


@given(entries)
def test_json_and_csv_export(A):
    assert GradedMatrix.from_json(json.loads(json.dumps(A.to_json()))) == A
    rows = list(csv.reader(io.StringIO(A.to_csv())))
    assert rows[0] == ["", "+-", "--", "++"]
    assert [r[0] for r in rows[1:]] == ["+-", "--", "++"]
    assert all(sympy.expand(as_sympy(A[i, j]) - parse(rows[i + 1][j + 1])) == 0
               for i in range(3) for j in range(3))


def test_matrix_queries():
    A = GradedMatrix.build(ORDER, lambda a, b: q_power(2) if a == b else ZERO)
    assert A.is_symmetric() and not A.is_identity() and A.max_degree() == 2
    assert A.at_one() == [[1, 0, 0], [0, 1, 0], [0, 0, 1]] and A.total_at_one() == 3
    assert A[ORDER[1], ORDER[1]] == A[1, 1] == q_power(2)
    assert (A - A).is_zero()
