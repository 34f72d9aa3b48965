"""Exact linear algebra over the rationals or a prime field.

Dense determinants, ranks and kernels go through sympy's ``DomainMatrix``.
Quotient-space bookkeeping (incremental echelon forms over sparse vectors)
is done here because the graded computations need to add rows one at a time
and reduce vectors against the current span.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from fractions import Fraction

from sympy import GF, QQ
from sympy.polys.matrices import DomainMatrix


def parse_rational(x) -> Fraction:
    """Accept ints, Fractions and strings such as ``"3"``, ``"-1/2"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not matrix entries")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floating point entries are not accepted; use 'p/q' strings")
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Field:
    """Either the rationals (``p == 0``) or the prime field of order ``p``."""

    p: int = 0

    @classmethod
    def parse(cls, spec: str | None) -> Field:
        if spec is None or spec in ("q", "Q", "QQ"):
            return cls(0)
        s = spec.lstrip("pP")
        p = int(s)
        if p < 2 or any(p % k == 0 for k in range(2, int(p**0.5) + 1)):
            raise ValueError(f"{p} is not prime")
        return cls(p)

    @property
    def is_rational(self) -> bool:
        return self.p == 0

    def __str__(self) -> str:
        return "QQ" if self.p == 0 else f"GF({self.p})"

    def convert(self, x):
        x = parse_rational(x)
        if self.p == 0:
            return x
        den = x.denominator % self.p
        if den == 0:
            raise ZeroDivisionError(f"denominator of {x} vanishes mod {self.p}")
        return (x.numerator * pow(den, -1, self.p)) % self.p

    def norm(self, x):
        return x if self.p == 0 else x % self.p

    def inv(self, x):
        if self.p == 0:
            return 1 / Fraction(x)
        return pow(x, -1, self.p)

    @property
    def domain(self):
        return QQ if self.p == 0 else GF(self.p)

    def matrix(self, rows: Sequence[Sequence]) -> DomainMatrix:
        rows = [[self.convert(x) for x in r] for r in rows]
        dom = self.domain
        ncols = len(rows[0]) if rows else 0
        return DomainMatrix([[dom.convert(int(x)) if self.p else dom.convert(x) for x in r] for r in rows],
                            (len(rows), ncols), dom)


QQ_FIELD = Field(0)


def det(rows: Sequence[Sequence], field: Field = QQ_FIELD):
    """Determinant of a square matrix (rows of rationals)."""
    n = len(rows)
    if n == 0:
        return field.convert(1)
    return _det_elim([[field.convert(x) for x in r] for r in rows], field)


def _det_elim(a: list[list], field: Field):
    n = len(a)
    sign = 1
    result = field.convert(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return field.convert(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        pv = a[c][c]
        result = field.norm(result * pv)
        inv = field.inv(pv)
        for r in range(c + 1, n):
            if a[r][c] != 0:
                fct = field.norm(a[r][c] * inv)
                row_c = a[c]
                a[r] = [field.norm(x - fct * y) for x, y in zip(a[r], row_c)]
    return field.norm(result * sign)


def sign_of(x) -> int:
    return (x > 0) - (x < 0)


def rank(rows: Sequence[Sequence], field: Field = QQ_FIELD) -> int:
    if not rows or not rows[0]:
        return 0
    return field.matrix(rows).rank()


def nullspace(rows: Sequence[Sequence], field: Field = QQ_FIELD, ncols: int | None = None) -> list[list]:
    """Basis of the right kernel ``{x : A x = 0}``."""
    if ncols is None:
        ncols = len(rows[0])
    if not rows:
        return [[field.convert(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    ns = field.matrix(rows).nullspace()
    out = []
    for r in ns.to_Matrix().tolist():
        vec = [field.convert(_to_fraction(x)) for x in r]
        out.append(vec)
    return out


def _to_fraction(x) -> Fraction:
    try:
        return Fraction(int(x.p), int(x.q))
    except AttributeError:
        return Fraction(int(x))


class Echelon:
    """Incremental row-echelon form over sparse vectors ``{index: value}``.

    ``reduce`` returns the residue of a vector modulo the current span;
    ``add`` inserts a vector and reports whether it enlarged the span.
    """

    def __init__(self, field: Field = QQ_FIELD):
        self.field = field
        self.rows: dict[int, dict] = {}  # pivot -> row normalized to 1 at pivot

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: dict) -> dict:
        f = self.field
        v = {k: x for k, x in vec.items() if x != 0}
        if not self.rows:
            return v
        while True:
            hits = [k for k in v if k in self.rows]
            if not hits:
                return v
            k = min(hits)
            c = v[k]
            for j, y in self.rows[k].items():
                nv = f.norm(v.get(j, 0) - c * y)
                if nv == 0:
                    v.pop(j, None)
                else:
                    v[j] = nv

    def add(self, vec: dict) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        k = min(v)
        inv = self.field.inv(v[k])
        row = {j: self.field.norm(x * inv) for j, x in v.items()}
        # keep rows fully reduced against the new pivot so reduce() terminates quickly
        for p, r in self.rows.items():
            c = r.get(k)
            if c:
                for j, y in row.items():
                    nv = self.field.norm(r.get(j, 0) - c * y)
                    if nv == 0:
                        r.pop(j, None)
                    else:
                        r[j] = nv
        self.rows[k] = row
        return True

    def extend(self, vecs: Iterable[dict]) -> int:
        return sum(1 for v in vecs if self.add(v))


def quotient_basis(dim: int, relations: Iterable[dict], field: Field = QQ_FIELD):
    """Quotient of ``field^dim`` by the span of ``relations``.

    Returns ``(basis, project)`` where ``basis`` lists the non-pivot coordinates
    (these index a basis of the quotient) and ``project(vec)`` maps a sparse
    vector to its coordinates in that basis.
    """
    ech = Echelon(field)
    ech.extend(relations)
    free = [i for i in range(dim) if i not in ech.rows]
    pos = {i: j for j, i in enumerate(free)}

    def project(vec: dict) -> dict:
        r = ech.reduce(vec)
        return {pos[i]: x for i, x in r.items()}

    return free, project
