"""Laurent polynomials in q with integer coefficients, and square matrices of them
indexed by sign vectors."""

from __future__ import annotations

import csv
import io
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

from .om_core import SignVector


@dataclass(frozen=True)
class LaurentPoly:
    """``sum_k coeffs[k] q^(min_degree + k)``, normalized (no zero at either end)."""

    min_degree: int
    coeffs: tuple[int, ...]

    def __init__(self, min_degree: int = 0, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        lo = 0
        while lo < len(c) and c[lo] == 0:
            lo += 1
        hi = len(c)
        while hi > lo and c[hi - 1] == 0:
            hi -= 1
        c = c[lo:hi]
        object.__setattr__(self, "min_degree", min_degree + lo if c else 0)
        object.__setattr__(self, "coeffs", tuple(c))

    # -- construction -----------------------------------------------------
    @classmethod
    def monomial(cls, k: int, c: int = 1) -> LaurentPoly:
        return cls(k, (c,))

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls(0, (c,))

    @classmethod
    def from_dict(cls, d: dict) -> LaurentPoly:
        d = {k: v for k, v in d.items() if v}
        if not d:
            return ZERO
        lo, hi = min(d), max(d)
        return cls(lo, [d.get(k, 0) for k in range(lo, hi + 1)])

    def to_dict(self) -> dict[int, int]:
        return {self.min_degree + k: c for k, c in enumerate(self.coeffs) if c}

    # -- queries ------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def max_degree(self) -> int | None:
        return self.min_degree + len(self.coeffs) - 1 if self.coeffs else None

    def coefficient(self, k: int) -> int:
        j = k - self.min_degree
        return self.coeffs[j] if 0 <= j < len(self.coeffs) else 0

    def at_one(self) -> int:
        return sum(self.coeffs)

    def evaluate(self, q):
        return sum(c * q ** (self.min_degree + k) for k, c in enumerate(self.coeffs))

    def substitute_neg(self) -> LaurentPoly:
        """``p(-q)``."""
        return LaurentPoly(self.min_degree,
                           [c if (self.min_degree + k) % 2 == 0 else -c for k, c in enumerate(self.coeffs)])

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def is_palindromic(self, center2: int | None = None) -> bool:
        """Symmetric under ``q^k -> q^(center2 - k)`` (default: its own center)."""
        if self.is_zero():
            return True
        if center2 is None:
            center2 = self.min_degree + self.max_degree
        return all(self.coefficient(center2 - k) == c for k, c in self.to_dict().items())

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other) -> LaurentPoly:
        other = _lift(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.min_degree, other.min_degree)
        hi = max(self.max_degree, other.max_degree)
        return LaurentPoly(lo, [self.coefficient(k) + other.coefficient(k) for k in range(lo, hi + 1)])

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly(self.min_degree, [-c for c in self.coeffs])

    def __sub__(self, other) -> LaurentPoly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> LaurentPoly:
        return _lift(other) - self

    def __mul__(self, other) -> LaurentPoly:
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return ZERO
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(self.min_degree + other.min_degree, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.min_degree == other.min_degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.min_degree, self.coeffs))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for k, c in sorted(self.to_dict().items()):
            if k == 0:
                term = str(abs(c))
            else:
                mono = "q" if k == 1 else f"q^{k}" if k > 0 else f"q^({k})"
                term = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            parts.append(("-" if c < 0 else "+", term))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sg, t in parts[1:]:
            s += f" {sg} {t}"
        return s

    __repr__ = __str__


def _lift(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Laurent polynomial")


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def q_power(k: int, c: int = 1) -> LaurentPoly:
    return LaurentPoly.monomial(k, c)


def from_graded_dims(h: Iterable[int], shift: int = 0, step: int = 2) -> LaurentPoly:
    """``q^shift * sum_i h[i] q^(step i)``."""
    return LaurentPoly.from_dict({shift + step * i: c for i, c in enumerate(h) if c})


@dataclass(frozen=True)
class GradedMatrix:
    """Square matrix of Laurent polynomials indexed by an ordered list of topes."""

    order: tuple[SignVector, ...]
    entries: tuple[tuple[LaurentPoly, ...], ...]

    def __init__(self, order: Sequence[SignVector], entries: Sequence[Sequence]):
        order = tuple(order)
        rows = tuple(tuple(_lift(x) for x in r) for r in entries)
        if len(rows) != len(order) or any(len(r) != len(order) for r in rows):
            raise ValueError("graded matrix must be square and match its index set")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "entries", rows)

    @classmethod
    def build(cls, order: Sequence[SignVector], fn: Callable) -> GradedMatrix:
        return cls(order, [[fn(a, b) for b in order] for a in order])

    @classmethod
    def identity(cls, order: Sequence[SignVector]) -> GradedMatrix:
        return cls.build(order, lambda a, b: ONE if a == b else ZERO)

    @property
    def size(self) -> int:
        return len(self.order)

    def __getitem__(self, key) -> LaurentPoly:
        a, b = key
        if isinstance(a, SignVector):
            a = self.order.index(a)
        if isinstance(b, SignVector):
            b = self.order.index(b)
        return self.entries[a][b]

    def row(self, a: SignVector) -> tuple[LaurentPoly, ...]:
        return self.entries[self.order.index(a)]

    def transpose(self) -> GradedMatrix:
        n = self.size
        return GradedMatrix(self.order, [[self.entries[j][i] for j in range(n)] for i in range(n)])

    @property
    def T(self) -> GradedMatrix:
        return self.transpose()

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        if self.order != other.order:
            raise ValueError("index sets differ")
        n = self.size
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = ZERO
                for k in range(n):
                    a = self.entries[i][k]
                    if a.is_zero():
                        continue
                    b = other.entries[k][j]
                    if not b.is_zero():
                        acc = acc + a * b
                row.append(acc)
            out.append(row)
        return GradedMatrix(self.order, out)

    def __sub__(self, other: GradedMatrix) -> GradedMatrix:
        return GradedMatrix(self.order, [[a - b for a, b in zip(r, s)]
                                         for r, s in zip(self.entries, other.entries)])

    def substitute_neg(self) -> GradedMatrix:
        return GradedMatrix(self.order, [[x.substitute_neg() for x in r] for r in self.entries])

    def at_one(self) -> list[list[int]]:
        return [[x.at_one() for x in r] for r in self.entries]

    def total_at_one(self) -> int:
        return sum(sum(r) for r in self.at_one())

    def is_zero(self) -> bool:
        return all(x.is_zero() for r in self.entries for x in r)

    def is_identity(self) -> bool:
        return self == GradedMatrix.identity(self.order)

    def is_symmetric(self) -> bool:
        return self == self.transpose()

    def max_degree(self) -> int:
        return max((x.max_degree for r in self.entries for x in r if not x.is_zero()), default=0)

    # -- export ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {
            "order": [str(a) for a in self.order],
            "entries": [[{"min_degree": x.min_degree, "coeffs": list(x.coeffs)} for x in r]
                        for r in self.entries],
        }

    @classmethod
    def from_json(cls, doc: dict) -> GradedMatrix:
        order = [SignVector.from_str(s) for s in doc["order"]]
        rows = [[LaurentPoly(e["min_degree"], e["coeffs"]) for e in r] for r in doc["entries"]]
        return cls(order, rows)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([""] + [str(a) for a in self.order])
        for a, r in zip(self.order, self.entries):
            w.writerow([str(a)] + [str(x) for x in r])
        return buf.getvalue()

    def __str__(self) -> str:
        width = max((len(str(x)) for r in self.entries for x in r), default=1)
        lines = []
        for a, r in zip(self.order, self.entries):
            lines.append(f"{a}  " + "  ".join(str(x).rjust(width) for x in r))
        return "\n".join(lines)
