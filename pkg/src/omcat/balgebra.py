"""Explicit structure constants for the face-ring algebra on small programs.

Each block ``R_ab`` is the quotient of the face ring of ``z(Delta_ab)`` by the
linear forms of ``U``, with a monomial basis chosen degree by degree by row
reduction.  A basis element is a triple ``(a, b, m)`` with ``m`` a sorted
tuple of variable indices; its degree is ``2 len(m) + d(a, b)``.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import crossing_set, distance, hilbert_matrix
from .graded import GradedMatrix, LaurentPoly
from .linalg import Echelon
from .om_core import ResourceError, SignVector
from .om_program import ConsistencyError, Program
from .param_space import (
    ParameterSpace,
    SimplicialComplex,
    _face_monomials,
    default_parameter_space,
    matroid_complex,
    quotient_dims,
    z_delta,
)


class _QuotientRing:
    """``k[K] / (U)`` with a monomial basis and a normal form for monomials."""

    def __init__(self, K: SimplicialComplex, U: ParameterSpace):
        self.K = K
        self.field = U.field
        self.basis: list[tuple[int, ...]] = []
        self._deg: list[tuple[dict, Echelon]] = []
        if K.is_void:
            return
        forms = U.linear_forms()
        prev: list[tuple] = [()]
        k = 0
        while True:
            mons = _face_monomials(K, k)
            index = {m: j for j, m in enumerate(mons)}
            ech = Echelon(self.field)
            for m in prev if k else []:
                for form in forms:
                    vec: dict = {}
                    for i, c in form.items():
                        j = index.get(tuple(sorted(m + (i,))))
                        if j is not None:
                            vec[j] = self.field.norm(vec.get(j, 0) + c)
                    ech.add(vec)
            free = [m for j, m in enumerate(mons) if j not in ech.rows]
            self._deg.append((index, ech))
            self.basis.extend(free)
            if not free:
                break
            prev = mons
            k += 1
            if k > K.n + 1:
                raise ConsistencyError("quotient ring did not vanish in high degree")
        self._pos = {m: j for j, m in enumerate(self.basis)}

    def normal_form(self, m: tuple[int, ...]) -> dict[int, object]:
        """Coordinates of the monomial ``m`` in ``self.basis``."""
        k = len(m)
        if k >= len(self._deg) or not self.K.is_face(m):
            return {}
        index, ech = self._deg[k]
        red = ech.reduce({index[m]: 1})
        inv = {j: mm for mm, j in index.items()}
        return {self._pos[inv[j]]: x for j, x in red.items()}


@dataclass(frozen=True)
class BasisElement:
    alpha: SignVector
    beta: SignVector
    mono: tuple[int, ...]

    @property
    def degree(self) -> int:
        return 2 * len(self.mono) + distance(self.alpha, self.beta)


class BAlgebra:
    """Graded algebra ``sum_ab R_ab <-d_ab>`` with the crossing-set product."""

    def __init__(self, P: Program, U: ParameterSpace):
        self.program = P
        self.U = U
        self.field = U.field
        self.order = P.mu_table().topes
        self._rings: dict[tuple, _QuotientRing] = {}
        self.basis: list[BasisElement] = []
        self.block: dict[tuple, list[int]] = {}
        for a in self.order:
            for b in self.order:
                R = self._ring(a, b)
                idx = []
                for m in R.basis:
                    idx.append(len(self.basis))
                    self.basis.append(BasisElement(a, b, m))
                self.block[(a, b)] = idx
        self._table: dict[tuple[int, int], dict] = {}

    def _ring(self, a, b) -> _QuotientRing:
        key = (a, b)
        if key not in self._rings:
            self._rings[key] = _QuotientRing(z_delta(self.program, [a, b]), self.U)
        return self._rings[key]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def unit_element(self, a: SignVector) -> int:
        return self.block[(a, a)][0]

    def star(self, i: int, j: int) -> dict[int, object]:
        """Product of basis elements ``i`` and ``j`` as a sparse vector."""
        key = (i, j)
        if key in self._table:
            return self._table[key]
        x, y = self.basis[i], self.basis[j]
        out: dict = {}
        if x.beta == y.alpha:
            a, b, c = x.alpha, x.beta, y.beta
            m = x.mono + y.mono
            S = tuple(sorted(crossing_set(a, b, c)))
            full = tuple(sorted(m + S))
            triple = z_delta(self.program, [a, b, c])
            if not triple.is_face(m) and self._ring(a, c).K.is_face(full):
                raise ConsistencyError(f"product {x} * {y} vanishes on the triple ring but not after t_S")
            nf = self._ring(a, c).normal_form(full)
            offset = self.block[(a, c)]
            out = {offset[k]: v for k, v in nf.items()}
        self._table[key] = out
        return out

    def multiply(self, u: dict, v: dict) -> dict:
        F = self.field
        out: dict = {}
        for i, x in u.items():
            for j, y in v.items():
                for k, z in self.star(i, j).items():
                    out[k] = F.norm(out.get(k, 0) + x * y * z)
        return {k: c for k, c in out.items() if c != 0}

    # -- checks ------------------------------------------------------------
    def associativity_failures(self, limit: int = 1) -> list[tuple[int, int, int]]:
        bad = []
        for (a, b), I in self.block.items():
            for c in self.order:
                J = self.block[(b, c)]
                if not I or not J:
                    continue
                for e in self.order:
                    K = self.block[(c, e)]
                    for i in I:
                        for j in J:
                            ij = self.star(i, j)
                            for k in K:
                                if self.multiply(ij, {k: 1}) != self.multiply({i: 1}, self.star(j, k)):
                                    bad.append((i, j, k))
                                    if len(bad) >= limit:
                                        return bad
        return bad

    def is_associative(self) -> bool:
        return not self.associativity_failures()

    def has_unit(self) -> bool:
        units = {self.unit_element(a) for a in self.order}
        for i, x in enumerate(self.basis):
            left = self.star(self.unit_element(x.alpha), i)
            right = self.star(i, self.unit_element(x.beta))
            if left != {i: 1} or right != {i: 1}:
                return False
            for u in units - {self.unit_element(x.alpha)}:
                if self.star(u, i):
                    return False
        return True

    def is_graded(self) -> bool:
        return all(self.basis[k].degree == self.basis[i].degree + self.basis[j].degree
                   for (i, j), v in self._table.items() for k in v)

    def graded_dims(self) -> GradedMatrix:
        def entry(a, b):
            counts: dict[int, int] = {}
            for i in self.block[(a, b)]:
                deg = self.basis[i].degree
                counts[deg] = counts.get(deg, 0) + 1
            return LaurentPoly.from_dict(counts)

        return GradedMatrix.build(self.order, entry)

    def center_dims(self) -> list[int]:
        """Graded dimension of the center, indexed by ``degree / 2``.

        The center is graded and spanned by elements supported on the
        diagonal blocks, so each degree is solved separately.
        """
        by_deg: dict[int, list[int]] = {}
        for i, x in enumerate(self.basis):
            if x.alpha == x.beta:
                by_deg.setdefault(x.degree, []).append(i)
        top = max(by_deg, default=0)
        out = [0] * (top // 2 + 1)
        for deg, cols in by_deg.items():
            # the rows of the system are indexed by (generator, output coordinate)
            equations: dict[tuple[int, int], dict] = {}
            for c, i in enumerate(cols):
                for j in range(self.dim):
                    diff = dict(self.star(j, i))
                    for k, v in self.star(i, j).items():
                        diff[k] = self.field.norm(diff.get(k, 0) - v)
                    for k, v in diff.items():
                        if v != 0:
                            equations.setdefault((j, k), {})[c] = v
            ech = Echelon(self.field)
            ech.extend(equations.values())
            out[deg // 2] = len(cols) - len(ech)
        while len(out) > 1 and out[-1] == 0:
            out.pop()
        return out


def b_algebra(P: Program, U: ParameterSpace | None = None, *, seed: int = 0,
              max_topes: int = 8, max_n: int = 8) -> BAlgebra:
    P.require_generic()
    if P.n > max_n:
        raise ResourceError(f"n = {P.n} exceeds the bound {max_n}")
    if len(P.bounded_feasible) > max_topes:
        raise ResourceError(f"{len(P.bounded_feasible)} bounded feasible topes exceed the bound {max_topes}")
    if U is None:
        U = default_parameter_space(P, seed)
    return BAlgebra(P, U)


@dataclass(frozen=True)
class BReport:
    dim: int
    associative: bool
    unital: bool
    graded: bool
    dims_match_dual: bool
    center: tuple[int, ...]
    center_expected: tuple[int, ...]

    @property
    def ok(self) -> bool:
        return (self.associative and self.unital and self.graded and self.dims_match_dual
                and self.center == self.center_expected)


def verify_b_algebra(P: Program, U: ParameterSpace | None = None, **kw) -> BReport:
    """Build the algebra and run every structural check against the closed forms."""
    B = b_algebra(P, U, **kw)
    assoc = B.is_associative()
    unital = B.has_unit()
    H = hilbert_matrix(P.dual)
    G = B.graded_dims()
    match = all(G[a, b] == H[a, b] for a in B.order for b in B.order)
    center = tuple(B.center_dims())
    expected = tuple(quotient_dims(matroid_complex(P), B.U).h)
    return BReport(B.dim, assoc, unital, B.is_graded(), match, center, expected)


__all__ = ["BAlgebra", "BReport", "BasisElement", "b_algebra", "verify_b_algebra"]
