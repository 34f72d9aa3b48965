"""Parameter spaces, face rings of simplicial complexes and the graded rings
attached to tuples of feasible topes.

Degrees follow the convention that every variable ``t_i`` has degree 2, so a
``GradedDims`` vector ``h`` means ``sum_i h[i] q^(2i)``.
"""

from __future__ import annotations

import itertools
import random
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from math import comb

from .linalg import (
    QQ_FIELD,
    Field,
    det,
    format_rational,
    nullspace,
    quotient_basis,
    rank,
)
from .om_core import OrientedMatroid, SignVector
from .om_program import Program, ProgramError


class ParameterSpaceError(ValueError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


# ---------------------------------------------------------------------------
# parameter spaces


@dataclass(frozen=True)
class ParameterSpace:
    """Row span of a d x n matrix ``theta`` over ``field``."""

    theta: tuple[tuple, ...]
    n: int
    field: Field = QQ_FIELD

    def __init__(self, rows: Sequence[Sequence], n: int | None = None, field: Field = QQ_FIELD):
        conv = tuple(tuple(field.convert(x) for x in r) for r in rows)
        if n is None:
            if not conv:
                raise ParameterSpaceError("cannot infer n from an empty matrix")
            n = len(conv[0])
        if any(len(r) != n for r in conv):
            raise ParameterSpaceError("rows must all have length n")
        if conv and rank(conv, field) != len(conv):
            raise ParameterSpaceError("rows are linearly dependent")
        object.__setattr__(self, "theta", conv)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "field", field)

    @property
    def d(self) -> int:
        return len(self.theta)

    def minor(self, cols: Iterable[int]):
        cols = sorted(cols)
        return det([[r[j] for j in cols] for r in self.theta], self.field)

    def orthogonal_complement(self) -> ParameterSpace:
        if not self.theta:
            return ParameterSpace([[int(i == j) for j in range(self.n)] for i in range(self.n)],
                                  self.n, self.field)
        return ParameterSpace(nullspace(self.theta, self.field, self.n), self.n, self.field)

    def same_span(self, other: ParameterSpace) -> bool:
        if self.n != other.n or self.d != other.d:
            return False
        return rank(list(self.theta) + list(other.theta), self.field) == self.d if self.d else True

    def linear_forms(self) -> list[dict]:
        """Each row as a sparse linear form ``{i: coefficient}`` in the t-variables."""
        return [{i: x for i, x in enumerate(r) if x != 0} for r in self.theta]

    def to_strings(self) -> list[list[str]]:
        if self.field.is_rational:
            return [[format_rational(x) for x in r] for r in self.theta]
        return [[str(x) for x in r] for r in self.theta]


def _bases(M) -> list[frozenset]:
    if isinstance(M, Program):
        return list(M.bases)
    if isinstance(M, OrientedMatroid):
        return [frozenset(b) for b in M.bases()]
    return [frozenset(b) for b in M]


def parameter_space_witness(U: ParameterSpace, M) -> frozenset | None:
    """First basis of ``M`` on which ``U`` fails to project isomorphically, or None."""
    bases = _bases(M)
    if bases and len(next(iter(bases))) != U.d:
        raise ParameterSpaceError(f"U has dimension {U.d} but the bases have size {len(bases[0])}")
    for b in sorted(bases, key=sorted):
        if U.minor(b) == 0:
            return b
    return None


def is_parameter_space(U: ParameterSpace, M) -> tuple[bool, frozenset | None]:
    w = parameter_space_witness(U, M)
    return w is None, w


def orthogonal_complement(U: ParameterSpace, M=None) -> ParameterSpace:
    """``U^perp``; when ``M`` is given, check it is a parameter space for the dual matroid."""
    W = U.orthogonal_complement()
    if M is not None:
        full = frozenset(range(U.n))
        dual_bases = [full - b for b in _bases(M)]
        w = parameter_space_witness(W, dual_bases)
        if w is not None:
            raise ParameterSpaceError(f"U^perp fails on dual basis {sorted(w)}", w)
    return W


def random_parameter_space(M, seed: int = 0, field: Field = QQ_FIELD, spread: int = 7,
                           tries: int = 200) -> ParameterSpace:
    bases = _bases(M)
    if not bases:
        raise ParameterSpaceError("matroid has no bases")
    d = len(bases[0])
    n = M.n if hasattr(M, "n") else max(max(b) for b in bases) + 1
    rng = random.Random(seed)
    for _ in range(tries):
        rows = [[rng.randint(-spread, spread) for _ in range(n)] for _ in range(d)]
        try:
            U = ParameterSpace(rows, n, field)
        except ParameterSpaceError:
            continue
        if parameter_space_witness(U, bases) is None:
            return U
    raise ParameterSpaceError(f"no parameter space found in {tries} draws (seed {seed})")


def default_parameter_space(P: Program, seed: int = 0, field: Field = QQ_FIELD) -> ParameterSpace:
    """The row space of the defining matrix on E_n when there is one, else random."""
    mat = getattr(P, "matrix", None)
    if mat is not None:
        rows = [[r[i] for i in P.En] for r in mat.rows[: P.d]]
        try:
            U = ParameterSpace(rows, P.n, field)
            if parameter_space_witness(U, P) is None:
                return U
        except (ParameterSpaceError, ZeroDivisionError):
            pass
    return random_parameter_space(P, seed, field)


# ---------------------------------------------------------------------------
# simplicial complexes


def _maximal(sets: Iterable[frozenset]) -> list[frozenset]:
    sets = set(sets)
    return [s for s in sets if not any(s < t for t in sets)]


@dataclass(frozen=True)
class SimplicialComplex:
    """Complex on ``range(n)`` given by its facets.  No facets means the void complex."""

    n: int
    facets: tuple[frozenset, ...]

    def __init__(self, n: int, facets: Iterable[Iterable[int]]):
        fs = sorted(_maximal(frozenset(f) for f in facets), key=lambda f: (len(f), sorted(f)))
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "facets", tuple(fs))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def vertices(self) -> frozenset:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.facets), default=0) - 1

    def is_face(self, S: Iterable[int]) -> bool:
        S = frozenset(S)
        return any(S <= f for f in self.facets)

    def faces(self) -> set[frozenset]:
        out = set()
        for f in self.facets:
            for k in range(len(f) + 1):
                out.update(frozenset(c) for c in itertools.combinations(sorted(f), k))
        return out

    def f_vector(self) -> list[int]:
        """``f[k]`` = number of faces with ``k`` vertices (so ``f[0] = 1``)."""
        if self.is_void:
            return []
        f = [0] * (self.dim + 2)
        for s in self.faces():
            f[len(s)] += 1
        return f

    def facet_labels(self, labels: Sequence[str]) -> list[list[str]]:
        return [[labels[i] for i in sorted(f)] for f in self.facets]


@dataclass(frozen=True)
class GradedDims:
    """``h[i]`` is the dimension in degree ``2i``."""

    h: tuple[int, ...]

    def __init__(self, h: Iterable[int]):
        h = list(h)
        while h and h[-1] == 0:
            h.pop()
        if any(x < 0 for x in h):
            raise ValueError(f"negative graded dimension in {h}")
        object.__setattr__(self, "h", tuple(h))

    @property
    def total(self) -> int:
        return sum(self.h)

    def in_degree(self, k: int) -> int:
        if k % 2 or k < 0 or k // 2 >= len(self.h):
            return 0
        return self.h[k // 2]

    def __iter__(self):
        return iter(self.h)

    def __len__(self) -> int:
        return len(self.h)


def h_vector(K: SimplicialComplex, delta: int | None = None) -> GradedDims:
    """h-vector from the f-vector: ``sum h_i x^i = sum_i f_i x^i (1-x)^(delta-i)``.

    ``delta`` defaults to the number of vertices of a facet; the void complex
    has the zero h-vector.
    """
    if K.is_void:
        return GradedDims(())
    f = K.f_vector()
    delta = len(f) - 1 if delta is None else delta
    h = [0] * (delta + 1)
    for i, fi in enumerate(f):
        for j in range(delta - i + 1):
            h[i + j] += fi * comb(delta - i, j) * (-1) ** j
    return GradedDims(h)


def _face_monomials(K: SimplicialComplex, k: int) -> list[tuple[int, ...]]:
    """Degree-k monomials (sorted exponent multisets) whose support is a face."""
    verts = sorted(K.vertices)
    return [m for m in itertools.combinations_with_replacement(verts, k) if K.is_face(m)]


def quotient_dims(K: SimplicialComplex, U: ParameterSpace, max_degree: int | None = None) -> GradedDims:
    """Graded dimensions of ``k[K] / (theta_1, ..., theta_d)`` by row reduction in each degree."""
    if K.is_void:
        return GradedDims(())
    top = max_degree if max_degree is not None else K.dim + 2
    forms = U.linear_forms()
    dims = []
    prev = [()]
    for k in range(top + 1):
        mons = _face_monomials(K, k)
        index = {m: j for j, m in enumerate(mons)}
        rels = []
        for m in prev if k else []:
            for form in forms:
                vec: dict[int, object] = {}
                for i, c in form.items():
                    w = tuple(sorted(m + (i,)))
                    j = index.get(w)
                    if j is not None:
                        vec[j] = U.field.norm(vec.get(j, 0) + c)
                rels.append(vec)
        free, _ = quotient_basis(len(mons), rels, U.field)
        dims.append(len(free))
        prev = mons
        if not free and k > 0:
            break
    else:
        if dims and dims[-1]:
            raise ParameterSpaceError(f"quotient still nonzero in degree {2 * top}; "
                                      "theta is not a system of parameters here")
    return GradedDims(dims)


# ---------------------------------------------------------------------------
# complexes attached to feasible topes


def _feasible_faces(P: Program) -> dict:
    """Feasible tope (E_n part) -> its feasible faces in the affine oriented matroid."""
    cache = P.__dict__.get("_feasible_faces")
    if cache is None:
        feas = [y for y in P.affine_covectors if P.g_of(y) > 0]
        cache = {a: frozenset(y for y in feas if y.is_face_of(T)) for a, T in P.feasible_topes_n.items()}
        P.__dict__["_feasible_faces"] = cache
    return cache


def meet(P: Program, topes: Sequence[SignVector]) -> SignVector | None:
    """Largest common feasible face of the given feasible topes, or None."""
    faces = _feasible_faces(P)
    try:
        common = frozenset.intersection(*(faces[a] for a in topes))
    except KeyError as exc:
        raise ProgramError(f"{exc.args[0]} is not a feasible tope") from None
    if not common:
        return None
    y = None
    for z in common:
        y = z if y is None else y.compose(z)
    return y


def feasible_vertices(P: Program, y: SignVector | None) -> list[SignVector]:
    if y is None:
        return []
    return [x for x in P.feasible_cocircuits if x.is_face_of(y)]


def z_delta(P: Program, topes: Sequence[SignVector]) -> SimplicialComplex:
    """Complex of zero sets (in E_n) of the feasible faces of the meet of ``topes``."""
    y = meet(P, topes)
    if y is None:
        return SimplicialComplex(P.n, [])
    faces = [x for x in _feasible_faces(P)[topes[0]] if x.is_face_of(y)]
    return SimplicialComplex(P.n, [P.en(x).zero_set() for x in faces])


def census_dims(P: Program, topes: Sequence[SignVector]) -> GradedDims:
    """Feasible vertices of the meet, counted by their outgoing edges inside the meet."""
    y = meet(P, topes)
    counts: dict[int, int] = {}
    for x in feasible_vertices(P, y):
        k = P.outgoing_count(x, y)
        counts[k] = counts.get(k, 0) + 1
    return GradedDims([counts.get(i, 0) for i in range(max(counts, default=-1) + 1)])


def graded_dim_R(P: Program, U: ParameterSpace | None, alpha: SignVector, beta: SignVector,
                 method: str = "h") -> GradedDims:
    """Graded dimensions of the quotient ring attached to the pair ``(alpha, beta)``.

    ``method`` selects the route: ``"h"`` (h-vector of the complex),
    ``"quotient"`` (row reduction with ``U``, which is then required) or
    ``"census"`` (outgoing edges in the directed graph).
    """
    if method == "census":
        return census_dims(P, (alpha, beta))
    K = z_delta(P, (alpha, beta))
    if method == "h":
        return h_vector(K, P.d)
    if method == "quotient":
        if U is None:
            raise ParameterSpaceError("the quotient route needs a parameter space")
        return quotient_dims(K, U)
    raise ValueError(f"unknown method {method!r}")


def matroid_complex(M) -> SimplicialComplex:
    bases = _bases(M)
    n = M.n if hasattr(M, "n") else max(max(b) for b in bases) + 1
    return SimplicialComplex(n, bases)


def face_ring_quotient_dim(M, U: ParameterSpace, check: bool = True) -> int:
    """``dim k[M]/(U)``, by row reduction; checked against the h-vector sum."""
    K = matroid_complex(M)
    w = parameter_space_witness(U, M)
    if w is not None:
        raise ParameterSpaceError(f"not a parameter space: fails on basis {sorted(w)}", w)
    dims = quotient_dims(K, U)
    if check and dims.total != h_vector(K).total:
        raise ParameterSpaceError("quotient dimension disagrees with the h-vector")
    return dims.total
