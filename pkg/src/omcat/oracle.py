"""Brute-force graded dimensions of quiver algebras with quadratic relations.

The algebra ``A(P, U)`` is computed in two independent presentations:

* ``"quadratic"``: the path algebra of the quiver on bounded feasible topes,
  modulo commuting/vanishing squares and the loop relations cut out by
  ``U^perp``;
* ``"cube"``: the path algebra of the cube quiver restricted to bounded sign
  vectors (unbounded vertices killed), modulo commuting/vanishing squares and
  the central elements ``sum_i x_i theta_i`` for ``x`` in ``U^perp``, then
  cut down to the bounded feasible vertices.

Both are quadratic, so degree ``k`` is ``(A_{k-1} (x) V) / (A_{k-2} (x) R)``,
computed by exact row reduction one start vertex at a time.
"""

from __future__ import annotations

import logging
from collections.abc import Hashable, Sequence
from dataclasses import dataclass, field

from .algebra import distance, hilbert_matrix
from .graded import GradedMatrix, LaurentPoly
from .linalg import QQ_FIELD, Field, nullspace, quotient_basis
from .om_core import ResourceError, SignVector
from .om_program import Program
from .param_space import ParameterSpace, default_parameter_space

log = logging.getLogger(__name__)


class CutoffError(ResourceError):
    """The algebra is still nonzero at the degree cutoff."""


@dataclass
class QuadraticQuiver:
    """A finite quiver with homogeneous quadratic relations.

    ``relations`` are sparse combinations ``{(a1, a2): c}`` of length-two
    paths, each pair of arrows composable, all terms sharing start and end.
    """

    vertices: list[Hashable]
    arrows: list[tuple[int, int]] = field(default_factory=list)
    relations: list[dict] = field(default_factory=list)
    field: Field = QQ_FIELD

    def __post_init__(self):
        self.index = {v: i for i, v in enumerate(self.vertices)}
        self._arrow_of: dict[tuple[int, int], int] = {}
        for k, a in enumerate(self.arrows):
            self._arrow_of[a] = k

    def add_arrow(self, u, v) -> int:
        key = (self.index[u], self.index[v])
        if key not in self._arrow_of:
            self._arrow_of[key] = len(self.arrows)
            self.arrows.append(key)
        return self._arrow_of[key]

    def arrow(self, u, v) -> int:
        return self._arrow_of[(self.index[u], self.index[v])]

    def path2(self, u, m, v) -> tuple[int, int]:
        return self.arrow(u, m), self.arrow(m, v)

    def add_relation(self, terms: dict) -> None:
        rel = {k: self.field.norm(self.field.convert(c)) for k, c in terms.items()}
        rel = {k: c for k, c in rel.items() if c != 0}
        if not rel:
            return
        starts = {self.arrows[a1][0] for a1, _ in rel}
        ends = {self.arrows[a2][1] for _, a2 in rel}
        if len(starts) != 1 or len(ends) != 1:
            raise ValueError("relation terms must share start and end")
        if any(self.arrows[a1][1] != self.arrows[a2][0] for a1, a2 in rel):
            raise ValueError("relation term is not a path")
        self.relations.append(rel)

    def graded_dims(self, start, cutoff: int, stop_early: bool = True) -> dict[Hashable, list[int]]:
        """``dims[v][k] = dim e_start A_k e_v`` for ``k <= cutoff``.

        With ``stop_early`` the computation ends at the first vanishing degree
        and raises :class:`CutoffError` if degree ``cutoff`` is still nonzero.
        """
        F = self.field
        s = self.index[start]
        out_arrows: dict[int, list[int]] = {}
        for k, (u, _) in enumerate(self.arrows):
            out_arrows.setdefault(u, []).append(k)
        rels_from: dict[int, list[dict]] = {}
        for r in self.relations:
            a1 = next(iter(r))[0]
            rels_from.setdefault(self.arrows[a1][0], []).append(r)

        dims = {v: [] for v in self.vertices}
        # basis of degree k: list of end vertices; mult[k][(i, a)] -> sparse vector in degree k+1
        ends_prev2: list[int] | None = None
        ends_prev = [s]
        mult_prev: dict | None = None  # (i in deg k-2, a) -> vec in deg k-1
        self._record(dims, ends_prev, 0)
        for k in range(1, cutoff + 1):
            cand: dict[int, list[tuple[int, int]]] = {}
            for i, v in enumerate(ends_prev):
                for a in out_arrows.get(v, ()):
                    cand.setdefault(self.arrows[a][1], []).append((i, a))
            rels: dict[int, list[dict]] = {}
            if ends_prev2 is not None:
                for j, v in enumerate(ends_prev2):
                    for r in rels_from.get(v, ()):
                        vec: dict = {}
                        for (a1, a2), c in r.items():
                            for i, x in mult_prev.get((j, a1), {}).items():
                                vec[(i, a2)] = F.norm(vec.get((i, a2), 0) + c * x)
                        vec = {key: x for key, x in vec.items() if x != 0}
                        if vec:
                            w = self.arrows[next(iter(r))[1]][1]
                            rels.setdefault(w, []).append(vec)
            ends: list[int] = []
            mult: dict = {}
            for w in sorted(cand):
                keys = cand[w]
                pos = {key: t for t, key in enumerate(keys)}
                rel_vecs = [{pos[key]: x for key, x in vec.items()} for vec in rels.get(w, ())]
                free, project = quotient_basis(len(keys), rel_vecs, F)
                offset = len(ends)
                ends.extend([w] * len(free))
                for key, t in pos.items():
                    img = project({t: 1})
                    if img:
                        mult[key] = {offset + j: x for j, x in img.items()}
            self._record(dims, ends, k)
            if not ends:
                break
            ends_prev2, ends_prev, mult_prev = ends_prev, ends, mult
        else:
            if stop_early and ends_prev and cutoff > 0:
                raise CutoffError(f"algebra still nonzero in degree {cutoff} from vertex {start}")
        for v in dims:
            while dims[v] and dims[v][-1] == 0:
                dims[v].pop()
        return dims

    def _record(self, dims, ends, k):
        counts: dict[int, int] = {}
        for w in ends:
            counts[w] = counts.get(w, 0) + 1
        for v in self.vertices:
            dims[v].append(counts.get(self.index[v], 0))


def _check_size(P: Program, max_topes: int, max_n: int) -> None:
    if P.n > max_n:
        raise ResourceError(f"n = {P.n} exceeds the oracle bound {max_n}")
    if len(P.bounded_feasible) > max_topes:
        raise ResourceError(f"{len(P.bounded_feasible)} bounded feasible topes exceed the oracle bound {max_topes}")


def _flip(a: SignVector, i: int) -> SignVector:
    return a.reorient(1 << i)


def _square_relations(Q: QuadraticQuiver, keep: set, ambient: set | None) -> None:
    """Commuting squares between vertices of ``keep`` two steps apart.

    A square whose two middles are both kept commutes.  When exactly one
    middle is kept, the path through it vanishes if the other middle lies in
    ``ambient`` (it is killed there) and is left alone otherwise.
    """
    verts = sorted(keep, key=str)
    for a in verts:
        for b in verts:
            if distance(a, b) != 2:
                continue
            i, j = [k for k in range(a.n) if a[k] != b[k]]
            g, h = _flip(a, i), _flip(a, j)
            gin, hin = g in keep, h in keep
            if gin and hin:
                Q.add_relation({Q.path2(a, g, b): 1, Q.path2(a, h, b): -1})
            elif gin or hin:
                mid, other = (g, h) if gin else (h, g)
                if ambient is None or other in ambient:
                    Q.add_relation({Q.path2(a, mid, b): 1})


def _perp_rows(U: ParameterSpace, allowed: Sequence[int]) -> list[list]:
    """Basis of ``{w in U^perp : w_i = 0 for i outside allowed}``."""
    n = U.n
    rows = [list(r) for r in U.theta]
    rows += [[int(j == i) for j in range(n)] for i in range(n) if i not in allowed]
    if not rows:
        return [[int(j == i) for j in range(n)] for i in range(n)]
    return nullspace(rows, U.field, n)


def quadratic_presentation(P: Program, U: ParameterSpace) -> QuadraticQuiver:
    """Quiver on bounded feasible topes with square and loop relations."""
    tops = list(P.mu_table().topes)
    keep = set(tops)
    feas = set(P.feasible)
    Q = QuadraticQuiver(tops, field=U.field)
    for a in tops:
        for i in range(P.n):
            if _flip(a, i) in keep:
                Q.add_arrow(a, _flip(a, i))
    _square_relations(Q, keep, feas)
    for a in tops:
        I = [i for i in range(P.n) if _flip(a, i) in feas]
        J = [i for i in I if _flip(a, i) in keep]
        for w in _perp_rows(U, I):
            Q.add_relation({Q.path2(a, _flip(a, i), a): w[i] for i in J})
    return Q


def cube_presentation(P: Program, U: ParameterSpace) -> QuadraticQuiver:
    """Cube quiver on bounded sign vectors with the central ``U^perp`` relations."""
    verts = sorted(P.bounded, key=str)
    keep = set(verts)
    Q = QuadraticQuiver(verts, field=U.field)
    for a in verts:
        for i in range(P.n):
            if _flip(a, i) in keep:
                Q.add_arrow(a, _flip(a, i))
    _square_relations(Q, keep, None)
    W = U.orthogonal_complement()
    for a in verts:
        nb = [i for i in range(P.n) if _flip(a, i) in keep]
        for x in W.theta:
            Q.add_relation({Q.path2(a, _flip(a, i), a): x[i] for i in nb})
    return Q


@dataclass(frozen=True)
class OracleResult:
    dims: GradedMatrix
    model: str
    cutoff: int

    def agrees_with(self, H: GradedMatrix) -> bool:
        if set(H.order) != set(self.dims.order):
            return False
        return all(self.dims[a, b] == H[a, b] for a in H.order for b in H.order)


def path_algebra_oracle(P: Program, U: ParameterSpace | None = None, *, model: str = "quadratic",
                        seed: int = 0, max_topes: int = 8, max_n: int = 8,
                        cutoff: int | None = None) -> OracleResult:
    """Graded dimensions of ``e_a A e_b`` by explicit row reduction.

    ``cutoff`` defaults to ``2(d + n)``, above any degree the closed form can
    reach; exceeding it raises :class:`CutoffError`.
    """
    P.require_generic()
    _check_size(P, max_topes, max_n)
    if U is None:
        U = default_parameter_space(P, seed)
    if model == "quadratic":
        Q = quadratic_presentation(P, U)
    elif model == "cube":
        Q = cube_presentation(P, U)
    else:
        raise ValueError(f"unknown model {model!r}")
    cutoff = 2 * (P.d + P.n) if cutoff is None else cutoff
    order = P.mu_table().topes
    rows = []
    for a in order:
        dims = Q.graded_dims(a, cutoff)
        rows.append([LaurentPoly(0, dims[b]) for b in order])
        log.debug("oracle row %s done (%d relations)", a, len(Q.relations))
    return OracleResult(GradedMatrix(order, rows), model, cutoff)


def taut_path_check(P: Program) -> list[tuple[SignVector, SignVector, int]]:
    """Pairs of feasible topes where the taut paths are not all identified.

    Uses only commuting squares among feasible topes.  Returns the offending
    ``(a, b, dimension)`` triples; an empty list means every pair of feasible
    topes is joined by a single class of taut paths.
    """
    feas = sorted(P.feasible, key=str)
    keep = set(feas)
    Q = QuadraticQuiver(feas)
    for a in feas:
        for i in range(P.n):
            if _flip(a, i) in keep:
                Q.add_arrow(a, _flip(a, i))
    _square_relations(Q, keep, set())
    bad = []
    top = max((distance(a, b) for a in feas for b in feas), default=0)
    for a in feas:
        dims = Q.graded_dims(a, top, stop_early=False)
        for b in feas:
            k = distance(a, b)
            got = dims[b][k] if k < len(dims[b]) else 0
            if got != 1:
                bad.append((a, b, got))
    return bad


def oracle_matches_closed_form(P: Program, U: ParameterSpace | None = None, model: str = "quadratic",
                               **kw) -> bool:
    return path_algebra_oracle(P, U, model=model, **kw).agrees_with(hilbert_matrix(P))


__all__ = [
    "CutoffError",
    "OracleResult",
    "QuadraticQuiver",
    "cube_presentation",
    "oracle_matches_closed_form",
    "path_algebra_oracle",
    "quadratic_presentation",
    "taut_path_check",
]
