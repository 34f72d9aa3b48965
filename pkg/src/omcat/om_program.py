"""Oriented matroid programs.

A program is an oriented matroid on ``E_n`` plus two distinguished elements
``g`` (the hyperplane at infinity) and ``f`` (the objective).  Everything
here is computed inside the covector lattice of the full oriented matroid;
covectors of the affine oriented matroid (``f`` deleted) are obtained by
forgetting the ``f`` coordinate.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

from .om_core import (
    DEFAULT_MAX_COVECTORS,
    OrientedMatroid,
    ResourceError,
    SignVector,
    _mask,
    dual,
    minor,
    reorient,
    sign_key,
)


class ProgramError(ValueError):
    """Structurally invalid program or violated precondition."""


class NotGeneric(ProgramError):
    def __init__(self, report: GenericityReport):
        super().__init__(str(report))
        self.report = report


class NonEuclidean(RuntimeError):
    """A construction needs the directed graph of the program to be acyclic."""

    def __init__(self, message: str, cycle=()):
        super().__init__(message)
        self.cycle = tuple(cycle)


class ConsistencyError(RuntimeError):
    """Two independent computations that must agree did not."""


Basis = frozenset  # frozenset of positions in E_n


@dataclass(frozen=True)
class GenericityReport:
    ok: bool
    condition: int = 0
    witness: str = ""

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "generic"
        if self.condition == 1:
            return (f"genericity condition (1) violated by cocircuit {self.witness} of the "
                    "affine oriented matroid: more than d zeros but nonzero on g")
        if self.condition == 2:
            return (f"genericity condition (2) violated by circuit {self.witness} of the "
                    "contraction by g: more than n-d zeros but nonzero on f")
        return f"genericity violated: {self.witness}"


def sign_str(x: SignVector) -> str:
    return str(x)


def tope_sort(topes: Iterable[SignVector]) -> list[SignVector]:
    """Sort sign vectors lexicographically with + before -."""
    return sorted(topes, key=sign_key)


def basis_label(b: Iterable[int], labels: Sequence[str]) -> str:
    names = [labels[i] for i in sorted(b)]
    if all(len(s) == 1 for s in labels):
        return "".join(names)
    return ",".join(names)


# ---------------------------------------------------------------------------
# data-level cone relation


@dataclass(frozen=True)
class ConeRelation:
    """The cone relation on bounded feasible topes and its transitive closure.

    ``pairs`` holds ``(beta, alpha)`` with ``beta`` below ``alpha``.
    """

    topes: tuple[SignVector, ...]
    pairs: frozenset
    closure: frozenset
    antisymmetric: bool
    cycle: tuple = ()

    def leq(self, beta: SignVector, alpha: SignVector) -> bool:
        return (beta, alpha) in self.pairs

    def closure_leq(self, beta: SignVector, alpha: SignVector) -> bool:
        return beta == alpha or (beta, alpha) in self.closure

    def hasse(self) -> set[tuple[SignVector, SignVector]]:
        """Covering pairs ``(upper, lower)`` of the closure; needs antisymmetry."""
        if not self.antisymmetric:
            raise NonEuclidean("closure of the cone relation is not a partial order", self.cycle)
        strict = {(b, a) for (b, a) in self.closure if a != b}
        out = set()
        for b, a in strict:
            if not any((b, c) in strict and (c, a) in strict for c in self.topes):
                out.add((a, b))
        return out


@dataclass(frozen=True)
class MuTable:
    """The bijection from bases to bounded feasible topes, as plain data.

    Everything about the cone relation, the Hilbert matrices and the Koszul
    identity only needs this table.
    """

    labels: tuple[str, ...]
    mu: dict = field(hash=False)
    provenance: str = ""

    def __post_init__(self):
        n = len(self.labels)
        seen = set()
        for b, a in self.mu.items():
            if a.n != n or a.zero_mask:
                raise ProgramError(f"tope {a} is not a full sign vector on {n} elements")
            if max(b, default=-1) >= n:
                raise ProgramError(f"basis {sorted(b)} outside ground set")
            if a in seen:
                raise ProgramError(f"tope {a} assigned to two bases")
            seen.add(a)

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def inverse(self) -> dict:
        return {a: b for b, a in self.mu.items()}

    @cached_property
    def topes(self) -> tuple[SignVector, ...]:
        return tuple(tope_sort(self.mu.values()))

    @cached_property
    def rank(self) -> int:
        return len(next(iter(self.mu))) if self.mu else 0

    def basis_of(self, alpha: SignVector) -> frozenset:
        return self.inverse[alpha]

    def leq(self, beta: SignVector, alpha: SignVector) -> bool:
        """Cone relation: ``beta`` agrees with ``alpha`` on the basis of ``alpha``."""
        b = self.inverse[alpha]
        m = _mask(b)
        return not ((beta.pos ^ alpha.pos) & m)

    def up_set(self, alpha: SignVector) -> list[SignVector]:
        return [g for g in self.topes if self.leq(alpha, g)]

    def down_set(self, alpha: SignVector) -> list[SignVector]:
        return [b for b in self.topes if self.leq(b, alpha)]

    def bounded_cone(self, b: frozenset, alpha: SignVector) -> bool:
        """Whether ``alpha`` lies in the bounded cone of basis ``b``."""
        return not ((alpha.pos ^ self.mu[b].pos) & _mask(b))

    @cached_property
    def cone(self) -> ConeRelation:
        pairs = frozenset((b, a) for a in self.topes for b in self.topes if self.leq(b, a))
        G = nx.DiGraph()
        G.add_nodes_from(self.topes)
        G.add_edges_from((a, b) for (b, a) in pairs if a != b)
        closure_graph = nx.transitive_closure(G, reflexive=False)
        closure = frozenset((b, a) for (a, b) in closure_graph.edges) | frozenset(
            (a, a) for a in self.topes
        )
        try:
            cyc = nx.find_cycle(G)
            cycle = tuple(u for u, _ in cyc)
            anti = False
        except nx.NetworkXNoCycle:
            cycle = ()
            anti = True
        return ConeRelation(self.topes, pairs, closure, anti, cycle)

    def dual(self) -> MuTable:
        """Table of the dual program: bases are complemented, topes kept."""
        full = frozenset(range(self.n))
        return MuTable(self.labels, {full - b: a for b, a in self.mu.items()},
                       provenance=self.provenance)

    def basis_label(self, b) -> str:
        return basis_label(b, self.labels)

    def rows(self) -> list[tuple[str, str]]:
        out = [(self.basis_label(b), str(a)) for b, a in self.mu.items()]
        return sorted(out)

    def parse_basis(self, s) -> frozenset:
        if isinstance(s, str):
            parts = s.split(",") if "," in s else list(s)
        else:
            parts = [str(x) for x in s]
        return frozenset(self.labels.index(p) for p in parts)


# ---------------------------------------------------------------------------
# programs


@dataclass(frozen=True)
class Edge:
    covector: SignVector          # feasible rank-2 covector of the affine oriented matroid
    tail: SignVector | None       # endpoint the edge leaves (f increases away from it); None for a ray arriving from infinity
    head: SignVector | None       # other feasible endpoint, None for a ray


@dataclass(frozen=True)
class DirectedTopeGraph:
    vertices: tuple[SignVector, ...]
    edges: tuple[Edge, ...]
    graph: nx.DiGraph = field(compare=False, repr=False)

    def outgoing(self, v: SignVector) -> list[Edge]:
        return [e for e in self.edges if e.tail == v]


class Program:
    """An oriented matroid program ``(om, g, f)``.

    Derived data is computed lazily on first use and cached.
    """

    def __init__(self, om: OrientedMatroid, g: str = "g", f: str = "f",
                 max_covectors: int = DEFAULT_MAX_COVECTORS, max_topes: int | None = None,
                 name: str = ""):
        self.om = om
        self.g_label, self.f_label = str(g), str(f)
        if self.g_label not in om.ground or self.f_label not in om.ground:
            raise ProgramError(f"labels g={g!r}, f={f!r} must be in the ground set")
        if self.g_label == self.f_label:
            raise ProgramError("g and f must differ")
        self.gi = om.index(self.g_label)
        self.fi = om.index(self.f_label)
        self.En = tuple(i for i in range(om.n) if i not in (self.gi, self.fi))
        self.labels = tuple(om.ground[i] for i in self.En)
        self.n = len(self.En)
        self.max_covectors = max_covectors
        self.max_topes = max_topes
        self.name = name
        if self.gi in om.loops():
            raise ProgramError("g is a loop")
        if self.fi in om.coloops():
            raise ProgramError("f is a coloop")
        self.d = om.rank - 1
        if self.underlying.rank != self.d:
            raise ProgramError("rank of the underlying matroid is not rank - 1")

    def __repr__(self) -> str:
        nm = f" {self.name}" if self.name else ""
        return f"Program{nm}(n={self.n}, d={self.d})"

    def __eq__(self, other) -> bool:
        return (isinstance(other, Program) and self.om == other.om
                and self.g_label == other.g_label and self.f_label == other.f_label)

    def __hash__(self) -> int:
        return hash((self.om, self.g_label, self.f_label))

    # -- matroids -----------------------------------------------------------
    @cached_property
    def affine_om(self) -> OrientedMatroid:
        """The oriented matroid with f deleted (ground E_n, g in original order)."""
        return minor(self.om, delete=[self.fi])

    @cached_property
    def contracted_om(self) -> OrientedMatroid:
        """The oriented matroid with g contracted."""
        return minor(self.om, contract=[self.gi])

    @cached_property
    def underlying(self) -> OrientedMatroid:
        return minor(self.om, delete=[self.fi], contract=[self.gi])

    @cached_property
    def bases(self) -> list[frozenset]:
        """Bases of the underlying matroid, as position sets in E_n."""
        U = self.underlying
        return sorted((frozenset(b) for b in U.bases()), key=lambda b: sorted(b))

    @cached_property
    def _nidx(self):
        """Positions of E_n and of g inside the affine oriented matroid."""
        A = self.affine_om
        return tuple(A.index(self.om.ground[i]) for i in self.En), A.index(self.g_label)

    def en(self, y: SignVector) -> SignVector:
        """Restrict a covector of the affine oriented matroid to E_n."""
        return y.restrict(self._nidx[0])

    def g_of(self, y: SignVector) -> int:
        return y[self._nidx[1]]

    # -- lattices -------------------------------------------------------------
    @cached_property
    def lattice(self):
        return self.om.covector_lattice(self.max_covectors)

    @cached_property
    def _affine_fvals(self) -> dict:
        """Covectors of the affine oriented matroid -> f-values of their lifts."""
        keep = [i for i in range(self.om.n) if i != self.fi]
        out: dict[SignVector, set] = {}
        for w in self.lattice.covectors:
            out.setdefault(w.restrict(keep), set()).add(w[self.fi])
        return out

    @cached_property
    def affine_covectors(self) -> frozenset:
        return frozenset(self._affine_fvals)

    def affine_rank(self, y: SignVector) -> int:
        A = self.affine_om
        return A.rank - A.rank_of(y.zero_mask)

    @cached_property
    def feasible_topes_n(self) -> dict:
        """Feasible topes of the affine oriented matroid keyed by their E_n part."""
        A = self.affine_om
        out = {}
        for y in self.affine_covectors:
            if self.g_of(y) > 0 and self.affine_rank(y) == A.rank:
                out[self.en(y)] = y
        if self.max_topes is not None and len(out) > self.max_topes:
            raise ResourceError(f"{len(out)} feasible topes exceed the bound {self.max_topes}")
        return out

    @cached_property
    def feasible(self) -> list[SignVector]:
        return tope_sort(self.feasible_topes_n)

    def tope(self, alpha: SignVector) -> SignVector:
        try:
            return self.feasible_topes_n[alpha]
        except KeyError:
            raise ProgramError(f"{alpha} is not a feasible tope") from None

    # -- genericity ---------------------------------------------------------
    @cached_property
    def genericity(self) -> GenericityReport:
        d, n = self.d, self.n
        A = self.affine_om
        gpos = self._nidx[1]
        for y in sorted(A.cocircuits, key=sign_key):
            if len(y.zero_set()) > d and y[gpos] != 0:
                return GenericityReport(False, 1, self._label_vec(A, y))
        C = self.contracted_om
        fpos = C.index(self.f_label)
        for x in sorted(C.circuits, key=sign_key):
            if len(x.zero_set()) > n - d and x[fpos] != 0:
                return GenericityReport(False, 2, self._label_vec(C, x))
        return GenericityReport(True)

    @staticmethod
    def _label_vec(M: OrientedMatroid, y: SignVector) -> str:
        return "(" + ", ".join(f"{M.ground[i]}:{'+' if v > 0 else '-' if v < 0 else '0'}"
                               for i, v in enumerate(y)) + ")"

    def is_generic(self) -> GenericityReport:
        return self.genericity

    def require_generic(self):
        if not self.genericity:
            raise NotGeneric(self.genericity)

    # -- directions and boundedness ----------------------------------------
    def direction_f_value(self, z: SignVector) -> int:
        """f-value of a direction (a covector of the affine oriented matroid with g = 0)."""
        vals = self._affine_fvals.get(z)
        if vals is None:
            raise ProgramError(f"{z} is not a covector of the affine oriented matroid")
        if self.g_of(z) != 0:
            raise ProgramError(f"{z} is not a direction (g-value is nonzero)")
        if 0 in vals:
            return 0
        if len(vals) != 1:
            raise ConsistencyError(f"direction {z} lifts with both signs of f but not with 0")
        return next(iter(vals))

    @cached_property
    def directions(self) -> dict:
        return {z: self.direction_f_value(z) for z in self.affine_covectors if self.g_of(z) == 0}

    @cached_property
    def _increasing_en(self) -> list[SignVector]:
        out = {self.en(z) for z, v in self.directions.items() if v > 0}
        # only conformally minimal ones matter for the boundedness test
        return [z for z in out if not any(w != z and w.is_face_of(z) for w in out)]

    def is_bounded(self, alpha: SignVector) -> bool:
        return not any(z.is_face_of(alpha) for z in self._increasing_en)

    @cached_property
    def bounded(self) -> list[SignVector]:
        """All bounded sign vectors in {+,-}^n (feasible or not)."""
        self.require_generic()
        n = self.n
        full = (1 << n) - 1
        out = []
        for pos in range(1 << n):
            a = SignVector(n, pos, full & ~pos)
            if self.is_bounded(a):
                out.append(a)
        return tope_sort(out)

    @cached_property
    def bounded_feasible(self) -> list[SignVector]:
        self.require_generic()
        return [a for a in self.feasible if self.is_bounded(a)]

    # -- vertices and the directed graph ------------------------------------
    @cached_property
    def feasible_cocircuits(self) -> list[SignVector]:
        return sorted((y for y in self.affine_om.cocircuits if self.g_of(y) > 0), key=sign_key)

    @cached_property
    def infinite_cocircuits(self) -> list[SignVector]:
        return sorted((y for y in self.affine_om.cocircuits if self.g_of(y) == 0), key=sign_key)

    @cached_property
    def vertex_of_basis(self) -> dict:
        """Y_b: the feasible cocircuit whose zero set is the basis b."""
        out = {}
        for y in self.feasible_cocircuits:
            b = frozenset(self.en(y).zero_set())
            if b in out:
                raise ConsistencyError(f"two feasible cocircuits with zero set {sorted(b)}")
            out[b] = y
        return out

    def zero_basis(self, y: SignVector) -> frozenset:
        return frozenset(self.en(y).zero_set())

    def _direction_from(self, y1: SignVector, e: SignVector) -> SignVector:
        hits = [z for z in self.infinite_cocircuits if y1.compose(z) == e]
        if len(hits) != 1:
            raise ConsistencyError(f"expected one boundary cocircuit on edge {e} from {y1}, got {len(hits)}")
        return hits[0]

    @cached_property
    def graph(self) -> DirectedTopeGraph:
        self.require_generic()
        feas = set(self.feasible_cocircuits)
        edges = []
        for e in sorted(self.affine_covectors, key=sign_key):
            if self.g_of(e) <= 0 or self.affine_rank(e) != 2:
                continue
            ends = [y for y in feas if y.is_face_of(e)]
            if not ends:
                continue  # a line meeting no other hyperplane in affine space
            if len(ends) > 2:
                raise ConsistencyError(f"edge {e} has {len(ends)} feasible endpoints")
            ends.sort(key=sign_key)
            y1 = ends[0]
            z = self._direction_from(y1, e)
            v = self.direction_f_value(z)
            if v == 0:
                raise NotGeneric(GenericityReport(False, 2, f"edge {e} is constant in f"))
            if len(ends) == 2:
                y2 = ends[1]
                v2 = self.direction_f_value(self._direction_from(y2, e))
                if v2 != -v:
                    raise ConsistencyError(f"edge {e} has inconsistent directions")
                tail, head = (y1, y2) if v > 0 else (y2, y1)
                edges.append(Edge(e, tail, head))
            else:
                if v > 0:
                    edges.append(Edge(e, y1, None))
                else:
                    edges.append(Edge(e, None, y1))  # ray coming in from infinity
        G = nx.DiGraph()
        G.add_nodes_from(self.feasible_cocircuits)
        G.add_edges_from((e.tail, e.head) for e in edges if e.tail is not None and e.head is not None)
        return DirectedTopeGraph(tuple(self.feasible_cocircuits), tuple(edges), G)

    @cached_property
    def euclidean_cycle(self) -> tuple:
        try:
            cyc = nx.find_cycle(self.graph.graph)
        except nx.NetworkXNoCycle:
            return ()
        return tuple(u for u, _ in cyc)

    def is_euclidean(self) -> bool:
        return not self.euclidean_cycle

    # -- optimal cocircuits and mu -------------------------------------------
    def faces_of(self, alpha: SignVector):
        T = self.tope(alpha)
        verts = [y for y in self.feasible_cocircuits if y.is_face_of(T)]
        edges = [e for e in self.graph.edges if e.covector.is_face_of(T)]
        return T, verts, edges

    def outgoing_count(self, y: SignVector, within: SignVector) -> int:
        """Outgoing edges at vertex ``y`` among the edges that are faces of ``within``."""
        return sum(1 for e in self.graph.edges if e.tail == y and e.covector.is_face_of(within))

    def optimal_cocircuit(self, alpha: SignVector) -> SignVector:
        _, verts, edges = self.faces_of(alpha)
        if not self.is_bounded(alpha):
            raise ProgramError(f"{alpha} is unbounded")
        sinks = [y for y in verts if not any(e.tail == y for e in edges)]
        if len(sinks) != 1:
            raise ConsistencyError(f"tope {alpha} has {len(sinks)} sink vertices")
        return sinks[0]

    def optimal_by_definition(self, alpha: SignVector) -> list[SignVector]:
        """Feasible cocircuit faces with no feasible increasing direction."""
        T = self.tope(alpha)
        incr = [z for z, v in self.directions.items() if v > 0]
        out = []
        for y in self.feasible_cocircuits:
            if not y.is_face_of(T):
                continue
            if not any(y.compose(z).is_face_of(T) for z in incr):
                out.append(y)
        return out

    @cached_property
    def mu(self) -> dict:
        self.require_generic()
        out = {}
        for a in self.bounded_feasible:
            b = self.zero_basis(self.optimal_cocircuit(a))
            if b in out:
                raise ConsistencyError(f"two topes share the optimal cocircuit with zero set {sorted(b)}")
            out[b] = a
        if set(out) != set(self.bases):
            raise ConsistencyError("optimal cocircuits do not biject onto the bases")
        return out

    @cached_property
    def mu_inv(self) -> dict:
        return {a: b for b, a in self.mu.items()}

    def mu_constructive(self, b: frozenset) -> SignVector:
        """Tope attached to basis ``b`` by composing the optimum with descending
        directions read off the contraction by g."""
        C = self.contracted_om
        cidx = [C.index(self.om.ground[i]) for i in self.En]
        fpos = C.index(self.f_label)
        y = self.vertex_of_basis[frozenset(b)]
        signs = list(self.en(y))
        for i in b:
            zero = _mask(cidx[j] for j in b if j != i)
            hits = [w for w in C.cocircuits if not (w.support_mask & zero) and w[fpos] < 0]
            if len(hits) != 1:
                raise ConsistencyError(f"expected one descending cocircuit for {sorted(b)} at {i}")
            signs[i] = hits[0][cidx[i]]
        return SignVector.from_signs(signs)

    def mu_table(self) -> MuTable:
        return MuTable(self.labels, dict(self.mu), provenance=self.name)

    @cached_property
    def cone(self) -> ConeRelation:
        return self.mu_table().cone

    # -- duality and minors ---------------------------------------------------
    @cached_property
    def dual(self) -> Program:
        return Program(dual(self.om), g=self.f_label, f=self.g_label,
                       max_covectors=self.max_covectors, max_topes=self.max_topes,
                       name=f"{self.name}^dual" if self.name else "")

    def minor(self, delete: Iterable = (), contract: Iterable = ()) -> Program:
        dl = [self._en_index(x) for x in delete]
        ct = [self._en_index(x) for x in contract]
        if dl and not any(not (set(dl) & b) for b in self.bases):
            raise ProgramError("deleted set must miss some basis")
        if ct and not any(set(ct) <= b for b in self.bases):
            raise ProgramError("contracted set must lie in some basis")
        om = minor(self.om, delete=[self.En[i] for i in dl], contract=[self.En[i] for i in ct])
        return Program(om, self.g_label, self.f_label, self.max_covectors, self.max_topes)

    def _en_index(self, x) -> int:
        if isinstance(x, int) and not isinstance(x, bool):
            return x
        return self.labels.index(str(x))

    def reorient(self, S: Iterable) -> Program:
        return Program(reorient(self.om, S), self.g_label, self.f_label,
                       self.max_covectors, self.max_topes)

    # -- complementary slackness -------------------------------------------------
    def in_bounded_cone(self, alpha: SignVector, b: frozenset) -> bool:
        return not ((alpha.pos ^ self.mu[b].pos) & _mask(b))

    def complementary_slackness(self, alpha: SignVector, b: frozenset) -> bool:
        b = frozenset(b)
        primal = self.in_bounded_cone(alpha, b)
        D = self.dual
        comp = frozenset(range(self.n)) - b
        x = D.vertex_of_basis[comp]
        dual_route = D.en(x).is_face_of(alpha) and alpha in D.feasible_topes_n
        if primal != dual_route:
            raise ConsistencyError(f"complementary slackness routes disagree on {alpha}, {sorted(b)}")
        return primal

    # -- self-dual projectives -------------------------------------------------
    def covers_infinite_subtope(self, alpha: SignVector) -> bool:
        """The feasible tope of ``alpha`` covers a subtope that vanishes exactly at g."""
        nidx, _ = self._nidx
        pos = neg = 0
        for j, i in enumerate(nidx):
            if alpha[j] > 0:
                pos |= 1 << i
            else:
                neg |= 1 << i
        x = SignVector(self.affine_om.n, pos, neg)
        return x in self._affine_fvals

    def dual_core(self, alpha: SignVector) -> bool:
        """Every cocircuit face of the dual tope of ``alpha`` is feasible in the dual program."""
        D = self.dual
        T = D.tope(alpha)
        return all(D.g_of(y) > 0 for y in D.affine_om.cocircuits if y.is_face_of(T))

    # -- export ------------------------------------------------------------------
    def to_dot(self) -> str:
        G = self.graph
        names = {v: basis_label(self.zero_basis(v), self.labels) for v in G.vertices}
        lines = ["digraph G_P {"]
        for v in G.vertices:
            lines.append(f'  "{names[v]}" [label="{names[v]}"];')
        k = 0
        for e in G.edges:
            if e.tail is not None and e.head is not None:
                lines.append(f'  "{names[e.tail]}" -> "{names[e.head]}";')
            elif e.tail is not None:
                lines.append(f'  "inf{k}" [shape=point];')
                lines.append(f'  "{names[e.tail]}" -> "inf{k}";')
                k += 1
            else:
                lines.append(f'  "inf{k}" [shape=point];')
                lines.append(f'  "inf{k}" -> "{names[e.head]}";')
                k += 1
        lines.append("}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# functional interface


def is_generic(P: Program) -> GenericityReport:
    return P.is_generic()


def feasible_topes(P: Program) -> list[SignVector]:
    P.require_generic()
    return P.feasible


def bounded(P: Program, alpha: SignVector) -> bool:
    P.require_generic()
    return P.is_bounded(alpha)


def direction_f_value(P: Program, z: SignVector) -> int:
    return P.direction_f_value(z)


def optimal_cocircuit(P: Program, alpha: SignVector) -> SignVector:
    P.require_generic()
    return P.optimal_cocircuit(alpha)


def mu(P: Program) -> dict:
    return P.mu


def mu_inv(P: Program) -> dict:
    return P.mu_inv


def graph_GP(P: Program) -> DirectedTopeGraph:
    return P.graph


def is_euclidean(P: Program) -> bool:
    return P.is_euclidean()


def cone_relation(P) -> ConeRelation:
    if isinstance(P, MuTable):
        return P.cone
    return P.cone


def dual_program(P: Program) -> Program:
    return P.dual


def program_minor(P: Program, delete: Iterable = (), contract: Iterable = ()) -> Program:
    return P.minor(delete, contract)


def complementary_slackness(P: Program, alpha: SignVector, b) -> bool:
    return P.complementary_slackness(alpha, b)
