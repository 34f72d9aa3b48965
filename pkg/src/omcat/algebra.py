"""Graded invariants of the quiver algebras attached to a generic program.

Everything here is computed from the bijection between bases and bounded
feasible topes (a :class:`MuTable`) and, where a full program is available,
from its covector data.  Explicit algebras live in :mod:`omcat.oracle`
(path algebras) and :mod:`omcat.balgebra` (the face-ring model).
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graded import ZERO, GradedMatrix, LaurentPoly, from_graded_dims, q_power
from .om_core import SignVector
from .om_program import ConsistencyError, MuTable, NonEuclidean, Program, ProgramError
from .param_space import ParameterSpace, face_ring_quotient_dim, graded_dim_R

# ---------------------------------------------------------------------------
# sign-vector combinatorics


def distance(alpha: SignVector, beta: SignVector) -> int:
    """Number of positions where the two sign vectors differ."""
    if alpha.n != beta.n:
        raise ValueError("sign vectors have different lengths")
    return bin((alpha.pos ^ beta.pos) | (alpha.neg ^ beta.neg)).count("1")


def crossing_set(alpha: SignVector, beta: SignVector, gamma: SignVector) -> frozenset[int]:
    """Positions where ``alpha`` and ``gamma`` agree with each other but not with ``beta``."""
    return frozenset(i for i in range(alpha.n) if alpha[i] == gamma[i] != beta[i])


def flip(alpha: SignVector, S) -> SignVector:
    """``alpha`` with the signs on ``S`` reversed."""
    m = 0
    for i in S:
        m |= 1 << i
    return alpha.reorient(m)


def _table(P) -> MuTable:
    if isinstance(P, MuTable):
        return P
    if isinstance(P, Program):
        return P.mu_table()
    raise TypeError(f"expected a Program or MuTable, got {type(P).__name__}")


def _dual_table(P) -> MuTable:
    """The dual table, from the dual program when one is available."""
    if isinstance(P, Program):
        return P.dual.mu_table()
    return _table(P).dual()


# ---------------------------------------------------------------------------
# Hilbert matrices


def x_matrix(P) -> GradedMatrix:
    """``X[a, b] = q^d(a,b)`` when ``a`` precedes ``b`` in the cone relation."""
    T = _table(P)
    return GradedMatrix.build(T.topes, lambda a, b: q_power(distance(a, b)) if T.leq(a, b) else ZERO)


def y_matrix(P) -> GradedMatrix:
    """``Y[a, b] = (-q)^d(a,b)`` when ``a`` precedes ``b`` in the dual cone relation."""
    T = _table(P)
    D = _dual_table(P)
    if set(D.topes) != set(T.topes):
        raise ConsistencyError("dual program has different bounded feasible topes")
    return GradedMatrix.build(
        T.topes, lambda a, b: q_power(distance(a, b), (-1) ** distance(a, b)) if D.leq(a, b) else ZERO)


def hilbert_matrix(P) -> GradedMatrix:
    """Graded dimensions of ``e_a A e_b``, as ``X X^T``."""
    X = x_matrix(P)
    return X @ X.T


def hilbert_matrix_direct(P) -> GradedMatrix:
    """Same matrix, summing ``q^(d(a,c) + d(c,b))`` over common upper bounds ``c``."""
    T = _table(P)

    def entry(a, b):
        acc = ZERO
        for c in T.topes:
            if T.leq(a, c) and T.leq(b, c):
                acc = acc + q_power(distance(a, c) + distance(c, b))
        return acc

    return GradedMatrix.build(T.topes, entry)


def hilbert_matrix_from_rings(P: Program, U: ParameterSpace | None = None, method: str = "h") -> GradedMatrix:
    """Same matrix from the quotient rings of the dual program, shifted by distance."""
    D = P.dual
    W = U.orthogonal_complement() if U is not None else None
    order = P.mu_table().topes

    def entry(a, b):
        h = graded_dim_R(D, W, a, b, method)
        return from_graded_dims(h.h, distance(a, b))

    return GradedMatrix.build(order, entry)


@dataclass(frozen=True)
class KoszulReport:
    ok: bool
    xty_residual: GradedMatrix
    residual: GradedMatrix

    def __bool__(self) -> bool:
        return self.ok


def koszul_identity(P, P_dual=None) -> KoszulReport:
    """Check ``H(A, q) H(A^!, -q)^T = I`` with ``A^!`` read off the dual program."""
    if isinstance(P, Program):
        P.require_generic()
        P_dual = P.dual if P_dual is None else P_dual
        P_dual.require_generic()
    T = _table(P)
    D = _table(P_dual) if P_dual is not None else T.dual()
    if set(D.topes) != set(T.topes):
        raise ConsistencyError("dual program has different bounded feasible topes")
    X = x_matrix(T)
    Y = GradedMatrix.build(
        T.topes, lambda a, b: q_power(distance(a, b), (-1) ** distance(a, b)) if D.leq(a, b) else ZERO)
    H = X @ X.T
    H_dual = hilbert_matrix(D)
    # reindex the dual Hilbert matrix by the primal order before substituting -q
    H_dual = GradedMatrix.build(T.topes, lambda a, b: H_dual[a, b]).substitute_neg()
    I = GradedMatrix.identity(T.topes)
    r1 = X.T @ Y - I
    r2 = H @ H_dual.T - I
    return KoszulReport(r1.is_zero() and r2.is_zero(), r1, r2)


# ---------------------------------------------------------------------------
# standard and projective classes


@dataclass(frozen=True)
class StandardData:
    tope: SignVector
    down_set: tuple[SignVector, ...]
    up_set: tuple[SignVector, ...]

    @property
    def standard_dim(self) -> int:
        return len(self.down_set)


def standard_data(P) -> dict[SignVector, StandardData]:
    T = _table(P)
    return {a: StandardData(a, tuple(T.down_set(a)), tuple(T.up_set(a))) for a in T.topes}


def standard_class(P, gamma: SignVector) -> dict[SignVector, LaurentPoly]:
    """Composition factors of the standard module at ``gamma``: ``q^d(b,gamma) [L_b]`` for ``b`` below."""
    T = _table(P)
    return {b: q_power(distance(b, gamma)) for b in T.down_set(gamma)}


def kgroup_projective(P, alpha: SignVector) -> dict[SignVector, LaurentPoly]:
    """Class of the projective at ``alpha`` in the basis of standard classes."""
    T = _table(P)
    return {g: q_power(distance(alpha, g)) for g in T.up_set(alpha)}


def expand_in_simples(P, classes: dict[SignVector, LaurentPoly]) -> dict[SignVector, LaurentPoly]:
    out: dict[SignVector, LaurentPoly] = {}
    for g, c in classes.items():
        for b, s in standard_class(P, g).items():
            out[b] = out.get(b, ZERO) + c * s
    return {b: v for b, v in out.items() if not v.is_zero()}


def projective_filtration(P, alpha: SignVector) -> list[tuple[SignVector, int]]:
    """Standard subquotients ``(gamma, shift)`` of the projective at ``alpha``.

    The list is ordered along a linear extension of the cone order, starting
    with ``alpha`` itself (the top quotient).  Only defined when the closure of
    the cone relation is a partial order.
    """
    T = _table(P)
    cone = T.cone
    euclid = P.is_euclidean() if isinstance(P, Program) else cone.antisymmetric
    if euclid != cone.antisymmetric:
        raise ConsistencyError("Euclidean test and cone-relation antisymmetry disagree")
    if not euclid:
        raise NonEuclidean(
            "the cone relation has a cycle, so projectives need not be filtered by standards "
            f"(cycle through {len(cone.cycle)} topes)", cone.cycle)
    up = T.up_set(alpha)
    G = nx.DiGraph()
    G.add_nodes_from(up)
    G.add_edges_from((b, a) for (b, a) in cone.closure if a in up and b in up and a != b)
    order = list(nx.lexicographical_topological_sort(G, key=str))
    return [(g, distance(alpha, g)) for g in order]


def dim_census(P) -> int:
    """``|{(a, c, b) : a and c both precede b}|``."""
    T = _table(P)
    return sum(len(T.down_set(b)) ** 2 for b in T.topes)


# ---------------------------------------------------------------------------
# self-dual projectives and the center


def self_dual_conditions(P: Program) -> tuple[list[SignVector], list[SignVector]]:
    """Topes satisfying (a) the tope covers a subtope vanishing only at g, and
    (b) every cocircuit face of the dual tope is feasible in the dual program."""
    P.require_generic()
    tops = P.bounded_feasible
    a = [t for t in tops if P.covers_infinite_subtope(t)]
    b = [t for t in tops if P.dual_core(t)]
    return a, b


def self_dual_projectives(P: Program) -> list[SignVector]:
    a, b = self_dual_conditions(P)
    if a != b:
        raise ConsistencyError(f"self-dual tests disagree: {sorted(map(str, set(a) ^ set(b)))}")
    return a


def palindromic_row(H: GradedMatrix, alpha: SignVector) -> bool:
    """All entries of the row are symmetric about one common degree."""
    row = [x for x in H.row(alpha) if not x.is_zero()]
    top = max(x.max_degree for x in row)
    return all(x.is_palindromic(top) for x in row)


def center_rank(P, U: ParameterSpace) -> int:
    """Dimension of the center of the face-ring algebra, i.e. ``dim k[M]/(U)``."""
    return face_ring_quotient_dim(P, U)


# ---------------------------------------------------------------------------
# programs sharing a contraction


@dataclass(frozen=True)
class Bimodule:
    nu: dict
    dims: GradedMatrix | dict
    projective_dims: dict
    census: dict
    total: int


def _same_contraction(P1: Program, P2: Program) -> bool:
    C1, C2 = P1.contracted_om, P2.contracted_om
    if P1.f_label != P2.f_label or P1.labels != P2.labels or C1.ground != C2.ground:
        return False
    return C1.cocircuits == C2.cocircuits


def nu_and_bimodule(P1: Program, P2: Program, U: ParameterSpace | None = None) -> Bimodule:
    """Bijection ``mu2 . mu1^-1`` and the graded dimensions of the transfer bimodule.

    Dimensions are taken from the quotient rings of the common dual affine
    space; every block is checked against the basis census.
    """
    if not _same_contraction(P1, P2):
        raise ProgramError("programs do not share the contraction by g with the same f")
    T1, T2 = P1.mu_table(), P2.mu_table()
    nu = {a: T2.mu[b] for b, a in T1.mu.items()}
    D = P1.dual
    W = U.orthogonal_complement() if U is not None else None

    def cone_member(a, b):
        return T1.bounded_cone(b, a)

    for b in T1.mu:
        if not all(T1.mu[b][i] == T2.mu[b][i] for i in b):
            raise ConsistencyError(f"negative cones of basis {sorted(b)} differ between the programs")
    dims = {}
    for a in T1.topes:
        for g in T2.topes:
            h = graded_dim_R(D, W, a, g, "h" if W is None else "quotient")
            expect = sum(1 for b in T1.mu if cone_member(a, b) and cone_member(g, b))
            if h.total != expect:
                raise ConsistencyError(f"block ({a}, {g}) has dimension {h.total}, census {expect}")
            dims[(a, g)] = from_graded_dims(h.h, distance(a, g))
    proj = {a: sum(dims[(a, g)].at_one() for g in T2.topes) for a in T1.topes}
    census = {a: sum(1 for g in T2.topes for b in T1.mu if cone_member(a, b) and cone_member(g, b))
              for a in T1.topes}
    if T1.topes == T2.topes:
        dims_out = GradedMatrix.build(T1.topes, lambda a, g: dims[(a, g)])
    else:
        dims_out = dims
    return Bimodule(nu, dims_out, proj, census, sum(proj.values()))


# ---------------------------------------------------------------------------
# explicit algebras (small instances)


def b_algebra(P: Program, U: ParameterSpace | None = None, **kw):
    """Explicit face-ring algebra; see :func:`omcat.balgebra.b_algebra`."""
    from .balgebra import b_algebra as build
    return build(P, U, **kw)


def path_algebra_oracle(P: Program, U: ParameterSpace | None = None, **kw):
    """Brute-force graded dimensions; see :func:`omcat.oracle.path_algebra_oracle`."""
    from .oracle import path_algebra_oracle as run
    return run(P, U, **kw)


__all__ = [
    "Bimodule",
    "KoszulReport",
    "StandardData",
    "b_algebra",
    "center_rank",
    "crossing_set",
    "dim_census",
    "distance",
    "expand_in_simples",
    "flip",
    "hilbert_matrix",
    "hilbert_matrix_direct",
    "hilbert_matrix_from_rings",
    "kgroup_projective",
    "koszul_identity",
    "nu_and_bimodule",
    "palindromic_row",
    "path_algebra_oracle",
    "projective_filtration",
    "self_dual_conditions",
    "self_dual_projectives",
    "standard_class",
    "standard_data",
    "x_matrix",
    "y_matrix",
]
