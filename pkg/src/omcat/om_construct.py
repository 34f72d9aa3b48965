"""Builders: realizable oriented matroids, lexicographic extensions and lifts,
and the generic-program constructions used by the fixtures."""

from __future__ import annotations

import itertools
import random
from collections.abc import Sequence
from dataclasses import dataclass
from fractions import Fraction

from .linalg import QQ_FIELD, det, format_rational, parse_rational, rank, sign_of
from .om_core import (
    OrientedMatroid,
    SignVector,
    _as_index,
    _mask,
    chirotope_cocircuits,
    dual,
)


class ConstructionError(ValueError):
    """Invalid input to a builder (rank deficiency, bad order, ...)."""


@dataclass(frozen=True)
class RationalMatrix:
    """An r x c matrix of exact rationals."""

    rows: tuple[tuple[Fraction, ...], ...]

    def __init__(self, rows):
        conv = tuple(tuple(parse_rational(x) for x in r) for r in rows)
        if conv and len({len(r) for r in conv}) != 1:
            raise ConstructionError("ragged matrix")
        object.__setattr__(self, "rows", conv)

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.rows)

    def columns(self, idx: Sequence[int]) -> list[list[Fraction]]:
        """Submatrix with the given columns, as rows."""
        return [[r[j] for j in idx] for r in self.rows]

    def to_strings(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.rows]

    def rank(self) -> int:
        return rank([list(r) for r in self.rows]) if self.rows else 0


def matrix_chirotope(mat: RationalMatrix) -> dict[tuple[int, ...], int]:
    r, c = mat.shape
    return {
        t: sign_of(det(mat.columns(t), QQ_FIELD))
        for t in itertools.combinations(range(c), r)
    }


def realizable_om(mat, labels: Sequence[str] | None = None) -> OrientedMatroid:
    """Oriented matroid of the column vectors of a full-row-rank matrix.

    Cocircuits are the sign patterns of the linear functionals vanishing on a
    rank-(r-1) set of columns; the chirotope is the sign of the maximal minors.
    """
    if not isinstance(mat, RationalMatrix):
        mat = RationalMatrix(mat)
    r, c = mat.shape
    if r == 0:
        raise ConstructionError("empty matrix")
    if mat.rank() != r:
        raise ConstructionError(f"matrix has rank {mat.rank()} < {r} rows")
    labels = list(labels) if labels is not None else [str(i + 1) for i in range(c)]
    if len(labels) != c:
        raise ConstructionError("label count does not match the column count")
    chi = matrix_chirotope(mat)
    return OrientedMatroid(labels, chirotope_cocircuits(c, r, chi), chirotope=chi)


# ---------------------------------------------------------------------------
# single-element extensions


def _localization(M: OrientedMatroid, order: Sequence[int], signs: Sequence[int]):
    def sigma(y: SignVector) -> int:
        for a, s in zip(order, signs):
            v = y[a]
            if v:
                return s * v
        return 0

    return sigma


def _check_order(M: OrientedMatroid, order, signs):
    idx = [_as_index(M, x) for x in order]
    if len(set(idx)) != len(idx):
        raise ConstructionError("order repeats an element")
    if not M.is_spanning(_mask(idx)):
        raise ConstructionError("order must contain a basis")
    if signs is None:
        signs = [1] * len(idx)
    signs = [1 if s in (1, "+") else -1 if s in (-1, "-") else None for s in signs]
    if len(signs) != len(idx) or None in signs:
        raise ConstructionError("signs must be +/- and match the order length")
    return idx, signs


def extension_by_localization(M: OrientedMatroid, sigma, new: str) -> OrientedMatroid:
    """Single-element extension from a localization on the cocircuits."""
    if new in M.ground:
        raise ConstructionError(f"label {new!r} already used")
    n = M.n
    bit = 1 << n
    cocs = set()
    sig = {y: sigma(y) for y in M.cocircuits}
    for y, s in sig.items():
        pos, neg = y.pos, y.neg
        if s > 0:
            pos |= bit
        elif s < 0:
            neg |= bit
        cocs.add(SignVector(n + 1, pos, neg))
    r = M.rank
    ys = list(M.cocircuits)
    for y1, y2 in itertools.combinations(ys, 2):
        s1, s2 = sig[y1], sig[y2]
        if s1 == 0 or s1 != -s2:
            continue
        if y1 == -y2 or y1.separation(y2):
            continue
        if M.rank_of(y1.zero_mask & y2.zero_mask) != r - 2:
            continue
        z = y1.compose(y2)
        cocs.add(SignVector(n + 1, z.pos, z.neg))
        cocs.add(SignVector(n + 1, z.neg, z.pos))
    return OrientedMatroid(list(M.ground) + [new], cocs)


def lex_extend(M: OrientedMatroid, order: Sequence, new: str = "f", signs=None) -> OrientedMatroid:
    """Lexicographic extension ``M[a1^s1, ..., ak^sk]`` by a new element."""
    idx, sg = _check_order(M, order, signs)
    return extension_by_localization(M, _localization(M, idx, sg), new)


def lex_lift(M: OrientedMatroid, order: Sequence, new: str = "g", signs=None) -> OrientedMatroid:
    """Lexicographic lift: the dual of the lexicographic extension of the dual."""
    D = dual(M)
    idx, sg = _check_order(D, order, signs)
    return dual(extension_by_localization(D, _localization(D, idx, sg), new))


def generic_program_om(M: OrientedMatroid, order: Sequence | None = None,
                       g: str = "g", f: str = "f") -> OrientedMatroid:
    """Extend by ``f`` lexicographically along ``order`` then lift by ``g``
    with the colocalization taking the first nonzero entry along ``order``."""
    order = list(order) if order is not None else list(M.ground)
    ext = lex_extend(M, order, f)
    lifted = lex_lift(ext, order, g)
    # put g before f: ground = E_n, f, g  ->  E_n, g, f
    n = M.n
    perm = list(range(n)) + [n + 1, n]
    cocs = {permute(y, perm) for y in lifted.cocircuits}
    return OrientedMatroid(list(M.ground) + [g, f], cocs)


def permute(y: SignVector, perm: Sequence[int]) -> SignVector:
    """Sign vector whose j-th entry is ``y[perm[j]]``."""
    return y.restrict(perm)


# ---------------------------------------------------------------------------
# realizable programs


def program_matrix(V: Sequence[Sequence], eta: Sequence, xi: Sequence) -> RationalMatrix:
    """Homogenized matrix of an affine arrangement with objective.

    Column ``i`` is ``(V[:, i], eta[i])``; ``g`` is the homogenizing
    coordinate and ``f`` is the objective ``(xi, 0)``.
    """
    d = len(V)
    n = len(V[0])
    rows = []
    for k in range(d):
        rows.append([V[k][i] for i in range(n)] + [0, xi[k]])
    rows.append([eta[i] for i in range(n)] + [1, 0])
    return RationalMatrix(rows)


def random_program_matrix(n: int, d: int, rng: random.Random, spread: int = 5) -> RationalMatrix:
    V = [[rng.randint(-spread, spread) for _ in range(n)] for _ in range(d)]
    eta = [rng.randint(-spread, spread) for _ in range(n)]
    xi = [rng.randint(-spread, spread) for _ in range(d)]
    return program_matrix(V, eta, xi)


def random_program(n: int, d: int, seed: int = 0, *, uniform: bool = False,
                   spread: int = 5, tries: int = 200, **program_kwargs):
    """Seeded random realizable generic program on ``n`` elements of rank ``d``.

    Matrices are redrawn until the homogenized matrix has full rank, the
    underlying arrangement has rank ``d`` (and is uniform if asked) and the
    program passes the genericity check.
    """
    from math import comb

    from .om_program import Program, ProgramError

    if not 1 <= d <= n:
        raise ConstructionError(f"need 1 <= d <= n, got d={d}, n={n}")
    rng = random.Random(seed)
    labels = [str(i + 1) for i in range(n)] + ["g", "f"]
    for _ in range(tries):
        mat = random_program_matrix(n, d, rng, spread)
        if mat.rank() != d + 1 or rank(mat.columns(range(n))[: d]) != d:
            continue
        try:
            P = Program(realizable_om(mat, labels), "g", "f", **program_kwargs)
        except (ConstructionError, ProgramError):
            continue
        if uniform and len(P.bases) != comb(n, d):
            continue
        if P.is_generic():
            P.matrix = mat
            return P
    raise ConstructionError(f"no generic program found for n={n}, d={d}, seed={seed}")


def fixture(name: str, seed: int = 0):
    """Named example program; see :mod:`omcat.fixtures`."""
    from .fixtures import fixture as load

    return load(name, seed)
