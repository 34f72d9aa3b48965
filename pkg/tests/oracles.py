"""Independent reference computations used by the tests.

Everything here works directly with the coordinates of a realizable program
(affine hyperplanes ``V_i . x + eta_i = 0`` in ``Q^d`` and objective
``xi . x``) using plain ``Fraction`` arithmetic, so it shares no code with
the oriented-matroid machinery under test.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from omcat.om_core import SignVector


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def solve(A, b):
    """Solve the square system ``A x = b`` exactly; None if singular."""
    n = len(A)
    M = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(A, b)]
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return None
        M[c], M[p] = M[p], M[c]
        for r in range(n):
            if r != c and M[r][c] != 0:
                f = M[r][c] / M[c][c]
                M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return [M[i][n] / M[i][i] for i in range(n)]


def det(A) -> Fraction:
    n = len(A)
    M = [[Fraction(v) for v in row] for row in A]
    out = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if M[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            M[c], M[p] = M[p], M[c]
            out = -out
        out *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [x - f * y for x, y in zip(M[r], M[c])]
    return out


def kernel(rows, ncols):
    """Basis of ``{x : rows . x = 0}`` by reduced row echelon form."""
    M = [[Fraction(v) for v in r] for r in rows]
    piv = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        M[r] = [x / M[r][c] for x in M[r]]
        for i in range(len(M)):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        piv.append(c)
        r += 1
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for fc in free:
        v = [Fraction(0)] * ncols
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -M[i][fc]
        out.append(v)
    return out


class Arrangement:
    """Affine arrangement with objective read off a program matrix.

    The matrix has ``d + 1`` rows and columns ``E_n, g, f`` with
    ``g = (0, ..., 0, 1)`` and ``f = (xi, 0)``.
    """

    def __init__(self, rows, En, gi, fi):
        rows = [[Fraction(x) for x in r] for r in rows]
        self.d = len(rows) - 1
        d = self.d
        assert all(rows[k][gi] == 0 for k in range(d)) and rows[d][gi] != 0
        assert rows[d][fi] == 0
        # points (x, s) with g-value s * rows[d][gi] > 0; rescale to s = +-1
        s = _sign(rows[d][gi])
        self.V = [[rows[k][i] for k in range(d)] for i in En]
        self.eta = [s * rows[d][i] for i in En]
        self.xi = [rows[k][fi] for k in range(d)]
        self.n = len(En)

    @classmethod
    def of(cls, P):
        return cls(P.matrix.rows, P.En, P.gi, P.fi)

    def value(self, i, x) -> Fraction:
        return sum(v * c for v, c in zip(self.V[i], x)) + self.eta[i]

    def bases(self) -> set[frozenset]:
        return {frozenset(b) for b in itertools.combinations(range(self.n), self.d)
                if det([self.V[j] for j in b]) != 0}

    def vertex(self, b):
        b = sorted(b)
        return solve([self.V[j] for j in b], [-self.eta[j] for j in b])

    def multipliers(self, b):
        """Coefficients of the objective in the normals of ``b``."""
        b = sorted(b)
        At = [[self.V[j][k] for j in b] for k in range(self.d)]
        return dict(zip(b, solve(At, self.xi)))

    def feasible_topes(self) -> set[SignVector]:
        """Every region of an essential arrangement has a vertex; perturb each vertex."""
        out = set()
        for b in self.bases():
            x = self.vertex(b)
            base = {i: _sign(self.value(i, x)) for i in range(self.n) if i not in b}
            assert all(base.values()), "arrangement is not simple"
            for signs in itertools.product((1, -1), repeat=len(b)):
                s = dict(base)
                s.update(zip(sorted(b), signs))
                out.add(SignVector.from_signs([s[i] for i in range(self.n)]))
        return out

    def _negative_cone(self, b) -> dict[int, int]:
        return {j: -_sign(l) for j, l in self.multipliers(b).items()}

    def mu(self) -> dict[frozenset, SignVector]:
        """The unique region in which the vertex of ``b`` maximizes the objective."""
        out = {}
        for b in self.bases():
            x = self.vertex(b)
            s = {i: _sign(self.value(i, x)) for i in range(self.n) if i not in b}
            s.update(self._negative_cone(b))
            out[b] = SignVector.from_signs([s[i] for i in range(self.n)])
        return out

    def bounded_sign_vectors(self) -> set[SignVector]:
        """Sign vectors whose recession cone has no objective-increasing ray (Farkas)."""
        cones = [self._negative_cone(b) for b in self.bases()]
        out = set()
        for signs in itertools.product((1, -1), repeat=self.n):
            if any(all(signs[j] == s for j, s in c.items()) for c in cones):
                out.add(SignVector.from_signs(signs))
        return out

    def bounded_feasible(self) -> set[SignVector]:
        return self.feasible_topes() & self.bounded_sign_vectors()


def realizable_cocircuits(rows) -> set[SignVector]:
    """Sign patterns of functionals vanishing on a corank-one set of columns."""
    rows = [[Fraction(x) for x in r] for r in rows]
    r, c = len(rows), len(rows[0])
    cols = [[rows[k][j] for k in range(r)] for j in range(c)]
    out = set()
    for S in itertools.combinations(range(c), r - 1):
        normals = kernel([cols[j] for j in S], r)
        if len(normals) != 1:
            continue
        y = normals[0]
        sv = SignVector.from_signs([_sign(sum(a * b for a, b in zip(y, cols[j]))) for j in range(c)])
        if not sv.is_zero():
            out.add(sv)
            out.add(-sv)
    # keep the minimal supports
    return {v for v in out if not any(w.support_mask != v.support_mask
                                      and w.support_mask & ~v.support_mask == 0 for w in out)}


def gale_dual_rows(rows):
    """Rows spanning the orthogonal complement of the row space."""
    return kernel(rows, len(rows[0]))


def generic_arrangement_tope_count(n: int, r: int) -> int:
    """Regions of ``n`` central hyperplanes in general position in rank ``r``."""
    from math import comb

    return 2 * sum(comb(n - 1, i) for i in range(r))


def brute_hilbert(mu: dict):
    """Entry-wise sum over common upper bounds, from the raw basis-to-tope map."""
    from omcat.graded import LaurentPoly

    inv = {a: b for b, a in mu.items()}

    def below(x, y):  # x agrees with y on the basis of y
        return all(x[i] == y[i] for i in inv[y])

    def dist(a, b):
        return sum(1 for i in range(a.n) if a[i] != b[i])

    out = {}
    for a in inv:
        for b in inv:
            coeffs: dict[int, int] = {}
            for c in inv:
                if below(a, c) and below(b, c):
                    k = dist(a, c) + dist(c, b)
                    coeffs[k] = coeffs.get(k, 0) + 1
            out[(a, b)] = LaurentPoly.from_dict(coeffs)
    return out
