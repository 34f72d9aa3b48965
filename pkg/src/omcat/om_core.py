"""Sign vectors and oriented matroids given by their signed cocircuits.

A sign vector on an ordered ground set of ``n`` elements is stored as two
bitmasks (positive part, negative part).  Oriented matroids carry their
cocircuits; circuits, bases and the covector lattice are derived on demand
and cached.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

MAX_GROUND = 64
DEFAULT_MAX_COVECTORS = 1 << 20


class DimensionError(ValueError):
    """Sign vectors on different ground sets were combined."""


class ResourceError(RuntimeError):
    """A configured size bound was exceeded."""


class AxiomError(ValueError):
    """A set of sign vectors is not the cocircuit set of an oriented matroid."""

    def __init__(self, report: AxiomReport):
        super().__init__(str(report))
        self.report = report


_CHARS = {"+": 1, "-": -1, "0": 0}


class SignVector:
    """A map from ``range(n)`` to {+1, -1, 0}."""

    __slots__ = ("n", "neg", "pos")

    def __init__(self, n: int, pos: int = 0, neg: int = 0):
        if pos & neg:
            raise ValueError("positive and negative parts overlap")
        if n > MAX_GROUND:
            raise ValueError(f"ground sets are limited to {MAX_GROUND} elements")
        if (pos | neg) >> n:
            raise ValueError("support outside ground set")
        self.n = n
        self.pos = pos
        self.neg = neg

    @classmethod
    def from_str(cls, s: str) -> SignVector:
        pos = neg = 0
        for i, ch in enumerate(s):
            v = _CHARS.get(ch)
            if v is None:
                raise ValueError(f"bad sign character {ch!r} in {s!r}")
            if v > 0:
                pos |= 1 << i
            elif v < 0:
                neg |= 1 << i
        return cls(len(s), pos, neg)

    @classmethod
    def from_signs(cls, signs: Iterable[int]) -> SignVector:
        pos = neg = 0
        n = 0
        for i, v in enumerate(signs):
            n = i + 1
            if v > 0:
                pos |= 1 << i
            elif v < 0:
                neg |= 1 << i
        return cls(n, pos, neg)

    @classmethod
    def zero(cls, n: int) -> SignVector:
        return cls(n, 0, 0)

    def __getitem__(self, i: int) -> int:
        b = 1 << i
        if self.pos & b:
            return 1
        if self.neg & b:
            return -1
        return 0

    def __iter__(self):
        return (self[i] for i in range(self.n))

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SignVector)
            and self.n == other.n
            and self.pos == other.pos
            and self.neg == other.neg
        )

    def __hash__(self) -> int:
        return hash((self.n, self.pos, self.neg))

    def __neg__(self) -> SignVector:
        return SignVector(self.n, self.neg, self.pos)

    def __str__(self) -> str:
        return "".join("+" if v > 0 else "-" if v < 0 else "0" for v in self)

    def __repr__(self) -> str:
        return f"SignVector('{self}')"

    @property
    def support_mask(self) -> int:
        return self.pos | self.neg

    @property
    def zero_mask(self) -> int:
        return ((1 << self.n) - 1) & ~(self.pos | self.neg)

    def support(self) -> frozenset[int]:
        return _bits(self.support_mask)

    def zero_set(self) -> frozenset[int]:
        return _bits(self.zero_mask)

    def is_zero(self) -> bool:
        return not (self.pos | self.neg)

    def compose(self, other: SignVector) -> SignVector:
        if self.n != other.n:
            raise DimensionError(f"ground sets differ: {self.n} vs {other.n}")
        s = self.pos | self.neg
        return SignVector(self.n, self.pos | (other.pos & ~s), self.neg | (other.neg & ~s))

    def is_face_of(self, other: SignVector) -> bool:
        """True when ``self`` conforms to ``other`` (self o other == other)."""
        return not (self.pos & ~other.pos) and not (self.neg & ~other.neg)

    def separation(self, other: SignVector) -> int:
        return (self.pos & other.neg) | (self.neg & other.pos)

    def restrict(self, keep: Sequence[int]) -> SignVector:
        pos = neg = 0
        for j, i in enumerate(keep):
            b = 1 << i
            if self.pos & b:
                pos |= 1 << j
            elif self.neg & b:
                neg |= 1 << j
        return SignVector(len(keep), pos, neg)

    def reorient(self, mask: int) -> SignVector:
        keep = ~mask
        return SignVector(
            self.n, (self.pos & keep) | (self.neg & mask), (self.neg & keep) | (self.pos & mask)
        )


def compose(x: SignVector, y: SignVector) -> SignVector:
    return x.compose(y)


def orthogonal(x: SignVector, y: SignVector) -> bool:
    agree = (x.pos & y.pos) | (x.neg & y.neg)
    disagree = (x.pos & y.neg) | (x.neg & y.pos)
    return (agree == 0) == (disagree == 0)


def _bits(mask: int) -> frozenset[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return frozenset(out)


def _mask(indices: Iterable[int]) -> int:
    m = 0
    for i in indices:
        m |= 1 << i
    return m


# ---------------------------------------------------------------------------
# axioms


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str = ""
    witness: tuple = ()

    def __bool__(self) -> bool:
        return self.ok

    def __str__(self) -> str:
        if self.ok:
            return "pass"
        return f"fail: {self.axiom} violated by " + ", ".join(str(w) for w in self.witness)


def check_axioms(cands: Iterable[SignVector]) -> AxiomReport:
    """Check the signed circuit axioms (equivalently the cocircuit axioms).

    Nonzero, symmetry under negation, incomparable supports and signed
    elimination are checked; the first failure is reported with witnesses.
    """
    vecs = list(dict.fromkeys(cands))
    if not vecs:
        return AxiomReport(True)
    n = vecs[0].n
    for v in vecs:
        if v.n != n:
            return AxiomReport(False, "common ground set", (vecs[0], v))
        if v.is_zero():
            return AxiomReport(False, "nonzero", (v,))
    present = set(vecs)
    for v in vecs:
        if -v not in present:
            return AxiomReport(False, "symmetry", (v,))
    for x, y in itertools.combinations(vecs, 2):
        sx, sy = x.support_mask, y.support_mask
        if (sx & sy) in (sx, sy) and x != -y:
            return AxiomReport(False, "incomparability", (x, y))
    by_zero: dict[int, list[SignVector]] = {}
    for e in range(n):
        by_zero[e] = [z for z in vecs if not (z.support_mask >> e) & 1]
    for x, y in itertools.combinations(vecs, 2):
        if x == -y:
            continue
        sep = x.separation(y)
        if not sep:
            continue
        up, un = x.pos | y.pos, x.neg | y.neg
        for e in _bits(sep):
            if not any(not (z.pos & ~up) and not (z.neg & ~un) for z in by_zero[e]):
                return AxiomReport(False, "elimination", (x, y, f"e={e}"))
    return AxiomReport(True)


# ---------------------------------------------------------------------------
# oriented matroids


@dataclass(frozen=True)
class CovectorLattice:
    n: int
    rank: int
    covectors: frozenset[SignVector]
    topes: tuple[SignVector, ...]
    rho: dict = field(compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.covectors)

    def __contains__(self, x) -> bool:
        return x in self.covectors


class OrientedMatroid:
    """An oriented matroid on labelled ground set, carried by its cocircuits."""

    def __init__(
        self,
        ground: Sequence[str],
        cocircuits: Iterable[SignVector],
        chirotope: dict | None = None,
        validate: bool = False,
    ):
        self.ground = tuple(str(g) for g in ground)
        if len(set(self.ground)) != len(self.ground):
            raise ValueError("duplicate ground labels")
        self.n = len(self.ground)
        if self.n > MAX_GROUND:
            raise ValueError(f"at most {MAX_GROUND} ground elements are supported")
        cocs = frozenset(cocircuits)
        for y in cocs:
            if y.n != self.n:
                raise DimensionError("cocircuit length does not match the ground set")
        self.cocircuits = cocs
        self.chirotope = chirotope
        if validate:
            report = check_axioms(cocs)
            if not report:
                raise AxiomError(report)

    # -- identity ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OrientedMatroid)
            and self.ground == other.ground
            and self.cocircuits == other.cocircuits
        )

    def __hash__(self) -> int:
        return hash((self.ground, self.cocircuits))

    def __repr__(self) -> str:
        return f"OrientedMatroid(n={self.n}, rank={self.rank}, |C*|={len(self.cocircuits)})"

    def index(self, label) -> int:
        return self.ground.index(str(label))

    def indices(self, labels: Iterable) -> list[int]:
        return [self.index(x) for x in labels]

    def relabel(self, ground: Sequence[str]) -> OrientedMatroid:
        return OrientedMatroid(ground, self.cocircuits)

    # -- underlying matroid -------------------------------------------------
    @cached_property
    def _hyperplanes(self) -> tuple[int, ...]:
        return tuple({y.zero_mask for y in self.cocircuits})

    def is_spanning(self, mask: int) -> bool:
        return all(mask & ~h for h in self._hyperplanes)

    @cached_property
    def rank(self) -> int:
        if not self.cocircuits:
            return 0
        full = (1 << self.n) - 1
        cur = full
        for i in range(self.n):
            trial = cur & ~(1 << i)
            if self.is_spanning(trial):
                cur = trial
        return bin(cur).count("1")

    @cached_property
    def basis_masks(self) -> frozenset[int]:
        r = self.rank
        out = set()
        for comb in itertools.combinations(range(self.n), r):
            m = _mask(comb)
            if self.is_spanning(m):
                out.add(m)
        return frozenset(out)

    def is_independent(self, mask: int) -> bool:
        return any(mask & ~b == 0 for b in self.basis_masks)

    def rank_of(self, mask: int) -> int:
        memo = self.__dict__.setdefault("_rank_memo", {})
        r = memo.get(mask)
        if r is None:
            r = max(bin(mask & b).count("1") for b in self.basis_masks)
            memo[mask] = r
        return r

    @cached_property
    def circuit_supports(self) -> frozenset[int]:
        found: list[int] = []
        for k in range(1, self.rank + 2):
            for comb in itertools.combinations(range(self.n), k):
                m = _mask(comb)
                if any(c & ~m == 0 for c in found):
                    continue
                if not self.is_independent(m):
                    found.append(m)
        return frozenset(found)

    @cached_property
    def circuits(self) -> frozenset[SignVector]:
        """Minimal-support sign vectors orthogonal to every cocircuit."""
        out = set()
        cocs = list(self.cocircuits)
        for supp in self.circuit_supports:
            idx = sorted(_bits(supp))
            relevant = [y for y in cocs if y.support_mask & supp]
            rest = idx[1:]
            hit = None
            for signs in itertools.product((0, 1), repeat=len(rest)):
                neg = 0
                for i, s in zip(rest, signs):
                    if s:
                        neg |= 1 << i
                x = SignVector(self.n, supp & ~neg, neg)
                if all(orthogonal(x, y) for y in relevant):
                    hit = x
                    break
            if hit is None:
                raise AxiomError(AxiomReport(False, "orthogonality", (supp,)))
            out.add(hit)
            out.add(-hit)
        return frozenset(out)

    def bases(self) -> set[frozenset[int]]:
        return {_bits(m) for m in self.basis_masks}

    def bases_labels(self) -> set[frozenset[str]]:
        return {frozenset(self.ground[i] for i in _bits(m)) for m in self.basis_masks}

    def loops(self) -> frozenset[int]:
        covered = 0
        for y in self.cocircuits:
            covered |= y.support_mask
        return _bits(((1 << self.n) - 1) & ~covered)

    def coloops(self) -> frozenset[int]:
        return frozenset(i for i in range(self.n) if SignVector(self.n, 1 << i, 0) in self.cocircuits)

    # -- chirotope consistency ----------------------------------------------
    def chirotope_consistent(self) -> bool:
        """Check the attached chirotope against the stored cocircuits."""
        if self.chirotope is None:
            return True
        return chirotope_cocircuits(self.n, self.rank, self.chirotope) == self.cocircuits

    # -- covectors -----------------------------------------------------------
    def covector_lattice(self, max_covectors: int = DEFAULT_MAX_COVECTORS) -> CovectorLattice:
        cached = self.__dict__.get("_lattice")
        if cached is not None:
            return cached
        lat = covector_lattice(self, max_covectors)
        self.__dict__["_lattice"] = lat
        return lat


def chirotope_cocircuits(n: int, r: int, chi: dict) -> frozenset[SignVector]:
    """Cocircuits from a chirotope keyed by sorted index tuples."""
    out = set()
    for s in itertools.combinations(range(n), r - 1):
        sset = set(s)
        signs = []
        for e in range(n):
            if e in sset:
                signs.append(0)
                continue
            t = tuple(sorted(s + (e,)))
            # sign of moving e from the end into sorted position
            inv = sum(1 for x in s if x > e)
            v = chi.get(t, 0) * (-1 if inv % 2 else 1)
            signs.append(v)
        y = SignVector.from_signs(signs)
        if not y.is_zero():
            out.add(y)
            out.add(-y)
    return frozenset(out)


def covector_lattice(M: OrientedMatroid, max_covectors: int = DEFAULT_MAX_COVECTORS) -> CovectorLattice:
    """Closure of the cocircuits under composition, together with zero."""
    n = M.n
    full = (1 << n) - 1
    cocs = [y.pos | (y.neg << n) for y in M.cocircuits]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            s = (x | (x >> n)) & full
            blank = ~(s | (s << n))
            for y in cocs:
                z = x | (y & blank)
                if z not in seen:
                    seen.add(z)
                    nxt.append(z)
                    if len(seen) > max_covectors:
                        raise ResourceError(f"covector lattice exceeds {max_covectors} elements")
        frontier = nxt
    covs = [SignVector(n, c & full, c >> n) for c in seen]
    r = M.rank
    rho = {c: r - M.rank_of(c.zero_mask) for c in covs}
    topes = tuple(sorted((c for c in covs if rho[c] == r), key=sign_key))
    return CovectorLattice(n, r, frozenset(covs), topes, rho)


def sign_key(x: SignVector) -> str:
    """Lexicographic order on sign strings with + < - < 0."""
    return str(x).replace("+", "a").replace("-", "b").replace("0", "c")


# ---------------------------------------------------------------------------
# constructions


def dual(M: OrientedMatroid) -> OrientedMatroid:
    return OrientedMatroid(M.ground, M.circuits)


def _minimal(vecs: Iterable[SignVector]) -> set[SignVector]:
    vecs = [v for v in set(vecs) if not v.is_zero()]
    supports = {v.support_mask for v in vecs}
    keep = {s for s in supports if not any(t != s and t & ~s == 0 for t in supports)}
    return {v for v in vecs if v.support_mask in keep}


def minor(M: OrientedMatroid, delete: Iterable = (), contract: Iterable = ()) -> OrientedMatroid:
    """``M \\ delete / contract``; elements are given by label or index."""
    d = {_as_index(M, x) for x in delete}
    c = {_as_index(M, x) for x in contract}
    if d & c:
        raise ValueError(f"delete and contract overlap: {sorted(d & c)}")
    keep = [i for i in range(M.n) if i not in d and i not in c]
    cmask = _mask(c)
    vanishing = [y for y in M.cocircuits if not (y.support_mask & cmask)]
    restricted = {y.restrict(keep) for y in vanishing}
    cocs = _minimal(restricted)
    return OrientedMatroid([M.ground[i] for i in keep], cocs)


def deletion(M: OrientedMatroid, S: Iterable) -> OrientedMatroid:
    return minor(M, delete=S)


def contraction(M: OrientedMatroid, S: Iterable) -> OrientedMatroid:
    return minor(M, contract=S)


def reorient(M: OrientedMatroid, S: Iterable) -> OrientedMatroid:
    m = _mask(_as_index(M, x) for x in S)
    return OrientedMatroid(M.ground, {y.reorient(m) for y in M.cocircuits})


def bases(M: OrientedMatroid) -> set[frozenset[int]]:
    return M.bases()


def _as_index(M: OrientedMatroid, x) -> int:
    """Integers are positions in the ground set; strings are labels."""
    if isinstance(x, int) and not isinstance(x, bool):
        if not 0 <= x < M.n:
            raise IndexError(x)
        return x
    return M.index(x)


def uniform(d: int, n: int, labels: Sequence[str] | None = None) -> OrientedMatroid:
    """The alternating (cyclic-polytope) orientation of the uniform matroid U_{d,n}."""
    labels = labels or [str(i + 1) for i in range(n)]
    chi = {t: 1 for t in itertools.combinations(range(n), d)}
    return OrientedMatroid(labels, chirotope_cocircuits(n, d, chi), chirotope=chi)
