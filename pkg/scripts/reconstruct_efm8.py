"""Rebuild a full rank-4 oriented matroid program from the EFM(8) mu table.

Every sign the table pins down is a parity constraint on the chirotope of the
program (signs multiply, so over GF(2) they add):

* the optimal vertex of mu(b) is the cocircuit of M\\f vanishing on b with
  g-value +, and its remaining signs are those of mu(b);
* for i in b, mu(b)(i) is the i-sign of the cocircuit of M/g vanishing on
  b - {i} with f-value -.

The linear system is solved by elimination; the signs it leaves free (those
of 4-sets containing f but not g) are then searched by backtracking against
the three-term Grassmann-Pluecker relations.  The first chirotope found is
written as a program JSON file and re-validated end to end.

Usage: python scripts/reconstruct_efm8.py [--out PATH]
"""

from __future__ import annotations

import argparse
import itertools
import sys
from pathlib import Path

from omcat.io import dump_json, load_json, mu_table_from_json, program_to_json
from omcat.om_core import OrientedMatroid, check_axioms, chirotope_cocircuits
from omcat.om_program import Program

N_E, G, F, R = 6, 6, 7, 4
ELEMS = 8
QUADS = list(itertools.combinations(range(ELEMS), R))
VAR = {q: k for k, q in enumerate(QUADS)}


def ordered(t):
    """(variable index, parity of sorting permutation) for an ordered tuple."""
    inv = sum(1 for a, b in itertools.combinations(range(len(t)), 2) if t[a] > t[b])
    return VAR[tuple(sorted(t))], inv & 1


def bit(sign: int) -> int:
    return 0 if sign > 0 else 1


def build_system(table):
    rows = []  # (set of variable indices, rhs bit)

    def add(terms, rhs):
        vs = set()
        for t in terms:
            v, p = ordered(t)
            vs ^= {v}
            rhs ^= p
        rows.append((vs, rhs))

    for b, alpha in table.mu.items():
        bb = tuple(sorted(b))
        for e in range(N_E):
            if e in b:
                continue
            # alpha(e) = chi(b,e) * chi(b,g)
            add([bb + (e,), bb + (G,)], bit(alpha[e]))
        for i in bb:
            j, k = [x for x in bb if x != i]
            # alpha(i) = - chi(g,j,k,i) * chi(g,j,k,f)
            add([(G, j, k, i), (G, j, k, F)], bit(-alpha[i]))
    return rows


def solve_gf2(rows, nvars):
    pivots = {}
    for vs, rhs in rows:
        vs = set(vs)
        for p in [u for u in vs if u in pivots]:
            if p in vs:
                pvs, prhs = pivots[p]
                vs ^= pvs
                rhs ^= prhs
        if not vs:
            if rhs:
                return None
            continue
        p = min(vs)
        for q, (qvs, qrhs) in list(pivots.items()):
            if p in qvs:
                pivots[q] = (qvs ^ vs, qrhs ^ rhs)
        pivots[p] = (vs, rhs)
    free = [v for v in range(nvars) if v not in pivots]
    return pivots, free


def gp_relations():
    out = []
    for A in itertools.combinations(range(ELEMS), R - 2):
        rest = [x for x in range(ELEMS) if x not in A]
        for a, b, c, d in itertools.combinations(rest, 4):
            out.append(((A + (a, b), A + (c, d)), (A + (a, c), A + (b, d)), (A + (a, d), A + (b, c))))
    return out


def search(pivots, free, fix_sign: int | None = None):
    """Backtrack over the free variables; yield complete sign assignments."""
    rels = []
    for terms in gp_relations():
        enc = []
        for k, (t1, t2) in enumerate(terms):
            v1, p1 = ordered(t1)
            v2, p2 = ordered(t2)
            # the middle term carries a minus sign
            enc.append((v1, v2, p1 ^ p2 ^ (1 if k == 1 else 0)))
        rels.append(enc)

    def value(assign, v):
        if v in pivots:
            vs, rhs = pivots[v]
            x = rhs
            for u in vs:
                if u != v:
                    if u not in assign:
                        return None
                    x ^= assign[u]
            return x
        return assign.get(v)

    def ok(assign):
        for enc in rels:
            bits = []
            for v1, v2, p in enc:
                a, b = value(assign, v1), value(assign, v2)
                if a is None or b is None:
                    break
                bits.append(a ^ b ^ p)
            else:
                if len(set(bits)) == 1:
                    return False
        return True

    order = list(free)
    assign: dict[int, int] = {}

    def rec(k):
        if k == len(order):
            yield dict(assign)
            return
        v = order[k]
        for x in (0, 1):
            if k == 0 and fix_sign is not None and x != fix_sign:
                continue
            assign[v] = x
            if ok(assign):
                yield from rec(k + 1)
            del assign[v]

    yield from rec(0)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    root = Path(__file__).resolve().parents[1]
    ap.add_argument("--table", default=root / "src/omcat/data/efm8_mu_table.json")
    ap.add_argument("--out", default=root / "src/omcat/data/efm8.json")
    args = ap.parse_args(argv)

    table = mu_table_from_json(load_json(args.table))
    rows = build_system(table)
    sol = solve_gf2(rows, len(QUADS))
    if sol is None:
        print("mu table is inconsistent with any chirotope", file=sys.stderr)
        return 1
    pivots, free = sol
    print(f"{len(rows)} parity constraints, {len(pivots)} pivots, {len(free)} free signs")
    labels = [str(i + 1) for i in range(N_E)] + ["g", "f"]
    for assign in search(pivots, free, fix_sign=0):
        chi = {}
        for q, v in VAR.items():
            if v in pivots:
                vs, rhs = pivots[v]
                x = rhs
                for u in vs:
                    if u != v:
                        x ^= assign[u]
            else:
                x = assign[v]
            chi[q] = -1 if x else 1
        M = OrientedMatroid(labels, chirotope_cocircuits(ELEMS, R, chi), chirotope=chi)
        report = check_axioms(M.cocircuits)
        if not report:
            continue
        P = Program(M, "g", "f", name="efm8")
        if not P.is_generic():
            continue
        if P.mu != table.mu:
            continue
        doc = program_to_json(P)
        doc["provenance"] = ("Reconstructed from the EFM(8) mu table by parity elimination "
                             "and Grassmann-Pluecker backtracking (scripts/reconstruct_efm8.py).")
        dump_json(doc, args.out)
        print(f"wrote {args.out}; euclidean={P.is_euclidean()}")
        return 0
    print("no chirotope completion reproduces the table", file=sys.stderr)
    return 1


if __name__ == "__main__":
    sys.exit(main())
