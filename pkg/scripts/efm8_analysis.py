"""Study the eight-element non-Euclidean program.

Prints a directed cycle in its graph of feasible cocircuits, the Hilbert matrix computed
from the mu table alone, the Koszul residual, the self-dual projectives and
the palindromic rows, then checks the closed form against the path-algebra
oracle with the size bound lifted.

Usage: python scripts/efm8_analysis.py [--no-oracle]
"""

from __future__ import annotations

import argparse
import sys

from omcat.algebra import (
    dim_census,
    hilbert_matrix,
    koszul_identity,
    palindromic_row,
    self_dual_conditions,
)
from omcat.fixtures import efm8_program, efm8_table
from omcat.oracle import oracle_matches_closed_form


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--no-oracle", action="store_true")
    args = ap.parse_args(argv)

    T, P = efm8_table(), efm8_program()
    cycle = P.euclidean_cycle
    print("directed cycle of feasible cocircuits:", " -> ".join(str(a) for a in cycle))

    H = hilbert_matrix(T)
    assert H == hilbert_matrix(P)
    print(f"Hilbert matrix ({H.size} topes, total dimension {dim_census(P)}):")
    for a in H.order:
        print(f"  {a}: " + ", ".join(f"{b}:{H[a, b]}" for b in H.order if not H[a, b].is_zero()))

    rep = koszul_identity(T)
    print("Koszul identity:", "PASS" if rep.ok else f"FAIL residual {rep.residual}")

    covers, feasible = self_dual_conditions(P)
    pal = [a for a in H.order if palindromic_row(H, a)]
    print("self-dual projectives:", [str(a) for a in covers], "agree" if covers == feasible else "DISAGREE")
    print("palindromic rows:", [str(a) for a in pal])

    ok = rep.ok and covers == feasible
    if not args.no_oracle:
        agree = oracle_matches_closed_form(P, max_topes=len(H.order))
        print("oracle:", "agree" if agree else "DISAGREE")
        ok = ok and agree
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
