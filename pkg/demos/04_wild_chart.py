#!/usr/bin/env python3
"""The six-coordinate wild chart: cubic, reconstruction, chart transition.

Also demonstrates the truncated-cubic pitfall: dropping the product and
cross terms from P and Q produces a polynomial that matrix-generated
points do not satisfy, which is why the full substituted form is the one
implemented.
"""

import random

from fricke import (
    Mat2,
    WildRep,
    chart_swap,
    chart_swap_matrix,
    full_braid_coords,
    pure_braid_coords,
    wild_equiv_invariants,
    wild_reconstruct,
    wild_residual,
    wild_residual_truncated,
    wild_traces,
)
from fricke.scalars import EXACT
from fricke import verify as V

g = EXACT.scalar
fmt = EXACT.format


def show(label, p):
    print("  %-18s lambda=%s t0=%s t1=%s s=%s x=%s y=%s [%s]" % (
        (label,) + tuple(fmt(v) for v in p.coords) + (p.chart,)))


def main():
    print("=" * 64)
    print("One tuple and its coordinates")
    print("=" * 64)
    r = WildRep.from_matrices(Mat2.identity(EXACT), g(1), g(1), g(2))
    p = wild_traces(r)
    show("derived point:", p)
    print("  full cubic residual      :", fmt(wild_residual(p)))
    print("  truncated cubic residual :", fmt(wild_residual_truncated(p)),
          " <- nonzero: the truncation is wrong")

    rec = wild_reconstruct(p)
    print("  reconstruct: M0 = %r, u1 = %s, u2 = %s" % (
        rec.m0(), fmt(rec.u1), fmt(rec.u2)))
    print("  invariants preserved:",
          wild_equiv_invariants(rec) == wild_equiv_invariants(r))

    print()
    print("=" * 64)
    print("Chart transition (eigenvalue reordering)")
    print("=" * 64)
    sw = chart_swap(p)
    show("swapped:", sw)
    show("swapped twice:", chart_swap(sw))
    print("  involution holds:", chart_swap(sw) == p)
    print("  image still on the cubic:", fmt(wild_residual(sw)))
    print("  matrix route agrees:",
          wild_traces(chart_swap_matrix(r)).coords == sw.coords)
    print("  note t1 transforms to tr(M0 U2 U1 Mhat); holding it fixed")
    print("  would leave the cubic (see tests/test_wild.py).")

    print()
    print("=" * 64)
    print("Moves on a generic sample")
    print("=" * 64)
    rng = random.Random(3)
    q = wild_traces(V.wild_rep(rng))
    show("start:", q)
    show("pure:", pure_braid_coords(q))
    once = full_braid_coords(q)
    show("full:", once)
    show("full twice:", full_braid_coords(once))
    print("  full twice equals pure:",
          full_braid_coords(once).coords == pure_braid_coords(q).coords)


if __name__ == "__main__":
    main()
