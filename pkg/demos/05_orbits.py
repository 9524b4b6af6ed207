#!/usr/bin/env python3
"""Orbits of braid words: exact iteration, cycle detection, float drift.

Exact-backend orbits carry identically zero residuals; the float backend
records its drift, which stays tiny because the maps are polynomial and
the sample point is a fixed point of the pure move.
"""

import random
import time

from fricke import Mat2, TamePoint, WildPoint, WildRep, wild_traces
from fricke.orbit import detect_cycle, iterate, residual_drift
from fricke.scalars import EXACT, to_float
from fricke import tame
from fricke import verify as V

g = EXACT.scalar


def main():
    print("=" * 64)
    print("Exact orbits and cycle detection")
    print("=" * 64)
    fixed = TamePoint(*[g(2)] * 7)
    record = iterate(fixed, "h1", 10)
    print("  all-2 point under h1: period", detect_cycle(record))

    worked = TamePoint(g(2), g(2), g(4), g(8), g(3), g(6), g(5))
    record = iterate(worked, "h1", 50)
    print("  worked point under h1, 50 steps: period", detect_cycle(record),
          "| max residual", EXACT.format(residual_drift(record)))
    digits = max(
        len(str(v.re.numerator)) for v in record.points[-1].coords)
    print("  coordinate growth after 50 steps: up to %d digits" % digits)

    derived = wild_traces(
        WildRep.from_matrices(Mat2.identity(EXACT), g(1), g(1), g(2)))
    record = iterate(derived, "swap", 4)
    print("  derived wild point under swap: period", detect_cycle(record),
          "| chart log", record.charts)

    print()
    print("=" * 64)
    print("CSV export")
    print("=" * 64)
    rng = random.Random(1)
    p = tame.tame_traces(V.triple(rng))
    record = iterate(p, "h2 h3^-1", 3)
    for line in record.to_csv().splitlines()[:3]:
        print("  " + line)
    print("  ...")

    print()
    print("=" * 64)
    print("Float-backend drift audit (100000 pure steps)")
    print("=" * 64)
    float_point = WildPoint(*[to_float(v) for v in derived.coords],
                            chart="plus", backend_name="float")
    start = time.monotonic()
    record = iterate(float_point, "pure", 100_000)
    elapsed = time.monotonic() - start
    print("  steps: %d   drift: %.3e   time: %.2fs"
          % (len(record) - 1, abs(residual_drift(record)), elapsed))


if __name__ == "__main__":
    main()
