"""Seeded samplers and the named property suites the CLI drives.

Everything is driven by one ``random.Random(seed)`` stream, so a (suite,
count, seed, backend) quadruple fully determines the run and the emitted
report is byte-stable.  Each suite checks one exact identity per sample
and reports the first counterexample if any.
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import tame, wild
from .errors import ParseError
from .matrices import Mat2, sl2_from_rng
from .scalars import EXACT, GaussianRational


# ---------------------------------------------------------------------------
# Samplers
# ---------------------------------------------------------------------------

def rational(rng, num=6, den=4):
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def scalar(rng, num=6, den=4):
    return GaussianRational(rational(rng, num, den), rational(rng, num, den))


def nonzero_rational(rng, num=6, den=4):
    while True:
        v = rational(rng, num, den)
        if v != 0:
            return v


def sl2(rng, bound=60):
    return sl2_from_rng(rng, bound)


def triple(rng, bound=60):
    return tame.TameTriple(sl2(rng, bound), sl2(rng, bound), sl2(rng, bound))


def triple_with_rational_eigenvalue(rng, bound=60):
    """Triple whose first matrix is diag(alpha, 1/alpha), alpha != 0, +-1."""
    while True:
        alpha = Fraction(rng.randint(1, 5), rng.randint(1, 5))
        if rng.random() < 0.5:
            alpha = -alpha
        if alpha not in (0, 1, -1):
            break
    a = GaussianRational(alpha)
    m1 = Mat2(a, EXACT.zero, EXACT.zero, a ** -1)
    return tame.TameTriple(m1, sl2(rng, bound), sl2(rng, bound)), a


def nonresonant_lambda(rng):
    while True:
        lam = rational(rng, 5, 3)
        if lam not in (0, 1, -1):
            return GaussianRational(lam)


def wild_rep(rng, bound=40, nonzero_stokes=False):
    m0 = sl2(rng, bound)
    u1 = rational(rng, 4, 3)
    u2 = rational(rng, 4, 3)
    if nonzero_stokes:
        u1 = nonzero_rational(rng, 4, 3)
        u2 = nonzero_rational(rng, 4, 3)
    return wild.WildRep.from_matrices(
        m0, GaussianRational(u1), GaussianRational(u2),
        nonresonant_lambda(rng))


def wild_rep_generic(rng, bound=40):
    """Nonzero Stokes entries, so s != 2 and the invariants are complete."""
    return wild_rep(rng, bound, nonzero_stokes=True)


# ---------------------------------------------------------------------------
# Suites
# ---------------------------------------------------------------------------

def _fail(sample_index, what, **context):
    detail = {"sample": sample_index, "check": what}
    detail.update(context)
    return detail


def suite_fricke(rng, index):
    """Sum and product of the two ordered triple-product traces are P, Q."""
    t = triple(rng)
    p = tame.tame_traces(t)
    m1, m2, m3 = t.matrices
    x123 = (m1 * m2 * m3).trace()
    x132 = (m1 * m3 * m2).trace()
    P, Q = tame.fricke_P_Q(p)
    if x123 + x132 != P:
        return _fail(index, "sum != P", point=p.to_json())
    if x123 * x132 != Q:
        return _fail(index, "product != Q", point=p.to_json())
    if tame.fricke_residual(p) != EXACT.zero:
        return _fail(index, "residual != 0", point=p.to_json())
    return None


def suite_extended_fricke(rng, index):
    t = triple(rng)
    direct = tame.extended_traces(*t.matrices)
    formula = tame.extended_traces_formula(tame.tame_traces(t))
    if direct != formula:
        return _fail(index, "extended trace formulas disagree",
                     point=tame.tame_traces(t).to_json())
    return None


def suite_tame_oracle(rng, index):
    t = triple(rng)
    p = tame.tame_traces(t)
    for i in (1, 2, 3):
        via_coords = tame.braid_coord_action(i, p)
        via_matrices = tame.tame_traces(tame.braid_matrix_action(i, t))
        if via_coords != via_matrices:
            return _fail(index, "h%d coordinate map != matrix map" % i,
                         point=p.to_json())
        back = tame.braid_coord_action_inverse(i, via_coords)
        if back != p:
            return _fail(index, "h%d inverse map fails" % i, point=p.to_json())
    return None


def suite_wild_oracle(rng, index):
    r = wild_rep(rng)
    p = wild.wild_traces(r)
    if wild.wild_residual(p) != EXACT.zero:
        return _fail(index, "trace image off the cubic", point=p.to_json())
    via_coords = wild.pure_braid_coords(p)
    via_matrices = wild.wild_traces(wild.pure_braid_matrix(r))
    if via_coords.coords != via_matrices.coords:
        return _fail(index, "pure coordinate map != matrix map",
                     point=p.to_json())
    full_coords = wild.full_braid_coords(p)
    full_matrices = wild.wild_traces(wild.full_braid_matrix(r))
    if full_coords.coords != full_matrices.coords:
        return _fail(index, "full coordinate map != matrix map",
                     point=p.to_json())
    return None


def suite_roundtrips(rng, index):
    t, alpha = triple_with_rational_eigenvalue(rng)
    p = tame.tame_traces(t)
    rebuilt = tame.tame_reconstruct(p, alpha)
    if tame.tame_traces(rebuilt) != p:
        return _fail(index, "tame reconstruct does not re-trace",
                     point=p.to_json())
    r = wild_rep_generic(rng)
    q = wild.wild_traces(r)
    rec = wild.wild_reconstruct(q)
    if wild.wild_traces(rec).coords != q.coords:
        return _fail(index, "wild reconstruct does not re-trace",
                     point=q.to_json())
    if wild.wild_equiv_invariants(rec) != wild.wild_equiv_invariants(r):
        return _fail(index, "reconstruct changes the equivalence invariants",
                     point=q.to_json())
    return None


def suite_involution(rng, index):
    r = wild_rep(rng)
    p = wild.wild_traces(r)
    twice = wild.chart_swap(wild.chart_swap(p))
    if twice != p:
        return _fail(index, "chart swap is not an involution",
                     point=p.to_json())
    if wild.wild_residual(wild.chart_swap(p)) != EXACT.zero:
        return _fail(index, "chart swap leaves the cubic", point=p.to_json())
    return None


def suite_full_squared(rng, index):
    r = wild_rep(rng)
    p = wild.wild_traces(r)
    twice = wild.full_braid_coords(wild.full_braid_coords(p))
    once = wild.pure_braid_coords(p)
    if twice.coords != once.coords:
        return _fail(index, "full applied twice != pure", point=p.to_json())
    return None


SUITES = {
    "fricke": suite_fricke,
    "extended-fricke": suite_extended_fricke,
    "tame-oracle": suite_tame_oracle,
    "wild-oracle": suite_wild_oracle,
    "roundtrips": suite_roundtrips,
    "involution": suite_involution,
    "full-squared": suite_full_squared,
}


def run_suites(names, count, seed, registry=None):
    """Run named suites and assemble a deterministic report dict."""
    registry = SUITES if registry is None else registry
    report = {"seed": seed, "count": count, "suites": {}, "ok": True}
    for name in names:
        if name not in registry:
            raise ParseError(
                "unknown suite %r; valid: %s"
                % (name, ", ".join(sorted(registry))))
        check = registry[name]
        rng = random.Random("%d:%s" % (seed, name))
        failures = 0
        first = None
        for index in range(count):
            result = check(rng, index)
            if result is not None:
                failures += 1
                if first is None:
                    first = result
        entry = {
            "samples": count,
            "failures": failures,
            "passed": failures == 0,
            "first_counterexample": first,
        }
        report["suites"][name] = entry
        report["ok"] = report["ok"] and entry["passed"]
    return report
