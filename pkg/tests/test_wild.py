import random
from fractions import Fraction

import pytest

from fricke.errors import (
    BoundaryPointError,
    OffSurfaceError,
    ResonantEigenvalueError,
)
from fricke.matrices import Mat2
from fricke.scalars import EXACT
from fricke.wild import (
    WildPoint,
    WildRep,
    chart_swap,
    chart_swap_matrix,
    coords_from_invariants,
    full_braid_coords,
    full_braid_matrix,
    full_braid_via_groupoid,
    pure_braid_coords,
    pure_braid_coords_inverse,
    pure_braid_matrix,
    pure_braid_matrix_inverse,
    pure_braid_via_groupoid,
    solve_invariants,
    wild_equiv_invariants,
    wild_fiber_coordinates,
    wild_reconstruct,
    wild_residual,
    wild_residual_truncated,
    wild_traces,
)
from fricke import verify as V

g = EXACT.scalar
I = Mat2.identity(EXACT)

DERIVED_REP = WildRep.from_matrices(I, g(1), g(1), g(2))
DERIVED = wild_traces(DERIVED_REP)  # (2, 2, 9/2, 3, 3, 5/2)
TRIVIAL = wild_traces(WildRep.from_matrices(I, g(0), g(0), g(2)))


def coords(p):
    return [str(v) for v in p.coords]


def test_traces_trivial_stokes():
    assert coords(TRIVIAL) == ["2", "2", "5/2", "2", "2", "5/2"]


def test_traces_derived_point():
    assert coords(DERIVED) == ["2", "2", "9/2", "3", "3", "5/2"]
    stokes = DERIVED_REP.stokes1() * DERIVED_REP.stokes2()
    assert stokes == Mat2(g(2), g(1), g(1), g(1))


def test_traces_always_on_cubic():
    rng = random.Random(0)
    for _ in range(1000):
        assert wild_residual(wild_traces(V.wild_rep(rng))) == EXACT.zero


def test_residual_worked_values():
    assert wild_residual(DERIVED) == EXACT.zero
    assert wild_residual(TRIVIAL) == EXACT.zero
    assert wild_residual(DERIVED.replace(t1=DERIVED.t1 + 1)) != EXACT.zero
    # the quadratic in t1 has distinct roots here: perturbation moves off
    assert wild_residual(DERIVED.replace(t1=DERIVED.t1 - 1)) != EXACT.zero


def test_residual_rejects_lambda_zero():
    with pytest.raises(ResonantEigenvalueError):
        wild_residual(DERIVED.replace(lam=g(0)))


def test_truncated_residual_regression():
    # matrix-generated points satisfy the full cubic, never the truncated one
    rng = random.Random(1)
    for _ in range(100):
        p = wild_traces(V.wild_rep(rng))
        assert wild_residual(p) == EXACT.zero
        assert wild_residual_truncated(p) != EXACT.zero


def test_reconstruct_worked_example():
    rep = wild_reconstruct(DERIVED)
    assert rep.m0() == I
    assert (rep.u1, rep.u2) == (g(1), g(1))
    inv = wild_equiv_invariants(rep)
    assert inv.values == (g(2), g(1), g(0), g(0), g(1), g(1))


def test_reconstruct_gates():
    with pytest.raises(BoundaryPointError):
        wild_reconstruct(TRIVIAL)  # s = 2
    with pytest.raises(ResonantEigenvalueError):
        wild_reconstruct(DERIVED.replace(lam=g(1)))
    with pytest.raises(ResonantEigenvalueError):
        wild_reconstruct(DERIVED.replace(lam=g(-1)))
    with pytest.raises(OffSurfaceError) as err:
        wild_reconstruct(DERIVED.replace(x=DERIVED.x + 1))
    assert err.value.residual is not None


def test_reconstruct_roundtrip():
    rng = random.Random(2)
    for _ in range(500):
        r = V.wild_rep_generic(rng)
        p = wild_traces(r)
        rec = wild_reconstruct(p)
        assert rec.u1 == EXACT.one
        assert wild_traces(rec).coords == p.coords
        assert rec.m0().det() == EXACT.one
        assert wild_equiv_invariants(rec) == wild_equiv_invariants(r)


def test_equiv_invariants_diagonal_conjugation():
    rng = random.Random(3)
    for _ in range(100):
        r = V.wild_rep(rng)
        a = g(V.nonzero_rational(rng))
        d = Mat2(a, g(0), g(0), a ** -1)
        conj = WildRep.from_matrices(
            d * r.m0() * d.inv(), a * a * r.u1, r.u2 / (a * a), r.lam)
        assert wild_equiv_invariants(conj) == wild_equiv_invariants(r)


def _conjugate_by_alpha_squared(r, asq):
    # D_alpha acts through alpha^2 only: b, u1 scale up, c, u2 scale down
    m0 = Mat2(r.a0, asq * r.b0, r.c0 / asq, r.d0)
    return WildRep.from_matrices(m0, asq * r.u1, r.u2 / asq, r.lam)


def test_equiv_invariants_complete_with_nonzero_stokes():
    # equal invariant tuples with u1 u2 != 0: alpha^2 = u1'/u1 is a witness
    rng = random.Random(4)
    for _ in range(50):
        r = V.wild_rep_generic(rng)
        a = g(V.nonzero_rational(rng))
        other = _conjugate_by_alpha_squared(r, a * a)
        assert wild_equiv_invariants(other) == wild_equiv_invariants(r)
        asq = other.u1 / r.u1
        assert _conjugate_by_alpha_squared(r, asq) == other


def test_trivial_rep_invariants():
    rep = WildRep.from_matrices(I, g(0), g(0), g(3))
    assert wild_equiv_invariants(rep).values == (
        g(3), g(0), g(0), g(0), g(1), g(1))


def test_determinant_relation_holds_for_all_reps():
    rng = random.Random(5)
    for _ in range(200):
        inv = wild_equiv_invariants(V.wild_rep(rng))
        assert inv.determinant_relation() == EXACT.zero


def test_chart_swap_worked_example():
    sw = chart_swap(DERIVED)
    assert (sw.lam, sw.s, sw.x, sw.y) == (g(Fraction(1, 2)), g(3), g(3), g(Fraction(5, 2)))
    assert sw.t0 == DERIVED.t0
    assert sw.chart == "minus"


def test_chart_swap_matches_displayed_x_formula():
    rng = random.Random(6)
    for _ in range(200):
        p = wild_traces(V.wild_rep(rng))
        lam = p.lam
        d = lam - lam ** -1
        ratio = (lam + lam ** -1) / d
        x_displayed = (p.x + p.t0 * ratio * p.s - (2 / d) * p.y * p.s
                       + (4 / d) * p.y - 2 * p.t0 * ratio)
        sw = chart_swap(p)
        assert sw.x == x_displayed
        assert (sw.s, sw.y, sw.t0) == (p.s, p.y, p.t0)


def test_chart_swap_is_exact_involution():
    rng = random.Random(7)
    for _ in range(500):
        p = wild_traces(V.wild_rep(rng))
        assert chart_swap(chart_swap(p)) == p


def test_chart_swap_involution_off_surface_too():
    # the coordinate map is an involution algebraically, not only on the cubic
    rng = random.Random(8)
    for _ in range(100):
        vals = [g(V.rational(rng)) for _ in range(6)]
        lam = g(V.nonzero_rational(rng))
        if lam in (g(1), g(-1)):
            continue
        p = WildPoint(lam, *vals[1:], backend_name="exact")
        assert chart_swap(chart_swap(p)).coords == p.coords


def test_chart_swap_matrix_oracle():
    rng = random.Random(9)
    for _ in range(300):
        r = V.wild_rep(rng)
        p = wild_traces(r)
        sw = chart_swap(p)
        swr = chart_swap_matrix(r)
        assert wild_traces(swr).coords == sw.coords
        assert wild_residual(sw) == EXACT.zero
        # matrix map is an involution in normalized shape
        assert chart_swap_matrix(swr) == r


def test_chart_swap_t1_is_the_transported_root():
    # t1 goes to tr(M0 U2 U1 Mhat): fixing it would leave the cubic
    r = WildRep.from_matrices(Mat2(g(1), g(2), g(1), g(3)), g(1), g(2), g(3))
    p = wild_traces(r)
    sw = chart_swap(p)
    direct = (r.m0() * r.stokes2() * r.stokes1() * r.mhat()).trace()
    assert sw.t1 == direct
    assert sw.t1 != p.t1
    assert wild_residual(sw.replace(t1=p.t1)) != EXACT.zero


def test_pure_matrix_examples():
    assert pure_braid_matrix(DERIVED_REP) == DERIVED_REP  # M0 = I is central
    rng = random.Random(10)
    for _ in range(100):
        r = V.wild_rep(rng)
        moved = pure_braid_matrix(r)
        conj = r.m_infinity()
        assert moved.m0() == conj.inv() * r.m0() * conj
        assert (moved.u1, moved.u2, moved.lam) == (r.u1, r.u2, r.lam)
        q = wild_traces(moved)
        p = wild_traces(r)
        assert (q.t0, q.t1, q.lam, q.s) == (p.t0, p.t1, p.lam, p.s)
        assert pure_braid_matrix_inverse(moved) == r


def test_pure_coords_trivial_stokes_slice():
    rng = random.Random(11)
    for _ in range(50):
        m0 = V.sl2(rng)
        r = WildRep.from_matrices(m0, g(0), g(0), V.nonresonant_lambda(rng))
        p = wild_traces(r)
        q = pure_braid_coords(p)
        assert (q.x, q.y) == (p.x, p.y)


def test_pure_coords_fixed_point_example():
    q = pure_braid_coords(DERIVED)
    assert q.coords == DERIVED.coords


def test_pure_oracle_equivalence():
    rng = random.Random(12)
    for _ in range(1000):
        r = V.wild_rep(rng)
        p = wild_traces(r)
        assert pure_braid_coords(p).coords == wild_traces(pure_braid_matrix(r)).coords


def test_pure_coords_inverse():
    rng = random.Random(13)
    for _ in range(200):
        p = wild_traces(V.wild_rep(rng))
        assert pure_braid_coords_inverse(pure_braid_coords(p)) == p
        assert pure_braid_coords(pure_braid_coords_inverse(p)) == p


def test_full_matrix_worked_example():
    moved = full_braid_matrix(DERIVED_REP)
    assert moved.m0() == I
    assert moved.stokes1() == Mat2(g(1), g(-1), g(0), g(1))
    assert moved.stokes2() == Mat2(g(1), g(0), g(-4), g(1))
    assert moved.mhat() == Mat2(g(Fraction(1, 2)), g(0), g(0), g(2))


def test_full_lambda_always_inverts():
    rng = random.Random(14)
    for _ in range(50):
        r = V.wild_rep(rng)
        assert full_braid_matrix(r).lam == r.lam ** -1


def test_full_coords_worked_example():
    q = full_braid_coords(DERIVED)
    assert coords(q) == ["1/2", "2", "9/2", "6", "6", "5/2"]
    assert q.chart == "minus"


def test_full_oracle_equivalence():
    rng = random.Random(15)
    for _ in range(1000):
        r = V.wild_rep(rng)
        p = wild_traces(r)
        assert full_braid_coords(p).coords == wild_traces(full_braid_matrix(r)).coords


def test_full_s_law_and_s2_slice():
    rng = random.Random(16)
    for _ in range(100):
        r = V.wild_rep(rng)
        p = wild_traces(r)
        q = full_braid_coords(p)
        assert q.s == 2 + p.lam ** 2 * (p.s - 2)
        assert (q.t0, q.t1) == (p.t0, p.t1)
    m0 = V.sl2(random.Random(17))
    slice_rep = WildRep.from_matrices(m0, g(0), g(0), g(5))
    q = full_braid_coords(wild_traces(slice_rep))
    assert q.s == g(2)


def test_full_twice_equals_pure():
    rng = random.Random(18)
    for _ in range(500):
        p = wild_traces(V.wild_rep(rng))
        twice = full_braid_coords(full_braid_coords(p))
        once = pure_braid_coords(p)
        assert twice.coords == once.coords
        assert twice.chart == "plus"


def test_full_twice_matrix_equivalent_to_pure():
    rng = random.Random(19)
    for _ in range(200):
        r = V.wild_rep(rng)
        twice = full_braid_matrix(full_braid_matrix(r))
        once = pure_braid_matrix(r)
        assert wild_equiv_invariants(twice) == wild_equiv_invariants(once)


def test_surface_invariance_of_all_moves():
    rng = random.Random(20)
    for _ in range(300):
        p = wild_traces(V.wild_rep(rng))
        assert wild_residual(pure_braid_coords(p)) == EXACT.zero
        assert wild_residual(full_braid_coords(p)) == EXACT.zero
        assert wild_residual(chart_swap(p)) == EXACT.zero


def test_groupoid_oracles_match_matrix_maps():
    rng = random.Random(21)
    for _ in range(100):
        r = V.wild_rep(rng)
        assert pure_braid_via_groupoid(r) == pure_braid_matrix(r)
        assert full_braid_via_groupoid(r) == full_braid_matrix(r)


def test_fiber_coordinates_split():
    p = DERIVED
    local, fiber = wild_fiber_coordinates(p)
    assert local == (p.t0, p.t1, p.lam)
    assert fiber == (p.s, p.x, p.y)
    q = pure_braid_coords(p)
    assert wild_fiber_coordinates(q)[0] == local
    qq = full_braid_coords(p)
    assert wild_fiber_coordinates(qq)[0] == (p.t0, p.t1, p.lam ** -1)


def test_fiber_is_cut_by_one_relation():
    # for fixed local data, the cubic genuinely constrains (s, x, y):
    # moving any single fiber coordinate off a surface point breaks it
    rng = random.Random(23)
    for _ in range(20):
        p = wild_traces(V.wild_rep(rng))
        assert wild_residual(p) == EXACT.zero
        assert wild_residual(p.replace(x=p.x + 1)) != EXACT.zero
        assert wild_residual(p.replace(y=p.y + 1)) != EXACT.zero


def test_solve_invariants_inverts_coords():
    rng = random.Random(22)
    for _ in range(100):
        r = V.wild_rep(rng)
        p = wild_traces(r)
        inv = solve_invariants(p)
        assert inv == wild_equiv_invariants(r)
        again = coords_from_invariants(inv, p.chart, p.backend_name)
        assert again == p


def test_float_backend_roundtrip_and_moves():
    from fricke.scalars import to_float

    rng = random.Random(24)
    for _ in range(20):
        r = V.wild_rep_generic(rng)
        p_exact = wild_traces(r)
        p = WildPoint(*[to_float(v) for v in p_exact.coords],
                      chart="plus", backend_name="float")
        rec = wild_reconstruct(p)
        err = max(abs(a - b)
                  for a, b in zip(wild_traces(rec).coords, p.coords))
        assert err <= 1e-6 * max(1.0, max(abs(v) for v in p.coords))
        sw_err = max(abs(a - b)
                     for a, b in zip(chart_swap(chart_swap(p)).coords,
                                     p.coords))
        assert sw_err <= 1e-6 * max(1.0, max(abs(v) for v in p.coords))


def test_point_json_roundtrip():
    data = DERIVED.to_json()
    assert data["chart"] == "plus"
    assert WildPoint.from_json(data) == DERIVED
    rep_data = DERIVED_REP.to_json()
    assert WildRep.from_json(rep_data) == DERIVED_REP
