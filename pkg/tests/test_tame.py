import random
from fractions import Fraction

import pytest

from fricke.errors import (
    NotARootError,
    OffSurfaceError,
    ParseError,
    ResonantTraceError,
)
from fricke.matrices import Mat2
from fricke.scalars import EXACT
from fricke.tame import (
    TamePoint,
    TameTriple,
    braid_coord_action,
    braid_coord_action_inverse,
    braid_matrix_action,
    braid_matrix_action_inverse,
    extended_traces,
    extended_traces_formula,
    fricke_P_Q,
    fricke_residual,
    pure_braid_relation_diagnostic,
    tame_eigenvalue_float,
    tame_reconstruct,
    tame_traces,
    triple_invariants,
)
from fricke import verify as V

g = EXACT.scalar
I = Mat2.identity(EXACT)

M1 = Mat2(g(1), g(1), g(0), g(1))
M2 = Mat2(g(1), g(0), g(1), g(1))
M3 = Mat2(g(1), g(2), g(1), g(3))
TRIPLE = TameTriple(M1, M2, M3)
POINT = tame_traces(TRIPLE)  # a=(2,2,4,8), x=(3,6,5)

ALL_TWO = TamePoint(*[g(2)] * 7)


def coords(p):
    return [str(v) for v in p.coords]


def test_traces_identity_triple():
    t = TameTriple(I, I, I)
    assert coords(tame_traces(t)) == ["2"] * 7


def test_traces_worked_examples():
    assert coords(POINT) == ["2", "2", "4", "8", "3", "6", "5"]
    other = TameTriple(M1, M2, Mat2(g(2), g(1), g(1), g(1)))
    assert coords(tame_traces(other)) == ["2", "2", "3", "7", "3", "4", "4"]


def test_m4_trace_matches_product():
    t = V.triple(random.Random(0))
    assert t.m4().trace() == (t.m1 * t.m2 * t.m3).trace()


def test_P_Q_examples():
    assert fricke_P_Q(ALL_TWO) == (g(4), g(4))
    assert fricke_P_Q(POINT) == (g(18), g(80))
    zero = TamePoint(*[g(0)] * 7)
    assert fricke_P_Q(zero) == (g(0), g(-4))


def test_residual_examples():
    assert fricke_residual(ALL_TWO) == EXACT.zero
    assert fricke_residual(POINT) == EXACT.zero
    assert fricke_residual(POINT.replace(a4=g(9))) == g(-1)


def test_traces_always_on_surface():
    rng = random.Random(1)
    for _ in range(200):
        assert fricke_residual(tame_traces(V.triple(rng))) == EXACT.zero


def test_extended_traces_identity():
    assert extended_traces(I, I, I) == (g(2), g(2))
    assert extended_traces_formula(tame_traces(TameTriple(I, I, I))) == (g(2), g(2))


def test_extended_traces_worked():
    assert extended_traces_formula(POINT) == (g(3), g(10))
    assert extended_traces(M1, M2, M3) == (g(3), g(10))


def test_extended_traces_agree_on_random_triples():
    rng = random.Random(2)
    for _ in range(1000):
        t = V.triple(rng)
        assert extended_traces(*t.matrices) == extended_traces_formula(tame_traces(t))


def test_braid_matrix_action_examples():
    t = TameTriple(I, I, I)
    assert braid_matrix_action(1, t) == t
    moved = braid_matrix_action(1, TRIPLE)
    assert moved.m1 == M1 and moved.m2 == M2
    assert moved.m3 == Mat2(g(-1), g(-1), g(6), g(5))
    p = tame_traces(moved)
    assert (p.x12, p.x23, p.x31) == (g(3), g(3), g(10))
    assert (p.a1, p.a2, p.a3, p.a4) == (POINT.a1, POINT.a2, POINT.a3, POINT.a4)


def test_braid_coord_action_examples():
    assert braid_coord_action(1, ALL_TWO) == ALL_TWO
    p = braid_coord_action(1, POINT)
    assert (p.x12, p.x23, p.x31) == (g(3), g(3), g(10))


def test_braid_oracle_and_surface_invariance():
    rng = random.Random(3)
    for _ in range(300):
        t = V.triple(rng)
        p = tame_traces(t)
        for i in (1, 2, 3):
            q = braid_coord_action(i, p)
            assert q == tame_traces(braid_matrix_action(i, t))
            assert fricke_residual(q) == EXACT.zero


def test_braid_actions_invert():
    rng = random.Random(4)
    for _ in range(100):
        t = V.triple(rng)
        p = tame_traces(t)
        for i in (1, 2, 3):
            assert braid_coord_action_inverse(i, braid_coord_action(i, p)) == p
            assert braid_coord_action(i, braid_coord_action_inverse(i, p)) == p
            assert braid_matrix_action_inverse(i, braid_matrix_action(i, t)) == t


def test_a4_invariant_under_all_moves():
    rng = random.Random(5)
    p = tame_traces(V.triple(rng))
    for i in (1, 2, 3):
        assert braid_coord_action(i, p).a4 == p.a4


def test_reconstruct_rejects_a1_two():
    alpha = g(1)
    with pytest.raises(ResonantTraceError):
        tame_reconstruct(POINT, alpha)


def test_reconstruct_rejects_non_root():
    with pytest.raises(NotARootError):
        tame_reconstruct(POINT, g(3))


def test_reconstruct_rejects_off_surface():
    # alpha = 2 solves X^2 - (5/2) X + 1; perturb a4 to force off-surface
    t, alpha = V.triple_with_rational_eigenvalue(random.Random(6))
    p = tame_traces(t).replace(a4=tame_traces(t).a4 + 1)
    with pytest.raises(OffSurfaceError) as err:
        tame_reconstruct(p, alpha)
    assert err.value.residual is not None


def test_reconstruct_roundtrip():
    rng = random.Random(7)
    for _ in range(500):
        t, alpha = V.triple_with_rational_eigenvalue(rng)
        p = tame_traces(t)
        rebuilt = tame_reconstruct(p, alpha)
        assert tame_traces(rebuilt) == p
        assert rebuilt.dets_are_one()
        assert rebuilt.m1 == Mat2(alpha, g(0), g(0), alpha ** -1)


def test_reconstruct_two_branches_are_transposition_conjugate():
    rng = random.Random(8)
    for _ in range(50):
        t, alpha = V.triple_with_rational_eigenvalue(rng)
        p = tame_traces(t)
        first = tame_reconstruct(p, alpha)
        second = tame_reconstruct(p, alpha ** -1)
        assert tame_traces(second) == p
        assert triple_invariants(second) == triple_invariants(first).swapped()


def test_reconstruct_degenerate_fill_in():
    # upper-triangular M2, M3: both mixed products vanish
    alpha = g(2)
    m1 = Mat2(alpha, g(0), g(0), alpha ** -1)
    m2 = Mat2(g(3), g(1), g(0), g(Fraction(1, 3)))
    m3 = Mat2(g(5), g(2), g(0), g(Fraction(1, 5)))
    p = tame_traces(TameTriple(m1, m2, m3))
    rebuilt = tame_reconstruct(p, alpha)
    assert tame_traces(rebuilt) == p


def test_triple_invariants_requires_diagonal():
    with pytest.raises(ParseError):
        triple_invariants(TRIPLE)


def test_triple_invariants_diagonal_conjugation():
    rng = random.Random(9)
    for _ in range(100):
        t, alpha = V.triple_with_rational_eigenvalue(rng)
        inv = triple_invariants(t)
        a = g(V.nonzero_rational(rng))
        d = Mat2(a, g(0), g(0), a ** -1)
        conj = TameTriple(*[d * m * d.inv() for m in t.matrices])
        assert triple_invariants(conj) == inv


def test_triple_invariants_separate_orbits():
    alpha = g(2)
    m1 = Mat2(alpha, g(0), g(0), alpha ** -1)
    m2 = Mat2(g(1), g(1), g(1), g(2))
    m3 = Mat2(g(2), g(1), g(1), g(1))
    m3b = Mat2(g(2), g(1), g(3), g(2))  # det 1 again, other beta2*gamma3
    t1 = TameTriple(m1, m2, m3)
    t2 = TameTriple(m1, m2, m3b)
    i1, i2 = triple_invariants(t1), triple_invariants(t2)
    assert i1 != i2
    # brute-force: no diagonal conjugation carries t1 to t2
    assert not _diagonally_conjugate(t1, t2)


def _diagonally_conjugate(t1, t2):
    # D_alpha scales beta by alpha^2; solve from each nonzero entry pair
    candidates = []
    for m, mm in zip(t1.matrices, t2.matrices):
        if m.m12 != g(0) and mm.m12 != g(0):
            candidates.append(mm.m12 / m.m12)
        if m.m21 != g(0) and mm.m21 != g(0):
            candidates.append(m.m21 / mm.m21)
    for asq in candidates:
        ok = True
        for m, mm in zip(t1.matrices, t2.matrices):
            scaled = Mat2(m.m11, m.m12 * asq, m.m21 / asq, m.m22)
            ok = ok and scaled == mm
        if ok:
            return True
    return False


def test_eigenvalue_float_picks_large_root():
    root = tame_eigenvalue_float(complex(2.5))
    assert abs(root - 2.0) < 1e-12
    assert abs(tame_eigenvalue_float(complex(1.0)) - tame_eigenvalue_float(complex(1.0))) == 0


def test_float_backend_reconstruct_wrapper():
    from fricke.scalars import to_float

    rng = random.Random(11)
    for _ in range(20):
        t, _ = V.triple_with_rational_eigenvalue(rng)
        exact_point = tame_traces(t)
        p = TamePoint(*[to_float(v) for v in exact_point.coords],
                      backend_name="float")
        rebuilt = tame_reconstruct(p, tame_eigenvalue_float(p.a1))
        back = tame_traces(rebuilt)
        err = max(abs(a - b) for a, b in zip(back.coords, p.coords))
        scale = max(1.0, max(abs(v) for v in p.coords))
        assert err <= 1e-9 * scale


def test_pure_braid_relation_diagnostic_runs():
    rng = random.Random(10)
    points = [tame_traces(V.triple(rng)) for _ in range(5)]
    report = pure_braid_relation_diagnostic(points)
    assert set(report) == {"forward", "inverse"}
    assert len(report["forward"]) == 6
    assert all(isinstance(v, bool) for v in report["forward"].values())


def test_point_json_roundtrip():
    data = POINT.to_json()
    assert data["a"] == ["2", "2", "4", "8"]
    assert TamePoint.from_json(data) == POINT
    tdata = TRIPLE.to_json()
    assert TameTriple.from_json(tdata) == TRIPLE
