"""The irregular (wild) character variety in six trace coordinates.

Normalized data is a 4-tuple (M0, U1, U2, Mhat) with M0 in SL(2), U1 upper
and U2 lower unipotent (Stokes factors), Mhat = diag(lambda, lambda^-1)
(formal factor), and the derived M1 = (M0 U1 U2 Mhat)^-1.  The residual
diagonal conjugation D_alpha is the only remaining gauge freedom; complete
invariants for it are (lambda, u1 u2, u1 c0, u2 b0, a0, d0).

Coordinates: lambda, t0 = tr(M0), t1 = tr(M1), s = tr(U1 U2),
x = tr(M0 U1 U2), y = tr(M0 Mhat).  Applying the triple trace relation to
(M0, U1 U2, Mhat) cuts one cubic (in s, x, y) per choice of
(t0, t1, lambda):  t1^2 - P t1 + Q = 0 after substituting

    a1 = t0, a2 = s, a3 = lambda + lambda^-1, a4 = t1,
    x12 = x, x23 = lambda^-1 - lambda + lambda*s, x31 = y.

``wild_residual`` evaluates exactly this full form.  A truncated variant
(``wild_residual_truncated``) that drops the product term of P and the
cross/constant terms of Q is kept only as a regression guard: points
generated from actual matrices do not satisfy it.

Dynamics: ``pure_braid_*`` conjugates M0 by U1 U2 Mhat and fixes the rest;
``full_braid_*`` is the index swap followed by the Weyl conjugation, with
lambda -> lambda^-1 and s -> 2 + lambda^2 (s - 2); ``chart_swap`` is the
transition between the two eigenvalue-order charts, an exact involution.
The coordinate maps for full and swap are computed by transporting the
equivalence invariants rather than from expanded closed forms: the
transport provably matches the matrix product rules entry by entry, and
the oracle tests hold it to that.
"""

from __future__ import annotations

from .errors import (
    BoundaryPointError,
    OffSurfaceError,
    ParseError,
    ResonantEigenvalueError,
)
from .groupoid import GroupoidRep, normalize, wild_presentation
from .matrices import Mat2
from .scalars import BACKENDS, backend
from .tame import TamePoint, fricke_residual


def _other_chart(chart):
    if chart not in ("plus", "minus"):
        raise ParseError("chart must be 'plus' or 'minus'")
    return "minus" if chart == "plus" else "plus"


class WildRep:
    """Normalized tuple (M0, U1, U2, Mhat), stored as M0's entries, u1, u2, lambda."""

    __slots__ = ("a0", "b0", "c0", "d0", "u1", "u2", "lam", "backend_name")

    def __init__(self, a0, b0, c0, d0, u1, u2, lam, backend_name="exact"):
        self.a0 = a0
        self.b0 = b0
        self.c0 = c0
        self.d0 = d0
        self.u1 = u1
        self.u2 = u2
        self.lam = lam
        self.backend_name = backend_name

    @staticmethod
    def from_matrices(m0, u1, u2, lam, backend_name="exact"):
        return WildRep(m0.m11, m0.m12, m0.m21, m0.m22, u1, u2, lam,
                       backend_name=backend_name)

    def m0(self):
        return Mat2(self.a0, self.b0, self.c0, self.d0)

    def stokes1(self):
        b = BACKENDS[self.backend_name]
        return Mat2(b.one, self.u1, b.zero, b.one)

    def stokes2(self):
        b = BACKENDS[self.backend_name]
        return Mat2(b.one, b.zero, self.u2, b.one)

    def mhat(self):
        b = BACKENDS[self.backend_name]
        return Mat2(self.lam, b.zero, b.zero, self.lam ** -1)

    def m_infinity(self):
        return self.stokes1() * self.stokes2() * self.mhat()

    def m1(self):
        return (self.m0() * self.m_infinity()).inv()

    def is_valid(self, tol=None):
        b = BACKENDS[self.backend_name]
        return b.eq(self.m0().det(), b.one, tol) and not b.is_zero(self.lam, tol)

    def __eq__(self, other):
        if not isinstance(other, WildRep):
            return NotImplemented
        return (self.a0, self.b0, self.c0, self.d0, self.u1, self.u2,
                self.lam) == (other.a0, other.b0, other.c0, other.d0,
                              other.u1, other.u2, other.lam)

    def __repr__(self):
        return "WildRep(M0=%r, u1=%r, u2=%r, lam=%r)" % (
            self.m0(), self.u1, self.u2, self.lam)

    def to_json(self):
        fmt = BACKENDS[self.backend_name].format
        return {
            "M0": [fmt(v) for v in self.m0().entries],
            "u1": fmt(self.u1),
            "u2": fmt(self.u2),
            "lambda": fmt(self.lam),
            "backend": self.backend_name,
        }

    @staticmethod
    def from_json(data):
        b = backend(data["backend"])
        m0 = [b.parse(s) for s in data["M0"]]
        return WildRep(*m0, b.parse(data["u1"]), b.parse(data["u2"]),
                       b.parse(data["lambda"]), backend_name=data["backend"])


class WildPoint:
    """Coordinates (lambda, t0, t1, s, x, y) plus the chart they refer to."""

    __slots__ = ("lam", "t0", "t1", "s", "x", "y", "chart", "backend_name")

    def __init__(self, lam, t0, t1, s, x, y, chart="plus", backend_name="exact"):
        self.lam = lam
        self.t0 = t0
        self.t1 = t1
        self.s = s
        self.x = x
        self.y = y
        self.chart = chart
        self.backend_name = backend_name

    @property
    def coords(self):
        return (self.lam, self.t0, self.t1, self.s, self.x, self.y)

    def replace(self, **kw):
        values = {name: getattr(self, name) for name in self.__slots__}
        values.update(kw)
        return WildPoint(**values)

    def __eq__(self, other):
        if not isinstance(other, WildPoint):
            return NotImplemented
        return self.coords == other.coords and self.chart == other.chart

    def __hash__(self):
        return hash((self.coords, self.chart))

    def __repr__(self):
        return ("WildPoint(lam=%r, t0=%r, t1=%r, s=%r, x=%r, y=%r, chart=%s)"
                % (self.coords + (self.chart,)))

    def to_json(self):
        fmt = BACKENDS[self.backend_name].format
        return {
            "lambda": fmt(self.lam),
            "t0": fmt(self.t0),
            "t1": fmt(self.t1),
            "s": fmt(self.s),
            "x": fmt(self.x),
            "y": fmt(self.y),
            "chart": self.chart,
            "backend": self.backend_name,
        }

    @staticmethod
    def from_json(data):
        b = backend(data["backend"])
        vals = [b.parse(data[k]) for k in ("lambda", "t0", "t1", "s", "x", "y")]
        return WildPoint(*vals, chart=data.get("chart", "plus"),
                         backend_name=data["backend"])


class WildInvariants:
    """The complete diagonal-conjugation invariants (u1 u2 != 0 case)."""

    __slots__ = ("lam", "u1u2", "u1c0", "u2b0", "a0", "d0")

    def __init__(self, lam, u1u2, u1c0, u2b0, a0, d0):
        self.lam = lam
        self.u1u2 = u1u2
        self.u1c0 = u1c0
        self.u2b0 = u2b0
        self.a0 = a0
        self.d0 = d0

    @property
    def values(self):
        return (self.lam, self.u1u2, self.u1c0, self.u2b0, self.a0, self.d0)

    def determinant_relation(self):
        """a0 d0 u1u2 - u1c0 u2b0 - u1u2; zero exactly when det M0 = 1."""
        return (self.a0 * self.d0 * self.u1u2
                - self.u1c0 * self.u2b0 - self.u1u2)

    def __eq__(self, other):
        if not isinstance(other, WildInvariants):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return "WildInvariants%r" % (self.values,)


def wild_traces(r):
    """The six coordinates of a normalized tuple; always on the cubic."""
    m0 = r.m0()
    stokes = r.stokes1() * r.stokes2()
    mhat = r.mhat()
    return WildPoint(
        r.lam,
        m0.trace(),
        (m0 * stokes * mhat).trace(),  # = tr(M1) in SL(2)
        stokes.trace(),
        (m0 * stokes).trace(),
        (m0 * mhat).trace(),
        backend_name=r.backend_name,
    )


def _lambda_inverse(p):
    b = BACKENDS[p.backend_name]
    if b.is_zero(p.lam):
        raise ResonantEigenvalueError("lambda = 0")
    return p.lam ** -1


def _as_triple_point(p):
    """The substitution instance of the triple trace relation."""
    lam_inv = _lambda_inverse(p)
    return TamePoint(
        p.t0, p.s, p.lam + lam_inv, p.t1,
        p.x, lam_inv - p.lam + p.lam * p.s, p.y,
        backend_name=p.backend_name,
    )


def wild_residual(p):
    """t1^2 - P t1 + Q for the full substituted P, Q; zero on the cubic."""
    return fricke_residual(_as_triple_point(p))


def wild_residual_truncated(p):
    """Residual built from the truncated P and Q (regression guard only).

    This variant drops the a1 a2 a3 product from P and the three cross
    terms and -4 from Q.  Coordinates of matrix-generated tuples do not
    satisfy it; it exists so tests can pin that fact down.
    """
    lam_inv = _lambda_inverse(p)
    lsum = p.lam + lam_inv
    c = lam_inv - p.lam + p.lam * p.s
    P = p.t0 * c + p.s * p.y + lsum * p.x
    Q = (p.t0 * p.t0 + p.s * p.s + lsum * lsum
         + p.x * p.x + c * c + p.y * p.y + p.x * p.y * c)
    return p.t1 * p.t1 - P * p.t1 + Q


def _require_nonresonant(p):
    b = BACKENDS[p.backend_name]
    if b.is_zero(p.lam):
        raise ResonantEigenvalueError("lambda = 0")
    if b.eq(p.lam, b.one) or b.eq(p.lam, -b.one):
        raise ResonantEigenvalueError("lambda = +-1")


def solve_invariants(p):
    """Invert the trace equations for (a0, d0, u1c0, u2b0) at a point.

    Linear in everything but lambda; poles exactly at lambda = +-1.  This
    does not assume the point is on the cubic, and together with
    ``coords_from_invariants`` it is an exact two-sided inverse.
    """
    _require_nonresonant(p)
    lam = p.lam
    lam_inv = lam ** -1
    d = lam - lam_inv
    a0 = (p.y - lam_inv * p.t0) / d
    d0 = (lam * p.t0 - p.y) / d
    r2 = p.t1 - lam * a0 * (p.s - 1) - lam_inv * d0
    r4 = p.x - p.t0 - a0 * (p.s - 2)
    u2b0 = (r2 - lam_inv * r4) / d
    u1c0 = (lam * r4 - r2) / d
    return WildInvariants(lam, p.s - 2, u1c0, u2b0, a0, d0)


def coords_from_invariants(inv, chart, backend_name):
    """Evaluate the trace equations on an invariant tuple."""
    lam, u1u2, u1c0, u2b0, a0, d0 = inv.values
    lam_inv = lam ** -1
    t0 = a0 + d0
    y = lam * a0 + lam_inv * d0
    s = 2 + u1u2
    x = t0 + a0 * u1u2 + u2b0 + u1c0
    t1 = lam * a0 * (1 + u1u2) + lam * u2b0 + lam_inv * u1c0 + lam_inv * d0
    return WildPoint(lam, t0, t1, s, x, y, chart=chart,
                     backend_name=backend_name)


def wild_reconstruct(p):
    """Canonical representative with u1 = 1 over an on-cubic point.

    Requires lambda outside {0, +-1} and s != 2 (otherwise the canonical
    scaling is undefined); off-cubic points are rejected with the residual.
    """
    b = BACKENDS[p.backend_name]
    _require_nonresonant(p)
    if b.eq(p.s, b.from_int(2)):
        raise BoundaryPointError("s = 2: no canonical Stokes representative")
    res = wild_residual(p)
    if not b.is_zero(res):
        raise OffSurfaceError("point is off the cubic", residual=res)
    inv = solve_invariants(p)
    u1 = b.one
    u2 = inv.u1u2
    c0 = inv.u1c0
    b0 = inv.u2b0 / inv.u1u2
    rep = WildRep(inv.a0, b0, c0, inv.d0, u1, u2, p.lam,
                  backend_name=p.backend_name)
    if p.backend_name == "exact" and wild_traces(rep).coords != p.coords:
        raise OffSurfaceError("reconstructed tuple does not re-trace",
                              residual=res)
    return rep


def wild_equiv_invariants(r):
    """Invariant tuple of a normalized tuple (complete when u1 u2 != 0)."""
    return WildInvariants(r.lam, r.u1 * r.u2, r.u1 * r.c0, r.u2 * r.b0,
                          r.a0, r.d0)


# ---------------------------------------------------------------------------
# Chart transition
# ---------------------------------------------------------------------------

def chart_swap_matrix(r):
    """Transition to the opposite eigenvalue ordering, on tuples.

    Conjugation by the Weyl element and the index swap:
    (M0, U1, U2, Mhat) -> ((M0^-1)^t, (U2^-1)^t, (U1^-1)^t, Mhat^-1),
    an exact involution that stays in normalized shape.
    """
    return WildRep.from_matrices(
        r.m0().weyl_conjugate(),
        -r.u2, -r.u1, r.lam ** -1,
        backend_name=r.backend_name)


def chart_swap(p):
    """The transition map in coordinates; toggles the chart tag.

    On invariants it is the involution (lam, a0, d0, u1c0, u2b0) ->
    (lam^-1, d0, a0, u2b0, u1c0), so lambda inverts while t0, s, y are
    fixed and x' = x - (s - 2)(a0 - d0), rational in lambda once a0 and
    d0 are substituted.  t1 transforms to tr(M0 U2 U1 Mhat); holding it
    fixed would leave the cubic.  Exact involution for lambda outside
    {0, +-1}.
    """
    inv = solve_invariants(p)
    swapped = WildInvariants(inv.lam ** -1, inv.u1u2, inv.u2b0, inv.u1c0,
                             inv.d0, inv.a0)
    return coords_from_invariants(swapped, _other_chart(p.chart),
                                  p.backend_name)


# ---------------------------------------------------------------------------
# Pure move (square of the half-turn)
# ---------------------------------------------------------------------------

def pure_braid_matrix(r):
    """(M0, U1, U2, Mhat) -> ((U1 U2 Mhat)^-1 M0 (U1 U2 Mhat), U1, U2, Mhat)."""
    conj = r.m_infinity()
    return WildRep.from_matrices(conj.inv() * r.m0() * conj,
                                 r.u1, r.u2, r.lam,
                                 backend_name=r.backend_name)


def _pure_abc(p):
    lam_inv = _lambda_inverse(p)
    c = lam_inv - p.lam + p.lam * p.s
    a = p.s * p.t1 + p.lam * p.t0 + lam_inv * p.t0
    b = p.s * p.t0 + p.lam * p.t1 + lam_inv * p.t1
    return c, a, b


def pure_braid_coords(p):
    """Fixes lambda, t0, t1, s; moves only the fiber pair (x, y).

    With c = lambda^-1 - lambda + lambda s:
        x' = c^2 x + c y - x - c (s t1 + lambda t0 + lambda^-1 t0)
                           + (s t0 + lambda t1 + lambda^-1 t1)
        y' = -c x - y + (s t1 + lambda t0 + lambda^-1 t0)
    """
    c, a, b = _pure_abc(p)
    x = c * c * p.x + c * p.y - p.x - c * a + b
    y = -(c * p.x) - p.y + a
    return p.replace(x=x, y=y)


def pure_braid_coords_inverse(p):
    c, a, b = _pure_abc(p)
    x = b - c * p.y - p.x
    y = c * c * p.y + c * p.x - p.y - c * b + a
    return p.replace(x=x, y=y)


def pure_braid_matrix_inverse(r):
    conj = r.m_infinity()
    return WildRep.from_matrices(conj * r.m0() * conj.inv(),
                                 r.u1, r.u2, r.lam,
                                 backend_name=r.backend_name)


# ---------------------------------------------------------------------------
# Full move (the half-turn itself)
# ---------------------------------------------------------------------------

def full_braid_matrix(r):
    """Index swap plus Weyl return, in one step on normalized tuples.

    Slot-ordered image: M0' = P (U1^-1 M0 U1) P^-1 with P the Weyl element,
    U1' = P U2 P^-1 (entry -u2), U2' = P (Mhat U1 Mhat^-1) P^-1 (entry
    -lambda^2 u1), Mhat' = diag(lambda^-1, lambda).  Note the images of the
    old U1 and U2 land in the opposite slots: the relabeling makes the old
    second Stokes factor the new first one.  Applying the move twice gives
    the pure move up to diagonal conjugation by Mhat.
    """
    u1 = r.stokes1()
    m0 = (u1.adjugate() * r.m0() * u1).weyl_conjugate()
    return WildRep.from_matrices(
        m0,
        -r.u2,
        -(r.lam ** 2) * r.u1,
        r.lam ** -1,
        backend_name=r.backend_name)


def full_braid_coords(p):
    """The half-turn in coordinates: lambda' = 1/lambda, s' = 2 + lambda^2 (s-2).

    t0 and t1 are fixed identically; x and y transform through the
    invariant transport

        a0' = d0 + u1c0,           d0' = a0 - u1c0,
        u1c0' = u2b0 + (s-2)(a0 - d0 - u1c0),   u2b0' = lambda^2 u1c0,

    which matches tr of the image tuple exactly (on and off the cubic).
    """
    inv = solve_invariants(p)
    lam2 = p.lam ** 2
    moved = WildInvariants(
        inv.lam ** -1,
        lam2 * inv.u1u2,
        inv.u2b0 + inv.u1u2 * (inv.a0 - inv.d0 - inv.u1c0),
        lam2 * inv.u1c0,
        inv.d0 + inv.u1c0,
        inv.a0 - inv.u1c0,
    )
    return coords_from_invariants(moved, _other_chart(p.chart),
                                  p.backend_name)


def wild_fiber_coordinates(p):
    """Split into the local part (t0, t1, lambda) and the fiber (s, x, y).

    The pure move fixes the local part bitwise and acts on the fiber; the
    full move only inverts lambda in the local part.
    """
    return (p.t0, p.t1, p.lam), (p.s, p.x, p.y)


# ---------------------------------------------------------------------------
# Groupoid bridge
# ---------------------------------------------------------------------------

def to_groupoid_rep(r):
    """Normalized representation: the five carrier generators get the tuple."""
    pres = wild_presentation()
    b = BACKENDS[r.backend_name]
    eye = Mat2.identity(b)
    assignment = {g: eye for g in pres.generators}
    assignment["g00"] = r.m0()
    assignment["g11"] = r.m1()
    assignment["ginfinf"] = r.m_infinity()
    assignment["alpha1"] = r.stokes1()
    assignment["alpha2"] = r.stokes2()
    assignment["beta2p"] = r.mhat()
    return GroupoidRep(pres, assignment, r.backend_name)


def from_groupoid_rep(rep, tol=None):
    """Read the 4-tuple off a normalized representation, checking shape."""
    b = rep.backend
    u1m = rep.matrix("alpha1")
    u2m = rep.matrix("alpha2")
    mh = rep.matrix("beta2p")
    shape_ok = (
        b.eq(u1m.m11, b.one, tol) and b.eq(u1m.m22, b.one, tol)
        and b.is_zero(u1m.m21, tol)
        and b.eq(u2m.m11, b.one, tol) and b.eq(u2m.m22, b.one, tol)
        and b.is_zero(u2m.m12, tol)
        and b.is_zero(mh.m12, tol) and b.is_zero(mh.m21, tol)
    )
    if not shape_ok:
        raise ParseError("representation is not in normalized Stokes shape")
    return WildRep.from_matrices(rep.matrix("g00"), u1m.m12, u2m.m21, mh.m11,
                                 backend_name=rep.backend_name)


def pure_braid_via_groupoid(r):
    """Oracle route: pull back through the pure move, renormalize, extract."""
    from .groupoid import apply_automorphism, braid_automorphism_wild

    rep = to_groupoid_rep(r)
    moved = apply_automorphism(braid_automorphism_wild("pure"), rep)
    renorm, _ = normalize(moved)
    return from_groupoid_rep(renorm)


def full_braid_via_groupoid(r):
    """Oracle route for the half-turn: move, renormalize, Weyl-return.

    After the index-swapping move and renormalization the Stokes slots hold
    the lower/upper pair (U2, Mhat U1 Mhat^-1); the global Weyl conjugation
    restores the standard upper/lower shape and inverts the formal factor.
    """
    from .groupoid import apply_automorphism, braid_automorphism_wild

    rep = to_groupoid_rep(r)
    moved = apply_automorphism(braid_automorphism_wild("full"), rep)
    renorm, _ = normalize(moved)
    returned = renorm.replace(
        {g: m.weyl_conjugate() for g, m in renorm.assignment.items()})
    return from_groupoid_rep(returned)
