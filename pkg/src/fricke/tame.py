"""Trace coordinates for SL(2) triples and the half-twist dynamics on them.

A triple (M1, M2, M3) in SL(2) with M4 = (M1 M2 M3)^-1 has seven trace
coordinates a_i = tr(M_i), x12 = tr(M1 M2), x23 = tr(M2 M3), x31 = tr(M3 M1).
They satisfy one quartic relation

    a4^2 - P a4 + Q = 0,
    P = a1 x23 + a2 x31 + a3 x12 - a1 a2 a3,
    Q = a1^2 + a2^2 + a3^2 + x12^2 + x23^2 + x31^2 + x12 x23 x31
        - a1 a2 x12 - a2 a3 x23 - a3 a1 x31 - 4,

and conversely every point of the quartic with a1 != +-2 comes from a
triple that is unique up to diagonal conjugation (``tame_reconstruct``).
The three half-twist moves act by polynomial maps on the coordinates;
their matrix counterparts (``braid_matrix_action``) serve as the oracle.
"""

from __future__ import annotations

from .errors import (
    NonGenericPointError,
    NotARootError,
    OffSurfaceError,
    ParseError,
    ResonantTraceError,
)
from .groupoid import GroupoidRep, tame_presentation
from .matrices import Mat2
from .scalars import BACKENDS, backend


class TameTriple:
    """(M1, M2, M3) in SL(2); M4 = (M1 M2 M3)^-1 is derived."""

    __slots__ = ("m1", "m2", "m3", "backend_name")

    def __init__(self, m1, m2, m3, backend_name="exact"):
        self.m1 = m1
        self.m2 = m2
        self.m3 = m3
        self.backend_name = backend_name

    @property
    def matrices(self):
        return (self.m1, self.m2, self.m3)

    def m4(self):
        return (self.m1 * self.m2 * self.m3).inv()

    def dets_are_one(self, tol=None):
        b = BACKENDS[self.backend_name]
        return all(b.eq(m.det(), b.one, tol) for m in self.matrices)

    def __eq__(self, other):
        if not isinstance(other, TameTriple):
            return NotImplemented
        return self.matrices == other.matrices

    def __repr__(self):
        return "TameTriple(%r, %r, %r)" % self.matrices

    def to_json(self):
        fmt = BACKENDS[self.backend_name].format
        return {
            "M1": [fmt(v) for v in self.m1.entries],
            "M2": [fmt(v) for v in self.m2.entries],
            "M3": [fmt(v) for v in self.m3.entries],
            "backend": self.backend_name,
        }

    @staticmethod
    def from_json(data):
        b = backend(data["backend"])
        mats = [Mat2(*[b.parse(s) for s in data[k]]) for k in ("M1", "M2", "M3")]
        return TameTriple(*mats, backend_name=data["backend"])


class TamePoint:
    """The seven trace coordinates (a1, a2, a3, a4, x12, x23, x31)."""

    __slots__ = ("a1", "a2", "a3", "a4", "x12", "x23", "x31", "backend_name")

    def __init__(self, a1, a2, a3, a4, x12, x23, x31, backend_name="exact"):
        self.a1 = a1
        self.a2 = a2
        self.a3 = a3
        self.a4 = a4
        self.x12 = x12
        self.x23 = x23
        self.x31 = x31
        self.backend_name = backend_name

    @property
    def coords(self):
        return (self.a1, self.a2, self.a3, self.a4, self.x12, self.x23, self.x31)

    def replace(self, **kw):
        values = {name: getattr(self, name) for name in self.__slots__}
        values.update(kw)
        return TamePoint(**values)

    def __eq__(self, other):
        if not isinstance(other, TamePoint):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "TamePoint(a=%r, x=%r)" % (
            self.coords[:4], self.coords[4:])

    def to_json(self):
        fmt = BACKENDS[self.backend_name].format
        return {
            "a": [fmt(v) for v in (self.a1, self.a2, self.a3, self.a4)],
            "x": [fmt(v) for v in (self.x12, self.x23, self.x31)],
            "backend": self.backend_name,
        }

    @staticmethod
    def from_json(data):
        b = backend(data["backend"])
        a = [b.parse(s) for s in data["a"]]
        x = [b.parse(s) for s in data["x"]]
        if len(a) != 4 or len(x) != 3:
            raise ParseError("tame point needs 4 a-values and 3 x-values")
        return TamePoint(*a, *x, backend_name=data["backend"])


class TripleInvariants:
    """Complete diagonal-conjugation invariants of a normal-form triple.

    With M1 = diag(alpha1, alpha1^-1) and M2, M3 generic (beta2 gamma2
    beta3 gamma3 != 0), two normal-form triples are diagonally conjugate
    exactly when these seven numbers agree.
    """

    __slots__ = ("alpha1", "alpha2", "delta2", "alpha3", "delta3",
                 "beta2gamma3", "gamma2beta3")

    def __init__(self, alpha1, alpha2, delta2, alpha3, delta3,
                 beta2gamma3, gamma2beta3):
        self.alpha1 = alpha1
        self.alpha2 = alpha2
        self.delta2 = delta2
        self.alpha3 = alpha3
        self.delta3 = delta3
        self.beta2gamma3 = beta2gamma3
        self.gamma2beta3 = gamma2beta3

    @property
    def values(self):
        return (self.alpha1, self.alpha2, self.delta2, self.alpha3,
                self.delta3, self.beta2gamma3, self.gamma2beta3)

    def swapped(self):
        """The invariants of the transposition-conjugated triple."""
        return TripleInvariants(
            self.alpha1 ** -1,
            self.delta2, self.alpha2, self.delta3, self.alpha3,
            self.gamma2beta3, self.beta2gamma3)

    def __eq__(self, other):
        if not isinstance(other, TripleInvariants):
            return NotImplemented
        return self.values == other.values

    def __repr__(self):
        return "TripleInvariants%r" % (self.values,)


def tame_traces(t):
    """The seven trace coordinates of a triple; always lands on the quartic."""
    m1, m2, m3 = t.matrices
    prod = m1 * m2 * m3
    return TamePoint(
        m1.trace(), m2.trace(), m3.trace(), prod.trace(),
        (m1 * m2).trace(), (m2 * m3).trace(), (m3 * m1).trace(),
        backend_name=t.backend_name,
    )


def fricke_P_Q(p):
    a1, a2, a3, x12, x23, x31 = p.a1, p.a2, p.a3, p.x12, p.x23, p.x31
    P = a1 * x23 + a2 * x31 + a3 * x12 - a1 * a2 * a3
    Q = (a1 * a1 + a2 * a2 + a3 * a3
         + x12 * x12 + x23 * x23 + x31 * x31
         + x12 * x23 * x31
         - a1 * a2 * x12 - a2 * a3 * x23 - a3 * a1 * x31
         - 4)
    return P, Q


def fricke_residual(p):
    """a4^2 - P a4 + Q; zero exactly on the quartic."""
    P, Q = fricke_P_Q(p)
    return p.a4 * p.a4 - P * p.a4 + Q


def extended_traces(m1, m2, m3):
    """tr(M1 M2 M1^-1 M3) and tr(M1 M2 M1 M2^-1 M1^-1 M3), by multiplication."""
    m1i = m1.adjugate()
    first = (m1 * m2 * m1i * m3).trace()
    second = (m1 * m2 * m1 * m2.adjugate() * m1i * m3).trace()
    return first, second


def extended_traces_formula(p):
    """Same two traces as polynomials in the coordinates (x13 = x31)."""
    a1, a2, a3, a4 = p.a1, p.a2, p.a3, p.a4
    x12, x23, x13 = p.x12, p.x23, p.x31
    c1 = a1 * a4 + a2 * a3
    c2 = a1 * a3 + a2 * a4
    first = -x12 * x13 - x23 + c1
    second = x12 * x12 * x13 + x12 * x23 - x13 - x12 * c1 + c2
    return first, second


def braid_matrix_action(i, t):
    """Half-twist move i on matrices: conjugate the third slot, cyclically.

    For i=1: (M1, M2, (M1 M2)^-1 M3 (M1 M2)); i=2 and i=3 apply the same
    rule after cyclically relabeling (1,2,3).  tr(M4) is untouched.
    """
    _check_braid_index(i)
    ms = list(t.matrices)
    a = ms[i - 1]
    b = ms[i % 3]
    conj = a * b
    ms[(i + 1) % 3] = conj.inv() * ms[(i + 1) % 3] * conj
    return TameTriple(*ms, backend_name=t.backend_name)


def braid_matrix_action_inverse(i, t):
    _check_braid_index(i)
    ms = list(t.matrices)
    conj = ms[i - 1] * ms[i % 3]
    ms[(i + 1) % 3] = conj * ms[(i + 1) % 3] * conj.inv()
    return TameTriple(*ms, backend_name=t.backend_name)


def _check_braid_index(i):
    if i not in (1, 2, 3):
        raise ParseError("braid index must be 1, 2 or 3")


def _cycle_point(p, shift):
    """Relabel coordinates by i -> i+shift on indices 1,2,3 (a4 fixed)."""
    a = [p.a1, p.a2, p.a3]
    x = [p.x12, p.x23, p.x31]
    s = shift % 3
    a = a[-s:] + a[:-s] if s else a
    x = x[-s:] + x[:-s] if s else x
    return p.replace(a1=a[0], a2=a[1], a3=a[2], x12=x[0], x23=x[1], x31=x[2])


def _coord_core(p):
    """The i=1 coordinate move: x12 fixed, (x23, x31) updated."""
    first, second = extended_traces_formula(p)
    return p.replace(x23=first, x31=second)


def _coord_core_inverse(p):
    a1, a2, a3, a4 = p.a1, p.a2, p.a3, p.a4
    x12 = p.x12
    c1 = a1 * a4 + a2 * a3
    c2 = a1 * a3 + a2 * a4
    x31 = c2 - p.x31 - x12 * p.x23
    x23 = x12 * p.x31 + x12 * x12 * p.x23 - p.x23 - x12 * c2 + c1
    return p.replace(x23=x23, x31=x31)


def braid_coord_action(i, p):
    """Half-twist move i on trace coordinates; preserves the quartic."""
    _check_braid_index(i)
    return _cycle_point(_coord_core(_cycle_point(p, 1 - i)), i - 1)


def braid_coord_action_inverse(i, p):
    _check_braid_index(i)
    return _cycle_point(_coord_core_inverse(_cycle_point(p, 1 - i)), i - 1)


def tame_reconstruct(p, alpha1):
    """Solve for a normal-form triple with the given traces.

    The caller supplies alpha1 with alpha1 + alpha1^-1 = a1 (square roots
    may not exist in the exact field); alpha1 = +-1 is rejected.  M1 comes
    out diag(alpha1, alpha1^-1); the entries of M2, M3 are solved linearly,
    the products beta2 gamma3 and gamma2 beta3 from a 2x2 system, and the
    representative is fixed by beta2 = 1 when possible, with degenerate
    fill-ins otherwise.  The input must lie on the quartic.
    """
    b = BACKENDS[p.backend_name]
    alpha1_inv = alpha1 ** -1
    if not b.is_zero(alpha1 + alpha1_inv - p.a1):
        raise NotARootError("alpha1 is not a root of X^2 - a1 X + 1")
    if b.eq(alpha1, b.one) or b.eq(alpha1, -b.one):
        raise ResonantTraceError("a1 = +-2: normal form needs alpha1 != +-1")
    res = fricke_residual(p)
    if not b.is_zero(res):
        raise OffSurfaceError("point is off the quartic", residual=res)

    ddiff = alpha1 - alpha1_inv
    alpha2 = (p.x12 - alpha1_inv * p.a2) / ddiff
    delta2 = p.a2 - alpha2
    alpha3 = (p.x31 - alpha1_inv * p.a3) / ddiff
    delta3 = p.a3 - alpha3
    r6 = p.x23 - alpha2 * alpha3 - delta2 * delta3
    r7 = p.a4 - alpha1 * alpha2 * alpha3 - alpha1_inv * delta2 * delta3
    beta2gamma3 = (r7 - alpha1_inv * r6) / ddiff
    gamma2beta3 = (alpha1 * r6 - r7) / ddiff

    d2 = alpha2 * delta2 - b.one  # required beta2 * gamma2
    d3 = alpha3 * delta3 - b.one  # required beta3 * gamma3
    u, v = beta2gamma3, gamma2beta3
    if not b.is_zero(u):
        beta2, gamma3 = b.one, u
        gamma2 = d2
        beta3 = d3 / u
        if not b.is_zero(gamma2 * beta3 - v):
            raise NonGenericPointError("products inconsistent with det = 1")
    elif not b.is_zero(v):
        if not b.is_zero(d3):
            if not b.is_zero(d2):
                raise NonGenericPointError("degenerate fill-in breaks det = 1")
            beta2, gamma3 = b.zero, b.one
            beta3 = d3
            gamma2 = v / d3
        elif not b.is_zero(d2):
            beta2, gamma2 = b.one, d2
            gamma3 = b.zero
            beta3 = v / d2
        else:
            beta2, gamma2 = b.zero, b.one
            beta3, gamma3 = v, b.zero
    else:
        # Both mixed products vanish: each matrix is triangular-compatible.
        if not b.is_zero(d2):
            beta2, gamma2, beta3, gamma3 = b.one, d2, b.zero, b.zero
            if not b.is_zero(d3):
                raise NonGenericPointError("degenerate fill-in breaks det = 1")
        elif not b.is_zero(d3):
            beta2, gamma2, beta3, gamma3 = b.zero, b.zero, b.one, d3
        else:
            beta2 = gamma2 = beta3 = gamma3 = b.zero

    m1 = Mat2(alpha1, b.zero, b.zero, alpha1_inv)
    m2 = Mat2(alpha2, beta2, gamma2, delta2)
    m3 = Mat2(alpha3, beta3, gamma3, delta3)
    triple = TameTriple(m1, m2, m3, backend_name=p.backend_name)
    if tame_traces(triple).coords != p.coords and p.backend_name == "exact":
        raise NonGenericPointError("reconstructed triple does not re-trace")
    return triple


def tame_eigenvalue_float(a1):
    """Float-backend convenience root of X^2 - a1 X + 1.

    Picks the root with |alpha1| >= 1, ties broken toward nonnegative
    imaginary part.
    """
    a1 = complex(a1)
    disc = (a1 * a1 - 4) ** 0.5
    roots = [(a1 + disc) / 2, (a1 - disc) / 2]
    roots.sort(key=lambda z: (abs(z), z.imag), reverse=True)
    return roots[0]


def triple_invariants(t):
    """Invariants of a normal-form triple (M1 must be diagonal)."""
    b = BACKENDS[t.backend_name]
    m1, m2, m3 = t.matrices
    if not (b.is_zero(m1.m12) and b.is_zero(m1.m21)):
        raise ParseError("triple_invariants needs M1 diagonal")
    return TripleInvariants(
        m1.m11, m2.m11, m2.m22, m3.m11, m3.m22,
        m2.m12 * m3.m21, m2.m21 * m3.m12)


def to_groupoid_rep(t):
    """Normalized groupoid representation: loops carry M_i, sides carry I."""
    pres = tame_presentation()
    b = BACKENDS[t.backend_name]
    eye = Mat2.identity(b)
    m4 = t.m4()
    assignment = {
        "g11": t.m1, "g22": t.m2, "g33": t.m3, "g44": m4,
        "g12": eye, "g23": eye, "g34": eye, "g41": eye,
    }
    return GroupoidRep(pres, assignment, t.backend_name)


def from_groupoid_rep(rep):
    """Read the triple back off a normalized representation."""
    return TameTriple(rep.matrix("g11"), rep.matrix("g22"), rep.matrix("g33"),
                      backend_name=rep.backend_name)


def pure_braid_relation_diagnostic(points):
    """Probe which ordered composite of the three moves acts trivially.

    The three half-twists satisfy one relation abstractly, but the induced
    coordinate maps compose up to inner bookkeeping, so which of the six
    orders (if any) is the identity on the quartic is checked empirically:
    for each permutation of (1, 2, 3) the composite of the forward maps,
    and of the inverse maps, is applied to every supplied on-surface point.
    Returns {"forward": {order: bool}, "inverse": {order: bool}}.
    """
    import itertools

    report = {"forward": {}, "inverse": {}}
    for order in itertools.permutations((1, 2, 3)):
        key = "".join(str(i) for i in order)
        ok_fwd = True
        ok_inv = True
        for p in points:
            q = p
            r = p
            for i in order:
                q = braid_coord_action(i, q)
                r = braid_coord_action_inverse(i, r)
            ok_fwd = ok_fwd and q == p
            ok_inv = ok_inv and r == p
        report["forward"][key] = ok_fwd
        report["inverse"][key] = ok_inv
    return report
