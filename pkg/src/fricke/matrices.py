"""2x2 matrices over either scalar backend, plus deterministic SL(2) samplers.

Entries are backend scalars (:class:`~fricke.scalars.GaussianRational` or
``complex``); a matrix never mixes backends.  For SL(2) elements the inverse
is the adjugate, so inversion of exact SL(2) matrices is division-free.
"""

from __future__ import annotations

import random

from .errors import SingularMatrixError
from .scalars import EXACT, backend_of_value


class Mat2:
    """2x2 matrix, row-major entries m11, m12, m21, m22."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11, m12, m21, m22):
        self.m11 = m11
        self.m12 = m12
        self.m21 = m21
        self.m22 = m22

    @staticmethod
    def identity(backend=EXACT):
        return Mat2(backend.one, backend.zero, backend.zero, backend.one)

    @property
    def entries(self):
        return (self.m11, self.m12, self.m21, self.m22)

    def __mul__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        a, b = self, other
        return Mat2(
            a.m11 * b.m11 + a.m12 * b.m21,
            a.m11 * b.m12 + a.m12 * b.m22,
            a.m21 * b.m11 + a.m22 * b.m21,
            a.m21 * b.m12 + a.m22 * b.m22,
        )

    def det(self):
        return self.m11 * self.m22 - self.m12 * self.m21

    def trace(self):
        return self.m11 + self.m22

    def adjugate(self):
        return Mat2(self.m22, -self.m12, -self.m21, self.m11)

    def inv(self):
        d = self.det()
        backend = backend_of_value(d)
        if backend.is_zero(d):
            raise SingularMatrixError("matrix has zero determinant")
        if d == backend.one:
            return self.adjugate()
        adj = self.adjugate()
        return Mat2(adj.m11 / d, adj.m12 / d, adj.m21 / d, adj.m22 / d)

    def transpose(self):
        return Mat2(self.m11, self.m21, self.m12, self.m22)

    def weyl_conjugate(self):
        """Conjugation by [[0,-1],[1,0]]; equals inverse-transpose on SL(2)."""
        return Mat2(self.m22, -self.m21, -self.m12, self.m11)

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def close_to(self, other, tol=1e-9):
        backend = backend_of_value(self.m11)
        return all(
            backend.eq(a, b, tol) for a, b in zip(self.entries, other.entries)
        )

    def is_identity(self, tol=None):
        backend = backend_of_value(self.m11)
        one, zero = backend.one, backend.zero
        return (
            backend.eq(self.m11, one, tol)
            and backend.eq(self.m12, zero, tol)
            and backend.eq(self.m21, zero, tol)
            and backend.eq(self.m22, one, tol)
        )

    def map(self, f):
        return Mat2(f(self.m11), f(self.m12), f(self.m21), f(self.m22))

    def __repr__(self):
        return "Mat2(%r, %r, %r, %r)" % self.entries


def mat_mul(a, b):
    """Matrix product; mixing backends raises TypeError."""
    return a * b


def mat_inv(a):
    return a.inv()


def trace_of_word(word, assignment):
    """Trace of the left-to-right product of assigned matrices.

    ``word`` is a sequence of ``(index, exponent)`` with exponent +-1 into
    ``assignment``.  Satisfies the skein relation
    tr(AB) + tr(AB^-1) = tr(A) tr(B).
    """
    if not assignment:
        raise IndexError("empty assignment")
    backend = backend_of_value(assignment[0].m11)
    prod = Mat2.identity(backend)
    for index, exponent in word:
        if not 0 <= index < len(assignment):
            raise IndexError("word index %d out of range" % index)
        m = assignment[index]
        prod = prod * (m if exponent == 1 else m.inv())
    return prod.trace()


def _unipotent(t, upper):
    s = EXACT.from_int(t)
    if upper:
        return Mat2(EXACT.one, s, EXACT.zero, EXACT.one)
    return Mat2(EXACT.one, EXACT.zero, s, EXACT.one)


def _max_entry(m):
    return max(abs(v.re) for v in m.entries)


def sl2_from_rng(rng, bound=60, factors=None):
    """Exact SL(2) sample: product of random integer unipotents.

    Alternates upper and lower factors; stops before any entry magnitude
    would exceed ``bound``.  ``factors=0`` gives the empty product I.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    n = rng.randint(2, 6) if factors is None else factors
    m = Mat2.identity(EXACT)
    upper = rng.random() < 0.5
    for _ in range(n):
        t = rng.choice((-2, -1, 1, 2))
        candidate = m * _unipotent(t, upper)
        if _max_entry(candidate) > bound:
            break
        m = candidate
        upper = not upper
    return m


def random_sl2(seed, bound=60, factors=None):
    """Deterministic pseudorandom exact SL(2) matrix: same seed, same matrix."""
    return sl2_from_rng(random.Random(seed), bound, factors)
