"""Iterate words in the dynamics generators and audit the orbits.

Words are sequences of tagged steps: ``h1 h2 h3`` (with optional ``^-1``)
act on seven-coordinate points, ``pure``, ``full`` and ``swap`` on
six-coordinate points.  ``full`` and ``swap`` toggle the chart tag, ``pure``
preserves it; the inverse of ``full`` is not synthesized and words asking
for it are rejected.  Orbits record every visited point together with the
surface residual at each step, so float-backend runs carry their own drift
audit; exact-backend residuals are identically zero.
"""

from __future__ import annotations

import csv
import io

from .errors import BadWordError, OffSurfaceError
from . import tame, wild
from .scalars import BACKENDS

TAME_TAGS = ("h1", "h2", "h3")
WILD_TAGS = ("pure", "full", "swap")


class BraidWord:
    """Parsed word: ((tag, exponent), ...) over one family of generators."""

    __slots__ = ("steps", "kind")

    def __init__(self, steps):
        steps = tuple(steps)
        if not steps:
            raise BadWordError("empty word")
        kinds = set()
        for tag, exp in steps:
            if tag in TAME_TAGS:
                kinds.add("tame")
            elif tag in WILD_TAGS:
                kinds.add("wild")
            else:
                raise BadWordError(
                    "unknown generator %r; valid tags: %s"
                    % (tag, " ".join(TAME_TAGS + WILD_TAGS)))
            if exp not in (1, -1):
                raise BadWordError("exponents must be +-1")
            if tag == "full" and exp == -1:
                raise BadWordError("the inverse of 'full' is not implemented")
        if len(kinds) != 1:
            raise BadWordError("word mixes tame and wild generators")
        self.steps = steps
        self.kind = kinds.pop()

    @staticmethod
    def parse(text):
        """Whitespace-separated tags, each optionally suffixed ``^-1``."""
        steps = []
        for token in text.split():
            if token.endswith("^-1"):
                steps.append((token[:-3], -1))
            else:
                steps.append((token, 1))
        return BraidWord(steps)

    def __repr__(self):
        return "BraidWord(%r)" % (self.as_text(),)

    def as_text(self):
        return " ".join(t if e == 1 else t + "^-1" for t, e in self.steps)


def _apply_step(point, tag, exp):
    if tag in TAME_TAGS:
        i = int(tag[1])
        if exp == 1:
            return tame.braid_coord_action(i, point)
        return tame.braid_coord_action_inverse(i, point)
    if tag == "pure":
        if exp == 1:
            return wild.pure_braid_coords(point)
        return wild.pure_braid_coords_inverse(point)
    if tag == "swap":
        return wild.chart_swap(point)
    if tag == "full":
        return wild.full_braid_coords(point)
    raise BadWordError("unknown generator %r" % tag)


def apply_word(point, word):
    for tag, exp in word.steps:
        point = _apply_step(point, tag, exp)
    return point


def _residual(point, kind):
    if kind == "tame":
        return tame.fricke_residual(point)
    return wild.wild_residual(point)


class OrbitRecord:
    """Start point, word, the visited points, and the residual audit trail.

    ``period`` stays None until a cycle scan fills it in (see
    :func:`detect_cycle`).
    """

    __slots__ = ("word", "points", "residuals", "charts", "kind",
                 "backend_name", "period")

    def __init__(self, word, points, residuals, charts, kind, backend_name,
                 period=None):
        self.word = word
        self.points = points
        self.residuals = residuals
        self.charts = charts
        self.kind = kind
        self.backend_name = backend_name
        self.period = period

    @property
    def start(self):
        return self.points[0]

    @property
    def last(self):
        return self.points[-1]

    def __len__(self):
        return len(self.points)

    def to_json(self):
        b = BACKENDS[self.backend_name]
        data = {
            "word": self.word.as_text(),
            "kind": self.kind,
            "backend": self.backend_name,
            "period": self.period,
            "points": [p.to_json() for p in self.points],
            "residuals": [b.format(r) for r in self.residuals],
        }
        if self.charts is not None:
            data["charts"] = list(self.charts)
        return data

    def to_csv(self):
        """One row per step: index, coordinates, residual (and chart)."""
        b = BACKENDS[self.backend_name]
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        if self.kind == "tame":
            writer.writerow(["step", "a1", "a2", "a3", "a4",
                             "x12", "x23", "x31", "residual"])
            for k, p in enumerate(self.points):
                writer.writerow([k] + [b.format(v) for v in p.coords]
                                + [b.format(self.residuals[k])])
        else:
            writer.writerow(["step", "lambda", "t0", "t1", "s", "x", "y",
                             "residual", "chart"])
            for k, p in enumerate(self.points):
                writer.writerow([k] + [b.format(v) for v in p.coords]
                                + [b.format(self.residuals[k]), p.chart])
        return out.getvalue()


def iterate(start, word, n, tol=None):
    """Apply the word n times, recording points and residuals along the way.

    The start must lie on its surface: residual exactly zero on the exact
    backend, within ``tol`` (default 1e-9) on the float backend.
    """
    if isinstance(word, str):
        word = BraidWord.parse(word)
    kind = "tame" if isinstance(start, tame.TamePoint) else "wild"
    if word.kind != kind:
        raise BadWordError("word kind %r does not match point" % word.kind)
    b = BACKENDS[start.backend_name]
    res0 = _residual(start, kind)
    if not b.is_zero(res0, tol):
        raise OffSurfaceError("start point is off-surface", residual=res0)
    points = [start]
    residuals = [res0]
    current = start
    for _ in range(n):
        current = apply_word(current, word)
        points.append(current)
        residuals.append(_residual(current, kind))
    charts = [p.chart for p in points] if kind == "wild" else None
    return OrbitRecord(word, points, residuals, charts, kind,
                       start.backend_name)


def _point_key(p):
    if isinstance(p, wild.WildPoint):
        return (p.coords, p.chart)
    return p.coords


def detect_cycle(record, tol=None):
    """Smallest recurrence period, or None; also stored on the record.

    Exact backend: first hash recurrence of the canonical coordinate tuple.
    Float backend: first step within ``tol`` (max coordinate distance) of a
    previous point on the same chart; the most recent match wins, giving
    the smallest period.
    """
    record.period = _scan_for_cycle(record, tol)
    return record.period


def _scan_for_cycle(record, tol):
    if record.backend_name == "exact":
        seen = {}
        for k, p in enumerate(record.points):
            key = _point_key(p)
            if key in seen:
                return k - seen[key]
            seen[key] = k
        return None

    if tol is None:
        tol = 1e-9
    pts = record.points
    for k in range(1, len(pts)):
        for j in range(k - 1, -1, -1):
            if record.kind == "wild" and pts[j].chart != pts[k].chart:
                continue
            dist = max(abs(a - b) for a, b in zip(pts[j].coords, pts[k].coords))
            if dist <= tol:
                return k - j
    return None


def residual_drift(record):
    """The residual of largest magnitude seen along the orbit."""
    b = BACKENDS[record.backend_name]
    return max(record.residuals, key=b.magnitude)
