"""Finitely presented groupoids, their SL(2) representations, and braid moves.

A presentation is a list of named objects, generators with source/target
objects, and relation words that must equal a trivial loop.  Representations
assign a matrix to each generator; words evaluate by left-to-right ordered
products, rho(gh) = rho(g) rho(h), and a representation is valid when every
relation evaluates to the identity.

Two presentations are built in:

* the four-puncture presentation (``tame_presentation``): objects s1..s4,
  generators gamma_{i,i} and gamma_{i,i+1} mod 4, one exterior and one
  interior relation;
* the irregular presentation (``wild_presentation``): three base points
  s0, s1, sinf plus the ring of formal/sectorial objects around infinity,
  with an extra relation expressing the loop at infinity through the two
  Stokes arcs and the formal arc.

Normalization gauges a representation along a spanning tree so tree
generators become the identity; what remains is the finite matrix data the
trace-coordinate modules work with.  Braid moves enter as automorphisms
(endomorphisms for the pure moves, an index-swapping self-map for the full
wild move) and are always validated against the relations by evaluation.
"""

from __future__ import annotations

from .errors import (
    EndpointError,
    GaugeConstraintError,
    ParseError,
    SpanningTreeError,
    WordCompositionError,
)
from .matrices import Mat2
from .scalars import BACKENDS, backend


class Word:
    """Formal word in groupoid generators: a tuple of (name, exponent) steps."""

    __slots__ = ("steps",)

    def __init__(self, steps=()):
        normalized = []
        for step in steps:
            if isinstance(step, str):
                normalized.append((step, 1))
            else:
                name, exp = step
                if exp not in (1, -1):
                    raise ParseError("word exponents must be +-1, got %r" % (exp,))
                normalized.append((name, exp))
        self.steps = tuple(normalized)

    def __mul__(self, other):
        return Word(self.steps + other.steps)

    def inverse(self):
        return Word(tuple((name, -exp) for name, exp in reversed(self.steps)))

    def free_reduce(self):
        out = []
        for step in self.steps:
            if out and out[-1][0] == step[0] and out[-1][1] == -step[1]:
                out.pop()
            else:
                out.append(step)
        return Word(tuple(out))

    def __len__(self):
        return len(self.steps)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.steps == other.steps

    def __hash__(self):
        return hash(self.steps)

    def __repr__(self):
        if not self.steps:
            return "Word()"
        parts = [name if exp == 1 else name + "^-1" for name, exp in self.steps]
        return "Word(%s)" % ".".join(parts)

    def to_json(self):
        return [[name, exp] for name, exp in self.steps]

    @staticmethod
    def from_json(data):
        return Word(tuple((name, exp) for name, exp in data))


def word(*items):
    return Word(items)


class GroupoidPresentation:
    """Objects, generators with endpoints, relation words, gauge classes.

    ``gauge_class[obj]`` is ``"any"`` (free SL(2) gauge) or ``"diagonal"``
    (gauge restricted to the diagonal torus); normalization refuses moves
    that would leave an object's class.
    """

    def __init__(self, name, objects, generators, relations,
                 gauge_class=None, named_words=None, base_object=None,
                 default_tree=()):
        self.name = name
        self.objects = tuple(objects)
        self.generators = dict(generators)
        self.relations = tuple(relations)
        self.gauge_class = dict(gauge_class or {})
        for obj in self.objects:
            self.gauge_class.setdefault(obj, "any")
        self.named_words = dict(named_words or {})
        self.base_object = base_object or self.objects[0]
        self.default_tree = tuple(default_tree)
        self._validate()

    def _validate(self):
        objset = set(self.objects)
        for gen, (src, tgt) in self.generators.items():
            if src not in objset or tgt not in objset:
                raise EndpointError(
                    "generator %s has undeclared endpoint" % gen)
        for rel in self.relations:
            src, tgt = self.word_endpoints(rel)
            if src != tgt:
                raise WordCompositionError("relation %r is not a loop" % rel)

    def generator_endpoints(self, name, exponent=1):
        try:
            src, tgt = self.generators[name]
        except KeyError:
            raise ParseError("unknown generator %r" % name) from None
        return (src, tgt) if exponent == 1 else (tgt, src)

    def word_endpoints(self, w):
        """Source and target of a word; raises if consecutive steps don't chain."""
        if not w.steps:
            raise WordCompositionError("empty word has no endpoints")
        src, cur = self.generator_endpoints(*w.steps[0])
        for step in w.steps[1:]:
            nxt_src, nxt_tgt = self.generator_endpoints(*step)
            if nxt_src != cur:
                raise WordCompositionError(
                    "word breaks at %s: at object %s, step starts at %s"
                    % (step[0], cur, nxt_src))
            cur = nxt_tgt
        return src, cur

    def composes(self, w):
        try:
            self.word_endpoints(w)
            return True
        except WordCompositionError:
            return False

    def to_json(self):
        return {
            "name": self.name,
            "objects": list(self.objects),
            "generators": [[g, s, t] for g, (s, t) in self.generators.items()],
            "relations": [r.to_json() for r in self.relations],
            "gauge_class": dict(self.gauge_class),
        }


class GroupoidRep:
    """Assignment of one matrix per generator, all in one scalar backend."""

    def __init__(self, presentation, assignment, backend_name="exact"):
        self.presentation = presentation
        self.backend_name = backend_name
        self.backend = BACKENDS[backend_name]
        missing = set(presentation.generators) - set(assignment)
        if missing:
            raise ParseError("assignment missing generators: %s"
                             % ", ".join(sorted(missing)))
        self.assignment = dict(assignment)

    def matrix(self, name):
        return self.assignment[name]

    def evaluate(self, w):
        """Ordered left-to-right product; exponent -1 uses the inverse."""
        if w.steps:
            self.presentation.word_endpoints(w)
        prod = Mat2.identity(self.backend)
        for name, exp in w.steps:
            m = self.assignment[name]
            prod = prod * (m if exp == 1 else m.inv())
        return prod

    def check_relations(self):
        """Each relation with its evaluated residual matrix."""
        return [(rel, self.evaluate(rel)) for rel in self.presentation.relations]

    def relations_hold(self, tol=None):
        return all(res.is_identity(tol) for _, res in self.check_relations())

    def replace(self, assignment):
        return GroupoidRep(self.presentation, assignment, self.backend_name)

    def to_json(self):
        fmt = self.backend.format
        return {
            "presentation": self.presentation.name,
            "backend": self.backend_name,
            "assignment": {
                g: [fmt(v) for v in m.entries]
                for g, m in sorted(self.assignment.items())
            },
        }

    @staticmethod
    def from_json(data, presentation):
        b = backend(data["backend"])
        assignment = {
            g: Mat2(*[b.parse(s) for s in entries])
            for g, entries in data["assignment"].items()
        }
        return GroupoidRep(presentation, assignment, data["backend"])


class GaugeAssignment:
    """One gauge matrix per object, respecting each object's gauge class."""

    def __init__(self, presentation, matrices, tol=None):
        self.presentation = presentation
        self.matrices = dict(matrices)
        for obj, m in self.matrices.items():
            if presentation.gauge_class.get(obj) == "diagonal":
                if not _is_diagonal(m, tol):
                    raise GaugeConstraintError(
                        "object %s admits only diagonal gauges" % obj)

    def __getitem__(self, obj):
        return self.matrices[obj]


def _is_diagonal(m, tol=None):
    from .scalars import backend_of_value

    b = backend_of_value(m.m11)
    return b.is_zero(m.m12, tol) and b.is_zero(m.m21, tol)


def gauge(rep, gauge_assignment):
    """Equivalent representation: rho'(g) = N_src rho(g) N_tgt^{-1}."""
    new = {}
    for gen, (src, tgt) in rep.presentation.generators.items():
        new[gen] = (gauge_assignment[src] * rep.matrix(gen)
                    * gauge_assignment[tgt].inv())
    return rep.replace(new)


def normalize(rep, tree=None, root=None, tol=None):
    """Gauge a representation so every spanning-tree generator becomes I.

    The tree is a list of generator names whose edges span the object graph;
    the root object keeps gauge I, so the result is a deterministic
    representative (re-rooting conjugates everything globally).  Returns the
    normalized representation together with the gauge that was applied.
    Raises if the tree does not span or if some object's gauge class cannot
    absorb the required matrix.
    """
    pres = rep.presentation
    if tree is None:
        tree = pres.default_tree
    if root is None:
        root = pres.base_object
    if len(tree) != len(pres.objects) - 1:
        raise SpanningTreeError(
            "tree has %d edges for %d objects" % (len(tree), len(pres.objects)))

    adjacency = {}
    for gen in tree:
        src, tgt = pres.generator_endpoints(gen)
        adjacency.setdefault(src, []).append((gen, tgt, True))
        adjacency.setdefault(tgt, []).append((gen, src, False))

    matrices = {root: Mat2.identity(rep.backend)}
    frontier = [root]
    while frontier:
        obj = frontier.pop()
        for gen, other, forward in adjacency.get(obj, ()):
            if other in matrices:
                continue
            value = rep.matrix(gen)
            if forward:
                # rho'(g) = N_src rho(g) N_tgt^{-1} = I
                matrices[other] = matrices[obj] * value
            else:
                matrices[other] = matrices[obj] * value.inv()
            if pres.gauge_class.get(other) == "diagonal" and not _is_diagonal(
                    matrices[other], tol):
                raise GaugeConstraintError(
                    "normalizing needs a non-diagonal gauge at %s" % other)
            frontier.append(other)

    if len(matrices) != len(pres.objects):
        missing = sorted(set(pres.objects) - set(matrices))
        raise SpanningTreeError("tree does not reach: %s" % ", ".join(missing))

    n = GaugeAssignment(pres, matrices, tol)
    return gauge(rep, n), n


class GroupoidAutomorphism:
    """Generator-to-word map between presentations (usually an endomorphism).

    ``object_map`` relabels objects; every image word must run from the
    relabeled source to the relabeled target of its generator.  Relation
    preservation is not decided symbolically -- validate by evaluating on
    representations (``preserves_relations_on``), which is exact for the
    built-in moves.
    """

    def __init__(self, name, source, target, images, object_map=None):
        self.name = name
        self.source = source
        self.target = target
        self.object_map = dict(object_map or {})
        for obj in source.objects:
            self.object_map.setdefault(obj, obj)
        self.images = {}
        for gen in source.generators:
            w = images.get(gen, Word(((gen, 1),)))
            self.images[gen] = w
            src, tgt = source.generator_endpoints(gen)
            w_src, w_tgt = target.word_endpoints(w)
            if (w_src, w_tgt) != (self.object_map[src], self.object_map[tgt]):
                raise EndpointError(
                    "image of %s runs %s->%s, expected %s->%s"
                    % (gen, w_src, w_tgt,
                       self.object_map[src], self.object_map[tgt]))

    def image(self, gen):
        return self.images[gen]

    def image_of_word(self, w):
        steps = []
        for name, exp in w.steps:
            img = self.images[name]
            if exp == -1:
                img = img.inverse()
            steps.extend(img.steps)
        return Word(tuple(steps))

    def preserves_relations_on(self, rep, tol=None):
        """True when every relation's image evaluates to I in ``rep``."""
        return all(
            rep.evaluate(self.image_of_word(rel)).is_identity(tol)
            for rel in self.source.relations
        )


def apply_automorphism(h, rep):
    """Pull a representation back through a move: g gets rho(h(g))."""
    if rep.presentation is not h.source and (
            rep.presentation.name != h.source.name):
        raise EndpointError(
            "representation is not over the move's source presentation")
    new = {gen: rep.evaluate(h.image(gen)) for gen in h.source.generators}
    return GroupoidRep(h.target, new, rep.backend_name)


# ---------------------------------------------------------------------------
# Built-in presentation: four punctures
# ---------------------------------------------------------------------------

def _mod4(i):
    return ((i - 1) % 4) + 1


def tame_presentation():
    """Four objects s1..s4, loops g11..g44, sides g12, g23, g34, g41.

    Relations: the outer contour g12 g23 g34 g41 is trivial, and the full
    contour interleaving the four loops is trivial; on a normalized
    representation the latter is M1 M2 M3 M4 = I.
    """
    objects = ["s1", "s2", "s3", "s4"]
    generators = {}
    for i in range(1, 5):
        generators["g%d%d" % (i, i)] = ("s%d" % i, "s%d" % i)
        j = _mod4(i + 1)
        generators["g%d%d" % (i, j)] = ("s%d" % i, "s%d" % j)
    r_ext = word("g12", "g23", "g34", "g41")
    r_int = word("g11", "g12", "g22", "g23", "g33", "g34", "g44", "g41")
    return GroupoidPresentation(
        "tame",
        objects,
        generators,
        [r_ext, r_int],
        base_object="s1",
        default_tree=("g12", "g23", "g34"),
    )


def braid_automorphism_tame(i):
    """Half-twist move number i in {1,2,3} on the four-puncture presentation.

    The move fixes every loop g_jj and the two sides g_{i,i+1} and
    g_{i+2,i+3}; the remaining two sides pick up conjugating detours:

        g_{i+1,i+2} -> g_{i+1,i+1}^-1 g_{i,i+1}^-1 g_{i,i}^-1 g_{i,i+1} g_{i+1,i+2}
        g_{i+3,i}   -> g_{i+3,i} g_{i,i} g_{i,i+1} g_{i+1,i+1} g_{i,i+1}^-1

    (The first is the inverse of the usual reversed-side image; the second
    is forced by compatibility with the outer relation.)
    """
    if i not in (1, 2, 3):
        raise ParseError("tame braid index must be 1, 2 or 3")
    pres = tame_presentation()

    def g(a, b):
        return "g%d%d" % (_mod4(a), _mod4(b))

    images = {
        g(i + 1, i + 2): word(
            (g(i + 1, i + 1), -1), (g(i, i + 1), -1), (g(i, i), -1),
            g(i, i + 1), g(i + 1, i + 2)),
        g(i + 3, i): word(
            g(i + 3, i), g(i, i), g(i, i + 1), g(i + 1, i + 1),
            (g(i, i + 1), -1)),
    }
    return GroupoidAutomorphism("h%d" % i, pres, pres, images)


# ---------------------------------------------------------------------------
# Built-in presentation: two regular points and one irregular point
# ---------------------------------------------------------------------------

def wild_presentation():
    """Presentation around an irregular point with two Stokes directions.

    Objects: base points s0, s1, sinf; on the formal circle the two ray
    marks tauh1, tauh2 and the singular-direction marks sigh{1,2}{m,p};
    on the outer circle the matching marks sig{1,2}{m,p}.  Generators:
    the base-point paths g00, g11, g0inf, ginf1, g10, ginfinf; the rays
    rinf (tauh1 -> sinf) and r{1,2}{m,p} (sigh -> sig); the outer arcs
    alpha1, alpha2; the formal arcs alphah1, alphah2 and the connecting
    arcs beta1m, beta1p, beta2m, beta2p.

    Relations: the outer contour g0inf ginf1 g10, the interior contour
    g00 g0inf ginfinf ginf1 g11 g10, and the decomposition of the loop at
    infinity through the two Stokes arcs and the formal arc (conjugated
    back to sinf by rinf).  Named words: the two Stokes loops st1, st2 and
    the formal loop.  Formal-circle and outer-mark objects only admit
    diagonal gauges.
    """
    objects = [
        "s0", "s1", "sinf",
        "tauh1", "sigh1m", "sigh1p", "tauh2", "sigh2m", "sigh2p",
        "sig1m", "sig1p", "sig2m", "sig2p",
    ]
    generators = {
        "g00": ("s0", "s0"),
        "g11": ("s1", "s1"),
        "g0inf": ("s0", "sinf"),
        "ginf1": ("sinf", "s1"),
        "g10": ("s1", "s0"),
        "ginfinf": ("sinf", "sinf"),
        "rinf": ("tauh1", "sinf"),
        "r1m": ("sigh1m", "sig1m"),
        "r1p": ("sigh1p", "sig1p"),
        "r2m": ("sigh2m", "sig2m"),
        "r2p": ("sigh2p", "sig2p"),
        "alpha1": ("sig1m", "sig1p"),
        "alpha2": ("sig2m", "sig2p"),
        "alphah1": ("sigh1m", "sigh1p"),
        "alphah2": ("sigh2m", "sigh2p"),
        "beta1m": ("tauh1", "sigh1m"),
        "beta1p": ("sigh1p", "tauh2"),
        "beta2m": ("tauh2", "sigh2m"),
        "beta2p": ("sigh2p", "tauh1"),
    }
    r_ext = word("g0inf", "ginf1", "g10")
    r_int = word("g00", "g0inf", "ginfinf", "ginf1", "g11", "g10")
    # Loop at infinity read through the inner ring; the return ray r2p
    # enters inverted so the path chains (sig2p back to sigh2p).
    r_wild = word(
        ("ginfinf", -1), ("rinf", -1),
        "beta1m", "r1m", "alpha1", ("r1p", -1), "beta1p",
        "beta2m", "r2m", "alpha2", ("r2p", -1), "beta2p",
        "rinf",
    )
    named = {
        "st1": word("r1m", "alpha1", ("r1p", -1), ("alphah1", -1)),
        "st2": word("r2m", "alpha2", ("r2p", -1), ("alphah2", -1)),
        "formal_loop": word("beta1m", "alphah1", "beta1p",
                            "beta2m", "alphah2", "beta2p"),
    }
    gauge_class = {"s0": "any", "s1": "any", "sinf": "any"}
    for obj in objects[3:]:
        gauge_class[obj] = "diagonal"
    return GroupoidPresentation(
        "wild",
        objects,
        generators,
        [r_ext, r_int, r_wild],
        gauge_class=gauge_class,
        named_words=named,
        base_object="tauh1",
        default_tree=(
            "g0inf", "ginf1", "rinf",
            "beta1m", "alphah1", "beta1p", "beta2m", "alphah2",
            "r1m", "r1p", "r2m", "r2p",
        ),
    )


_WILD_SWAP = {
    "tauh1": "tauh2", "tauh2": "tauh1",
    "sigh1m": "sigh2m", "sigh2m": "sigh1m",
    "sigh1p": "sigh2p", "sigh2p": "sigh1p",
    "sig1m": "sig2m", "sig2m": "sig1m",
    "sig1p": "sig2p", "sig2p": "sig1p",
}

_WILD_SWAP_GENS = {
    "alpha1": "alpha2", "alpha2": "alpha1",
    "alphah1": "alphah2", "alphah2": "alphah1",
    "r1m": "r2m", "r2m": "r1m",
    "r1p": "r2p", "r2p": "r1p",
    "beta1m": "beta2m", "beta2m": "beta1m",
    "beta1p": "beta2p", "beta2p": "beta1p",
}


def braid_automorphism_wild(kind):
    """The two moves induced by rotating the irregular data at infinity.

    ``"pure"`` (the square of the half-turn) drags only the base ray:
    rinf -> rinf ginfinf^-1, everything else fixed.  ``"full"`` is the
    half-turn itself: it exchanges the index-1 and index-2 marks (objects
    and arcs alike) and sends rinf to the detour through the first Stokes
    block, (beta1m r1m alpha1 r1p^-1 beta1p)^-1 rinf.  The Weyl conjugation
    that re-expresses the result in the original chart is applied by the
    trace-coordinate layer, not here.
    """
    pres = wild_presentation()
    if kind == "pure":
        images = {"rinf": word("rinf", ("ginfinf", -1))}
        return GroupoidAutomorphism("wild_pure", pres, pres, images)
    if kind == "full":
        images = {g: word(img) for g, img in _WILD_SWAP_GENS.items()}
        images["rinf"] = word(
            ("beta1p", -1), ("r1p", 1), ("alpha1", -1), ("r1m", -1),
            ("beta1m", -1), "rinf",
        )
        return GroupoidAutomorphism("wild_full", pres, pres, images,
                                    object_map=_WILD_SWAP)
    raise ParseError("wild braid kind must be 'pure' or 'full'")
