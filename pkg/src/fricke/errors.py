"""Exception hierarchy with stable machine-readable codes.

The ``code`` attribute is what the CLI emits in its error JSON, so the
strings here are part of the external interface and must stay stable.
"""


class CharVarietyError(Exception):
    code = "error"


class ParseError(CharVarietyError):
    code = "bad_input"


class BackendMismatchError(CharVarietyError):
    code = "backend_mismatch"


class SingularMatrixError(CharVarietyError):
    code = "singular_matrix"


class WordCompositionError(CharVarietyError):
    """Word steps whose endpoints do not chain."""

    code = "word_not_composable"


class EndpointError(CharVarietyError):
    """Automorphism image word with wrong source or target."""

    code = "endpoint_mismatch"


class SpanningTreeError(CharVarietyError):
    code = "tree_not_spanning"


class GaugeConstraintError(CharVarietyError):
    """A normalization step would need a gauge outside the object's class."""

    code = "gauge_constraint"


class OffSurfaceError(CharVarietyError):
    """Point does not satisfy the defining surface equation."""

    code = "off_surface"

    def __init__(self, message, residual=None):
        super().__init__(message)
        self.residual = residual


class NotARootError(CharVarietyError):
    code = "not_a_root"


class ResonantEigenvalueError(CharVarietyError):
    """lambda in {0, +-1}: poles of every wild chart formula."""

    code = "resonant_lambda"


class ResonantTraceError(CharVarietyError):
    """a1 = +-2: the tame normal form with distinct eigenvalues breaks down."""

    code = "resonant_a1"


class BoundaryPointError(CharVarietyError):
    """s = 2: the canonical Stokes representative is undefined."""

    code = "boundary_point_s2"


class NonGenericPointError(CharVarietyError):
    code = "non_generic_point"


class BadWordError(CharVarietyError):
    code = "bad_word"
