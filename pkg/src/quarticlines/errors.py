"""Exception taxonomy shared across the package.

Domain errors (everything below QuarticLinesError) signal a violated
mathematical precondition, not a bug; callers such as the CLI map them to
a dedicated exit status.
"""


class QuarticLinesError(Exception):
    """Base class for all domain errors raised by this package."""


class MalformedSubstitutionError(QuarticLinesError):
    """A substitution image is not a linear binary form (or zero)."""


class ZeroFormError(QuarticLinesError):
    """An operation that needs a nonzero form received the zero form."""


class DegreeError(QuarticLinesError):
    """A form has the wrong degree for the requested operation."""


class DegenerateSpanError(QuarticLinesError):
    """Two coincident projective points cannot span a line."""


class SingularMatrixError(QuarticLinesError):
    """A projective transform needs an invertible matrix."""


class NoContactError(QuarticLinesError):
    """Contact points requested for a transverse or contained line."""


class NotOnSurfaceError(QuarticLinesError):
    """The given point does not lie on the surface."""


class SingularPointError(QuarticLinesError):
    """The surface has vanishing gradient at the given point."""


class DegenerateSectionError(QuarticLinesError):
    """The tangent plane section is not nodal at the base point."""


class TangentDirectionError(QuarticLinesError):
    """The residual quadratic has a double root; the pencil line is a
    bitangent through the base point rather than a source of new points."""


class ContainedDirectionError(QuarticLinesError):
    """A pencil line lies inside the section curve; the residual
    intersection degenerates.  Carries the offending parameter."""

    def __init__(self, param, message=None):
        self.param = param
        super().__init__(message or f"pencil direction {param} is contained in the curve")


class ParseError(QuarticLinesError):
    """Syntax or degree error in a polynomial expression string."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
