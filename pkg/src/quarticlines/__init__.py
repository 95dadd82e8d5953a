"""Exact bitangent lines and quadratic rational points of quartic surfaces.

A quartic surface in P^3 meets a line in a binary quartic; the line is
bitangent exactly when that restriction is a scalar times the square of a
quadratic.  This package decides such contact exactly over Q, enumerates
rational bitangents up to a Plucker height bound, constructs quadratic
points through tangent-plane projection, and verifies symbolically that
the surface x^4 - x*y^3 - z^4 + z*w^3 carries a one-parameter family of
quadritangent lines.
"""

__version__ = "0.1.0"

from .forms import (
    BinaryForm,
    QuarticForm,
    SquarefreeDecomposition,
    TernaryQuartic,
    binary_discriminant,
    is_scaled_square,
    squarefree_decompose,
    substitute_linear,
)
from .projective import (
    Line,
    Pencil,
    Plane,
    ProjPoint,
    lines_meet,
    pencil_member,
    pgl4_apply,
    plucker_from_points,
)
from .quadpoints import (
    BranchForm,
    QuadraticPoint,
    TangentSection,
    bitangents_through_point,
    branch_form,
    quadratic_point_at,
    residual_quadratic,
    tangent_plane,
    tangent_section,
)
from .search import (
    BitangentCatalog,
    HeightBound,
    enumerate_lines,
    incidence_graph,
    search_bitangents,
    search_rational_points,
)
from .tangency import (
    ContactPoint,
    FamilyReport,
    TangencyType,
    classify_tangency,
    contact_points,
    restrict_quartic_to_line,
    verify_quadritangent_family,
)

__all__ = [
    "__version__",
    "BinaryForm",
    "QuarticForm",
    "SquarefreeDecomposition",
    "TernaryQuartic",
    "binary_discriminant",
    "is_scaled_square",
    "squarefree_decompose",
    "substitute_linear",
    "Line",
    "Pencil",
    "Plane",
    "ProjPoint",
    "lines_meet",
    "pencil_member",
    "pgl4_apply",
    "plucker_from_points",
    "BranchForm",
    "QuadraticPoint",
    "TangentSection",
    "bitangents_through_point",
    "branch_form",
    "quadratic_point_at",
    "residual_quadratic",
    "tangent_plane",
    "tangent_section",
    "BitangentCatalog",
    "HeightBound",
    "enumerate_lines",
    "incidence_graph",
    "search_bitangents",
    "search_rational_points",
    "ContactPoint",
    "FamilyReport",
    "TangencyType",
    "classify_tangency",
    "contact_points",
    "restrict_quartic_to_line",
    "verify_quadritangent_family",
]
