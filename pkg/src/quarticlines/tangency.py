"""Restriction of a quartic surface to a line and contact classification.

The restriction of the defining quartic to a rational line is a binary
quartic (or the zero form, when the line lies inside the surface).  The
root multiplicities of that restriction classify the contact:

    (1,1,1,1) Transverse    (2,1,1) SimpleTangent    (3,1) Flex
    (2,2)     Bitangent     (4)     Quadritangent    zero  Contained

A line counts as bitangent iff the restriction is a scalar times the
square of a quadratic, i.e. kind Bitangent or Quadritangent.  Contained
lines are kept out of the bitangent count and reported separately.

This module also verifies, fully symbolically, that the package's running
example surface x^4 - x*y^3 - z^4 + z*w^3 carries a one-parameter family
of quadritangent lines.  Two readings of the family's second defining
equation are supported and neither is hard-coded as the right one; the
report states which reading actually yields a quadritangent family.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import NoContactError
from .forms import (
    BinaryForm,
    QuarticForm,
    SquarefreeDecomposition,
    QuadraticElement,
    binary_discriminant,
    is_scaled_square,
    rational_roots,
    squarefree_decompose,
    squarefree_kernel,
    substitute_linear,
)
from .projective import Line, ProjPoint

__all__ = [
    "TRANSVERSE",
    "SIMPLE_TANGENT",
    "FLEX",
    "BITANGENT",
    "QUADRITANGENT",
    "CONTAINED",
    "TangencyType",
    "ContactPoint",
    "QuadraticContact",
    "FamilyReport",
    "FAMILY_QUARTIC",
    "restrict_quartic_to_line",
    "classify_tangency",
    "contact_points",
    "family_line",
    "verify_quadritangent_family",
]

TRANSVERSE = "Transverse"
SIMPLE_TANGENT = "SimpleTangent"
FLEX = "Flex"
BITANGENT = "Bitangent"
QUADRITANGENT = "Quadritangent"
CONTAINED = "Contained"

_PARTITION_TO_KIND = {
    (1, 1, 1, 1): TRANSVERSE,
    (2, 1, 1): SIMPLE_TANGENT,
    (3, 1): FLEX,
    (2, 2): BITANGENT,
    (4,): QUADRITANGENT,
}


@dataclass(frozen=True)
class TangencyType:
    """Contact classification of a (surface, line) pair.

    ``witness`` is the squarefree decomposition of the restriction; it is
    absent exactly for contained lines."""

    kind: str
    witness: Optional[SquarefreeDecomposition]

    @property
    def is_bitangent(self) -> bool:
        return self.kind in (BITANGENT, QUADRITANGENT)

    @classmethod
    def from_decomposition(cls, dec: SquarefreeDecomposition) -> "TangencyType":
        return cls(_PARTITION_TO_KIND[dec.root_partition()], dec)


@dataclass(frozen=True)
class QuadraticContact:
    """A conjugate pair of contact points, reported once.

    ``coords[i] = (a_i, b_i)`` means coordinate a_i + b_i*sqrt(kernel)."""

    kernel: int
    coords: tuple[tuple[Fraction, Fraction], ...]


@dataclass(frozen=True)
class ContactPoint:
    line: Line
    factor: BinaryForm
    multiplicity: int
    point_data: Union[ProjPoint, QuadraticContact]


def restrict_quartic_to_line(F: QuarticForm, l: Line) -> BinaryForm:
    """The binary quartic cut on the line: F at u*span0 + v*span1."""
    a, b = l.span
    return substitute_linear(F, [(a.coords[i], b.coords[i]) for i in range(4)])


def classify_tangency(F: QuarticForm, l: Line) -> TangencyType:
    f = restrict_quartic_to_line(F, l)
    if f.is_zero:
        return TangencyType(CONTAINED, None)
    return TangencyType.from_decomposition(squarefree_decompose(f))


def _point_on_line(l: Line, u, v) -> ProjPoint:
    a, b = l.span
    return ProjPoint(tuple(u * a.coords[i] + v * b.coords[i] for i in range(4)))


def contact_points(F: QuarticForm, l: Line, tangency: Optional[TangencyType] = None):
    """Contact points of a tangent line: one entry per multiplicity >= 2
    factor of the restriction, rational points as ProjPoint and conjugate
    quadratic pairs as QuadraticContact.  Every returned point is checked
    against F = 0 by exact substitution.

    ``tangency`` may carry an already-computed classification of the same
    (F, l) pair to avoid restricting twice."""
    tt = tangency if tangency is not None else classify_tangency(F, l)
    if tt.kind in (TRANSVERSE, CONTAINED):
        raise NoContactError(f"no contact points for a {tt.kind.lower()} line")
    out = []
    a, b = l.span
    for factor, mult in tt.witness.factors:
        if mult < 2:
            continue
        if factor.degree == 1:
            g0, g1 = (int(c) for c in factor.coeffs)
            pt = _point_on_line(l, g1, -g0)  # root of g0*u + g1*v
            assert F.evaluate(pt.coords) == 0
            out.append(ContactPoint(l, factor, mult, pt))
            continue
        if factor.degree != 2:
            raise AssertionError("a multiplicity >= 2 factor of a quartic has degree <= 2")
        roots = rational_roots(factor)
        if roots:
            for (ru, rv), _ in roots:
                pt = _point_on_line(l, ru, rv)
                assert F.evaluate(pt.coords) == 0
                out.append(ContactPoint(l, factor, mult, pt))
            continue
        # irreducible over Q: conjugate pair (u:v) = (-g1 +- k*sqrt(d) : 2*g0)
        g0, g1, g2 = (int(c) for c in factor.coeffs)
        disc = int(binary_discriminant(factor))
        d = squarefree_kernel(disc)
        k = _isqrt_exact(disc // d)
        coords = []
        for i in range(4):
            coords.append((Fraction(-g1 * a.coords[i] + 2 * g0 * b.coords[i]), Fraction(k * a.coords[i])))
        value = F.evaluate([QuadraticElement(ai, bi, d) for ai, bi in coords])
        assert value == 0
        out.append(ContactPoint(l, factor, mult, QuadraticContact(d, tuple(coords))))
    out.sort(key=lambda cp: (-cp.multiplicity, cp.factor.coeffs))
    return out


def _isqrt_exact(n: int) -> int:
    import math

    r = math.isqrt(n)
    assert r * r == n
    return r


# ---------------------------------------------------------------------------
# bivariate parameter polynomials (for the symbolic family check)
# ---------------------------------------------------------------------------


class _Poly2:
    """A polynomial in the family parameters (s0, s1) over Q."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        cleaned = {}
        for exp, c in (terms or {}).items():
            c = Fraction(c)
            if c != 0:
                cleaned[tuple(exp)] = cleaned.get(tuple(exp), Fraction(0)) + c
        self.terms = {e: c for e, c in cleaned.items() if c != 0}

    @classmethod
    def const(cls, c) -> "_Poly2":
        return cls({(0, 0): Fraction(c)})

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "_Poly2":
        return cls({(i, j): Fraction(c)})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "_Poly2") -> "_Poly2":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return _Poly2(out)

    def __sub__(self, other: "_Poly2") -> "_Poly2":
        return self + other.scale(-1)

    def __mul__(self, other: "_Poly2") -> "_Poly2":
        out: dict = {}
        for (i, j), c in self.terms.items():
            for (k, l), d in other.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, Fraction(0)) + c * d
        return _Poly2(out)

    def scale(self, c) -> "_Poly2":
        return _Poly2({e: v * Fraction(c) for e, v in self.terms.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, _Poly2) and self.terms == other.terms

    def evaluate(self, s0, s1) -> Fraction:
        s0, s1 = Fraction(s0), Fraction(s1)
        return sum((c * s0 ** i * s1 ** j for (i, j), c in self.terms.items()), Fraction(0))

    def homogeneous_degree(self) -> Optional[int]:
        degs = {i + j for (i, j) in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return None

    def as_binary_form(self) -> BinaryForm:
        """Homogeneous terms as a binary form in (s0, s1)."""
        d = self.homogeneous_degree()
        if d is None:
            raise ValueError("polynomial is not homogeneous")
        coeffs = [Fraction(0)] * (d + 1)
        for (i, j), c in self.terms.items():
            coeffs[d - i] = c  # leading-to-trailing in s0
        return BinaryForm(coeffs)

    def proportionality(self, other: "_Poly2") -> Optional[Fraction]:
        """The constant t with self == t*other, if one exists."""
        if other.is_zero:
            return Fraction(0) if self.is_zero else None
        if self.is_zero:
            return Fraction(0)
        e, c = next(iter(other.terms.items()))
        if e not in self.terms:
            return None
        t = self.terms[e] / c
        return t if self == other.scale(t) else None

    def format(self, names=("s0", "s1")) -> str:
        if self.is_zero:
            return "0"
        parts = []
        for (i, j), c in sorted(self.terms.items(), reverse=True):
            mono = []
            if i:
                mono.append(names[0] + (f"^{i}" if i > 1 else ""))
            if j:
                mono.append(names[1] + (f"^{j}" if j > 1 else ""))
            m = "*".join(mono)
            if not m:
                parts.append((" + " if c > 0 else " - ") + str(abs(c)))
            elif abs(c) == 1:
                parts.append((" + " if c > 0 else " - ") + m)
            else:
                parts.append((" + " if c > 0 else " - ") + f"{abs(c)}*{m}")
        s = "".join(parts)
        return s[3:] if s.startswith(" + ") else "-" + s[3:]

    def __repr__(self) -> str:
        return f"_Poly2({self.format()})"


def _restrict_with_parameters(F: QuarticForm, images) -> list[_Poly2]:
    """Restriction of F where each variable maps to A_i(s)*u + B_i(s)*v.

    Returns the five (u, v)-coefficients as parameter polynomials."""
    acc = [_Poly2() for _ in range(5)]
    for exp, coeff in F.terms():
        part = [_Poly2.const(coeff)]
        for i in range(4):
            A, B = images[i]
            for _ in range(exp[i]):
                nxt = [_Poly2() for _ in range(len(part) + 1)]
                for k, p in enumerate(part):
                    nxt[k] = nxt[k] + p * A
                    nxt[k + 1] = nxt[k + 1] + p * B
                part = nxt
        for k, p in enumerate(part):
            acc[k] = acc[k] + p
    return acc


# ---------------------------------------------------------------------------
# the quadritangent family of the example surface
# ---------------------------------------------------------------------------

# x^4 - x*y^3 - z^4 + z*w^3: the surface carrying the infinite rational
# family of quadritangent lines.
FAMILY_QUARTIC = QuarticForm(
    {(4, 0, 0, 0): 1, (1, 3, 0, 0): -1, (0, 0, 4, 0): -1, (0, 0, 1, 3): 1}
)

_READINGS = ("corrected", "as_written")


def _family_data(reading: str):
    """Line equations and a spanning parameterization for each reading.

    The spans are validated symbolically against the equations, so a wrong
    parameterization cannot slip through."""
    s0 = _Poly2.monomial(1, 0)
    s1 = _Poly2.monomial(0, 1)
    zero = _Poly2()
    one = _Poly2.const(1)
    s0_2 = s0 * s0
    s0_3 = s0_2 * s0
    s1_3 = s1 * s1 * s1
    eq1 = (s0_3, zero, s1_3.scale(-1), zero)  # s0^3 x = s1^3 z
    if reading == "corrected":
        eq2 = (zero, s1.scale(-1), zero, s0)  # s0 w = s1 y
        span = (
            (s1_3, zero, s0_3, zero),
            (zero, s0, zero, s1),
        )
    elif reading == "as_written":
        eq2 = (zero, zero, s1.scale(-1), s0)  # s0 w = s1 z
        span = (
            (s1_3, zero, s0_3, s0_2 * s1),
            (zero, one, zero, zero),
        )
    else:
        raise ValueError(f"unknown reading {reading!r}; expected one of {_READINGS}")
    for eq in (eq1, eq2):
        for pt in span:
            total = _Poly2()
            for c, x in zip(eq, pt):
                total = total + c * x
            assert total.is_zero, "family span does not satisfy its own line equations"
    return span


def family_line(reading: str, s0: int, s1: int) -> Line:
    """The family member at a concrete parameter (s0 : s1)."""
    if s0 == 0 and s1 == 0:
        raise ValueError("(0, 0) is not a parameter")
    span = _family_data(reading)
    pts = []
    for pt in span:
        pts.append(tuple(int(c.evaluate(s0, s1)) for c in pt))
    return Line(ProjPoint(pts[0]), ProjPoint(pts[1]))


@dataclass(frozen=True)
class FamilyReport:
    """Outcome of the symbolic family verification for one reading."""

    reading: str
    restriction: tuple[str, ...]  # the five (u, v)-coefficients as strings
    is_fourth_power: bool
    direction: Optional[tuple[int, int]]  # (alpha : beta) with contact at the root
    scalar_factor: Optional[str]
    contact_point: Optional[tuple[str, str, str, str]]
    contained_params: tuple[tuple[int, int], ...]
    notes: tuple[str, ...]

    def to_dict(self) -> dict:
        return {
            "reading": self.reading,
            "restriction_coefficients": list(self.restriction),
            "is_fourth_power": self.is_fourth_power,
            "direction": list(self.direction) if self.direction else None,
            "scalar_factor": self.scalar_factor,
            "contact_point": list(self.contact_point) if self.contact_point else None,
            "contained_params": [list(p) for p in self.contained_params],
            "notes": list(self.notes),
        }


def _binomial_vector(alpha: int, beta: int) -> tuple[int, ...]:
    return (
        alpha ** 4,
        4 * alpha ** 3 * beta,
        6 * alpha ** 2 * beta ** 2,
        4 * alpha * beta ** 3,
        beta ** 4,
    )


def _fourth_power_split(rc: list[_Poly2]):
    """If rc represents c(s) * (alpha*u + beta*v)^4 for a constant rational
    direction, return ((alpha, beta), c); otherwise None."""
    nonzero = [i for i, p in enumerate(rc) if not p.is_zero]
    if not nonzero:
        return None
    candidates = [(1, 0), (0, 1), (1, 1), (1, -1)]
    if not rc[0].is_zero and not rc[1].is_zero:
        t = rc[1].proportionality(rc[0])  # rc1/rc0 = 4*beta/alpha
        if t is not None:
            q = t / 4
            candidates.append((q.denominator, q.numerator))
    for alpha, beta in candidates:
        B = _binomial_vector(alpha, beta)
        ok = all(
            (rc[i] * _Poly2.const(B[j]) == rc[j] * _Poly2.const(B[i]))
            for i in range(5)
            for j in range(i + 1, 5)
        )
        if not ok:
            continue
        i0 = next(i for i in range(5) if B[i] != 0)
        if rc[i0].is_zero:
            continue
        scalar = rc[i0].scale(Fraction(1, B[i0]))
        if all((rc[i] == scalar.scale(B[i])) for i in range(5)):
            return (alpha, beta), scalar
    return None


def verify_quadritangent_family(variant: str) -> FamilyReport:
    """Symbolically restrict the family surface to the family line with an
    indeterminate parameter (s0 : s1) and report whether the restriction
    is identically a scalar times the fourth power of a linear form.

    ``variant`` selects the reading of the family's second line equation:
    "as_written" or "corrected".  The check is exact; nothing about either
    reading is assumed in advance.
    """
    span = _family_data(variant)
    images = [(span[0][i], span[1][i]) for i in range(4)]
    rc = _restrict_with_parameters(FAMILY_QUARTIC, images)
    restriction = tuple(p.format() for p in rc)
    notes = []

    if all(p.is_zero for p in rc):
        return FamilyReport(
            reading=variant,
            restriction=restriction,
            is_fourth_power=False,
            direction=None,
            scalar_factor=None,
            contact_point=None,
            contained_params=(),
            notes=("restriction vanishes identically; the family lies inside the surface",),
        )

    split = _fourth_power_split(rc)
    if split is None:
        nz = [i for i, p in enumerate(rc) if not p.is_zero]
        notes.append(
            "restriction is not a scaled fourth power: nonzero coefficients at "
            + ", ".join(f"u^{4 - i}*v^{i}" for i in nz)
        )
        return FamilyReport(
            reading=variant,
            restriction=restriction,
            is_fourth_power=False,
            direction=None,
            scalar_factor=None,
            contact_point=None,
            contained_params=_common_zero_params(rc),
            notes=tuple(notes),
        )

    (alpha, beta), scalar = split
    # contact point: the root of alpha*u + beta*v lifted through the span
    import math as _math

    g = _math.gcd(beta, alpha)
    ru, rv = beta // g, -alpha // g
    if (ru or rv) and (ru if ru else rv) < 0:
        ru, rv = -ru, -rv
    contact = tuple(
        (span[0][i].scale(ru) + span[1][i].scale(rv)).format() for i in range(4)
    )
    contained = _scalar_zero_params(scalar)
    notes.append(
        "line is quadritangent for every parameter where the scalar factor "
        "does not vanish; it is contained exactly at the listed parameters"
    )
    return FamilyReport(
        reading=variant,
        restriction=restriction,
        is_fourth_power=True,
        direction=(alpha, beta),
        scalar_factor=scalar.format(),
        contact_point=contact,
        contained_params=contained,
        notes=tuple(notes),
    )


def _scalar_zero_params(scalar: _Poly2) -> tuple[tuple[int, int], ...]:
    if scalar.homogeneous_degree() is None:
        return ()
    roots = rational_roots(scalar.as_binary_form())
    return tuple(r for r, _ in roots)


def _common_zero_params(rc: list[_Poly2]) -> tuple[tuple[int, int], ...]:
    """Rational parameters where every restriction coefficient vanishes,
    i.e. where the line is contained in the surface."""
    forms = []
    for p in rc:
        if p.is_zero:
            continue
        if p.homogeneous_degree() is None:
            return ()
        forms.append(p.as_binary_form())
    if not forms:
        return ()
    candidates = {r for r, _ in rational_roots(forms[0])}
    for f in forms[1:]:
        candidates &= {r for r, _ in rational_roots(f)}
    return tuple(sorted(candidates))
