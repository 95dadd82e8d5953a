"""Quadratic rational points through tangent-plane projection.

For a smooth rational point p of the surface, the tangent plane cuts a
plane quartic that is singular at p, generically with a node.  Projecting
from the node maps the section two-to-one onto the pencil of lines through
p, so each pencil parameter pulls back to a pair of conjugate quadratic
(exceptionally rational) points.  The parameters where the pair collapses
are the roots of a degree-6 binary form, and those directions are the
bitangents through p.

All constructions are exact: every emitted point is verified to satisfy
F = 0 identically modulo its minimal polynomial before it is returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import (
    ContainedDirectionError,
    DegenerateSectionError,
    NotOnSurfaceError,
    SingularPointError,
    TangentDirectionError,
)
from .forms import (
    BinaryForm,
    QuadraticElement,
    QuarticForm,
    TernaryQuartic,
    binary_div_exact,
    binary_gcd,
    rational_roots,
    squarefree_decompose,
    squarefree_kernel,
)
from .projective import Line, Pencil, Plane, ProjPoint, pencil_member
from .tangency import classify_tangency

__all__ = [
    "NODE",
    "CUSP",
    "DEGENERATE",
    "TangentSection",
    "QuadraticPoint",
    "BranchForm",
    "tangent_plane",
    "tangent_section",
    "residual_quadratic",
    "quadratic_point_at",
    "branch_form",
    "bitangents_through_point",
]

NODE = "Node"
CUSP = "Cusp"
DEGENERATE = "Degenerate"


def tangent_plane(F: QuarticForm, p: ProjPoint) -> Plane:
    """The tangent plane of the surface at a smooth point, with canonical
    dual coordinates given by the gradient."""
    if F.evaluate(p.coords) != 0:
        raise NotOnSurfaceError(f"{p} does not lie on the surface")
    grad = F.gradient(p.coords)
    if all(g == 0 for g in grad):
        raise SingularPointError(f"the surface is singular at {p}")
    return Plane(grad)


@dataclass(frozen=True)
class TangentSection:
    """The plane quartic cut by the tangent plane at the base point.

    ``curve`` lives in the vertex-first frame (base point, pencil basis):
    the plane is parameterized as a*p + b*b0 + c*b1 and the curve vanishes
    at (1:0:0) to order >= 2.  ``tangent_cone`` is the quadratic jet there,
    a binary quadratic in (b, c)."""

    base_point: ProjPoint
    plane: Plane
    curve: TernaryQuartic
    singularity_kind: str
    tangent_cone: BinaryForm
    pencil: Pencil

    @property
    def frame(self) -> tuple[ProjPoint, ProjPoint, ProjPoint]:
        return (self.base_point, self.pencil.basis[0], self.pencil.basis[1])


def tangent_section(F: QuarticForm, p: ProjPoint) -> TangentSection:
    plane = tangent_plane(F, p)
    pencil = Pencil(p, plane)
    b0, b1 = pencil.basis

    # exact expansion of F(a*p + b*b0 + c*b1) as a ternary quartic
    coeffs: dict[tuple[int, int, int], Fraction] = {}
    frame = (p.coords, b0.coords, b1.coords)
    for exp, c in F.terms():
        part: dict[tuple[int, int, int], Fraction] = {(0, 0, 0): Fraction(c)}
        for var in range(4):
            for _ in range(exp[var]):
                nxt: dict[tuple[int, int, int], Fraction] = {}
                for mono, mc in part.items():
                    for k in range(3):
                        coeff = frame[k][var]
                        if coeff:
                            key = tuple(mono[i] + (1 if i == k else 0) for i in range(3))
                            nxt[key] = nxt.get(key, Fraction(0)) + mc * coeff
                part = nxt
        for mono, mc in part.items():
            coeffs[mono] = coeffs.get(mono, Fraction(0)) + mc
    curve = TernaryQuartic(coeffs, allow_zero=True)

    assert curve[(4, 0, 0)] == 0, "base point must lie on the section"
    assert curve[(3, 1, 0)] == 0 and curve[(3, 0, 1)] == 0, (
        "section must be singular at the base point"
    )

    jet = BinaryForm((curve[(2, 2, 0)], curve[(2, 1, 1)], curve[(2, 0, 2)]))
    if jet.is_zero:
        kind = DEGENERATE
    elif jet.coeffs[1] ** 2 - 4 * jet.coeffs[0] * jet.coeffs[2] != 0:
        kind = NODE
    else:
        kind = CUSP
    return TangentSection(
        base_point=p,
        plane=plane,
        curve=curve,
        singularity_kind=kind,
        tangent_cone=jet,
        pencil=pencil,
    )


def _pencil_coefficient_forms(sec: TangentSection) -> tuple[BinaryForm, BinaryForm, BinaryForm]:
    """The residual quadratic with the pencil parameter left symbolic.

    Restricting the section curve to the pencil line s*p + t*(a*b0 + b*b1)
    gives t^2 * (C2(a,b) s^2 + C3(a,b) s t + C4(a,b) t^2); the returned
    forms are C2, C3, C4 as binary forms in (a, b)."""
    T = sec.curve
    out = []
    for m in (2, 3, 4):
        cs = [T[(4 - m, m - j, j)] for j in range(m + 1)]
        out.append(BinaryForm(cs))
    return tuple(out)


def residual_quadratic(sec: TangentSection, param) -> BinaryForm:
    """Restrict the section to the pencil line at (a:b), divide out the
    forced double vanishing at the vertex, and return the residual
    binary quadratic in the line parameter (s, t)."""
    if sec.singularity_kind != NODE:
        raise DegenerateSectionError(
            f"section at {sec.base_point} is {sec.singularity_kind}, not a node"
        )
    a, b = Fraction(param[0]), Fraction(param[1])
    if a == 0 and b == 0:
        raise ValueError("pencil parameter (0, 0) is not a point of P^1")
    C2, C3, C4 = _pencil_coefficient_forms(sec)
    q = BinaryForm((C2.evaluate(a, b), C3.evaluate(a, b), C4.evaluate(a, b)))
    if q.is_zero:
        raise ContainedDirectionError((param[0], param[1]))
    return q


@dataclass(frozen=True)
class QuadraticPoint:
    """A point of the surface over a degree <= 2 extension of Q.

    Coordinates are pairs (a_i, b_i) standing for a_i + b_i*alpha where
    alpha has the stored monic minimal polynomial.  For rational
    degenerations the minimal polynomial is linear and every b_i is 0."""

    min_poly: tuple[Fraction, ...]  # monic, ascending: (c0, c1) or (c0, 0, 1)
    coords: tuple[tuple[Fraction, Fraction], ...]
    discriminant: int  # squarefree kernel of the field discriminant; 1 if rational
    degenerate_rational: bool

    def conjugate(self) -> "QuadraticPoint":
        return QuadraticPoint(
            self.min_poly,
            tuple((a, -b) for a, b in self.coords),
            self.discriminant,
            self.degenerate_rational,
        )

    def verify_on(self, F: QuarticForm) -> bool:
        if self.degenerate_rational:
            return F.evaluate([a for a, _ in self.coords]) == 0
        d = self.discriminant
        value = F.evaluate([QuadraticElement(a, b, d) for a, b in self.coords])
        return value == 0

    def format(self) -> str:
        if self.degenerate_rational:
            return "(" + " : ".join(str(a) for a, _ in self.coords) + ")"
        parts = []
        for a, b in self.coords:
            if b == 0:
                parts.append(str(a))
            elif a == 0:
                parts.append(f"{b}*r" if abs(b) != 1 else ("r" if b > 0 else "-r"))
            else:
                parts.append(f"{a}{'+' if b > 0 else '-'}{abs(b)}*r")
        return "(" + " : ".join(parts) + f")  with r^2 = {self.discriminant}"


def _canonicalize_quad_coords(coords):
    """Scale conjugate-pair coordinates to primitive integers with a
    deterministic sign."""
    nums = []
    dens = []
    for a, b in coords:
        nums.extend((a.numerator, b.numerator))
        dens.extend((a.denominator, b.denominator))
    den = math.lcm(*dens)
    ints = [n * (den // d) for n, d in zip(nums, dens)]
    g = math.gcd(*ints)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    ints = [x // g for x in ints]
    return tuple((Fraction(ints[2 * i]), Fraction(ints[2 * i + 1])) for i in range(len(coords)))


def quadratic_point_at(F: QuarticForm, p: ProjPoint, param):
    """The pair of pre-images of a pencil parameter: two conjugate
    quadratic points, or two rational points flagged as degenerate.

    Raises TangentDirectionError when the residual quadratic has a double
    root (the pencil line is a bitangent through p)."""
    sec = tangent_section(F, p)
    q = residual_quadratic(sec, param)
    a, b = Fraction(param[0]), Fraction(param[1])
    b0, b1 = sec.pencil.basis
    direction = tuple(a * x + b * y for x, y in zip(b0.coords, b1.coords))
    # clear denominators of the pencil direction
    den = math.lcm(*(c.denominator for c in direction))
    direction = tuple(int(c * den) for c in direction)

    c2, c3, c4 = q.coeffs
    disc = c3 * c3 - 4 * c2 * c4
    if disc == 0:
        raise TangentDirectionError(
            f"pencil direction {tuple(param)} is tangent: the residual quadratic "
            "has a double root; this line is a bitangent through the base point"
        )

    # integers: scale the residual so its coefficients are integral
    qden = math.lcm(*(c.denominator for c in q.coeffs))
    A, B, C = (int(c * qden) for c in q.coeffs)
    D = B * B - 4 * A * C
    d = squarefree_kernel(D)
    k = math.isqrt(abs(D) // abs(d)) if d else 0
    assert d != 0 and k * k * d == D

    pcoords = p.coords
    if d == 1:
        # rational roots (s : t) of A s^2 + B s t + C t^2
        pts = []
        for sign in (1, -1):
            if A != 0:
                s_, t_ = -B + sign * k, 2 * A
            else:
                # root at t = 0 is the base point itself; the other root solves B s + C t = 0
                s_, t_ = (1, 0) if sign == 1 else (-C, B)
            coords = tuple(
                (Fraction(s_ * pcoords[i] + t_ * direction[i]), Fraction(0)) for i in range(4)
            )
            coords = _canonicalize_quad_coords(coords)
            pt = QuadraticPoint((Fraction(0), Fraction(1)), coords, 1, True)
            assert pt.verify_on(F)
            pts.append(pt)
        return tuple(pts)

    if A == 0:
        # cannot happen with irrational disc: disc = B^2 is a square then
        raise AssertionError("degenerate leading coefficient with irrational discriminant")

    # (s : t) = (-B +- k*sqrt(d) : 2A)
    coords = tuple(
        (
            Fraction(-B * pcoords[i] + 2 * A * direction[i]),
            Fraction(k * pcoords[i]),
        )
        for i in range(4)
    )
    coords = _canonicalize_quad_coords(coords)
    min_poly = (Fraction(-d), Fraction(0), Fraction(1))  # alpha^2 - d
    pt = QuadraticPoint(min_poly, coords, d, False)
    assert pt.verify_on(F), "quadratic point fails exact substitution"
    other = pt.conjugate()
    assert other.verify_on(F)
    return (pt, other)


@dataclass(frozen=True)
class BranchForm:
    """The binary form in the pencil parameter whose roots are the
    directions with a degenerate residual quadratic; degree 6 generically
    (2g + 2 for the genus-2 section)."""

    form: BinaryForm
    degree: int
    non_generic: bool

    def rational_directions(self):
        return rational_roots(self.form)


def branch_form(sec: TangentSection) -> BranchForm:
    """Discriminant of the residual quadratic with the pencil parameter
    symbolic, content-normalized."""
    if sec.singularity_kind != NODE:
        raise DegenerateSectionError(
            f"section at {sec.base_point} is {sec.singularity_kind}, not a node"
        )
    C2, C3, C4 = _pencil_coefficient_forms(sec)
    disc = C3 * C3 - C2 * C4 * 4
    if disc.is_zero:
        return BranchForm(disc, 0, True)
    _, prim = disc.primitive()
    # a common factor of C2, C3, C4 is a pencil direction where the whole
    # residual vanishes: a contained (or otherwise degenerate) direction
    nonzero = [C for C in (C2, C3, C4) if not C.is_zero]
    if len(nonzero) <= 1:
        non_generic = True
    else:
        g = nonzero[0]
        for C in nonzero[1:]:
            g = binary_gcd(g, C)
        non_generic = g.degree > 0
    return BranchForm(prim, prim.degree, non_generic)


def bitangents_through_point(F: QuarticForm, p: ProjPoint):
    """Bitangent directions through a point of the surface.

    Rational roots of the branch form become Line values re-certified with
    the tangency classifier; non-rational root content is reported as
    factors with multiplicities.  Returns (certified lines, residual
    factors, branch form)."""
    sec = tangent_section(F, p)
    bf = branch_form(sec)
    lines: list[tuple[Line, bool]] = []
    factors: list[tuple[BinaryForm, int]] = []
    if bf.form.is_zero:
        return lines, factors, bf
    seen_roots = []
    for (a, b), mult in rational_roots(bf.form):
        line = pencil_member(sec.pencil, (a, b))
        kind = classify_tangency(F, line)
        lines.append((line, kind.is_bitangent))
        seen_roots.append(((a, b), mult))
    # non-rational residual content: squarefree factors with their rational
    # linear parts deflated
    for factor, mult in squarefree_decompose(bf.form).factors:
        residual = factor
        for (a, b), _ in rational_roots(factor):
            # divide out the linear factor vanishing at (a : b)
            lin = BinaryForm((b, -a))
            if lin.leading_sign_coeff() < 0:
                lin = -lin
            residual = binary_div_exact(residual, lin)
        if not residual.is_zero and residual.degree > 0:
            factors.append((residual.primitive()[1], mult))
    return lines, factors, bf
