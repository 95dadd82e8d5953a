"""Exact arithmetic for the forms the package works with.

Everything here is over the rationals: integer quartic forms in four
variables, ternary quartics with rational coefficients, and binary forms.
The central algorithm is the Yun-style squarefree decomposition of a binary
form, which drives the scaled-perfect-square test and therefore every
bitangency decision downstream.

All values are immutable after construction and every operation is a pure
function, so they are safe to share across worker threads.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import (
    DegreeError,
    MalformedSubstitutionError,
    ZeroFormError,
)

__all__ = [
    "BinaryForm",
    "QuarticForm",
    "TernaryQuartic",
    "SquarefreeDecomposition",
    "QuadraticElement",
    "substitute_linear",
    "squarefree_decompose",
    "is_scaled_square",
    "binary_discriminant",
    "binary_gcd",
    "binary_div_exact",
    "rational_roots",
    "squarefree_kernel",
    "quartic_exponents",
]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"expected an exact rational, got {type(x).__name__}: {x!r}")


# ---------------------------------------------------------------------------
# binary forms
# ---------------------------------------------------------------------------


class BinaryForm:
    """A homogeneous binary form with exact rational coefficients.

    Coefficients are stored leading-to-trailing: ``coeffs[i]`` multiplies
    ``u^(degree-i) * v^i``.  The zero form is a distinguished flagged value
    with no degree claim; a form whose coefficients are all zero collapses
    to it on construction.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable = ()):
        cs = tuple(_frac(c) for c in coeffs)
        if cs and all(c == 0 for c in cs):
            cs = ()
        self.coeffs = cs
        self._hash = None

    @classmethod
    def zero(cls) -> "BinaryForm":
        return cls(())

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def degree(self) -> int:
        if self.is_zero:
            raise ZeroFormError("the zero form carries no degree")
        return len(self.coeffs) - 1

    def __eq__(self, other) -> bool:
        return isinstance(other, BinaryForm) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self) -> str:
        return f"BinaryForm({self.format()})"

    def format(self, names=("u", "v")) -> str:
        if self.is_zero:
            return "0"
        d = self.degree
        parts = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = []
            if d - i > 0:
                mono.append(names[0] + (f"^{d - i}" if d - i > 1 else ""))
            if i > 0:
                mono.append(names[1] + (f"^{i}" if i > 1 else ""))
            m = "*".join(mono)
            if not m:
                parts.append((" + " if c > 0 else " - ") + str(abs(c)))
            elif abs(c) == 1:
                parts.append((" + " if c > 0 else " - ") + m)
            else:
                parts.append((" + " if c > 0 else " - ") + f"{abs(c)}*{m}")
        s = "".join(parts)
        return s[3:] if s.startswith(" + ") else "-" + s[3:]

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "BinaryForm") -> "BinaryForm":
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.degree != other.degree:
            raise DegreeError("cannot add binary forms of different degrees")
        return BinaryForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: "BinaryForm") -> "BinaryForm":
        return self + (-other)

    def __neg__(self) -> "BinaryForm":
        return BinaryForm(-c for c in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, BinaryForm):
            return NotImplemented
        if self.is_zero or other.is_zero:
            return BinaryForm.zero()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return BinaryForm(out)

    __rmul__ = __mul__

    def scale(self, c) -> "BinaryForm":
        c = _frac(c)
        if c == 0 or self.is_zero:
            return BinaryForm.zero()
        return BinaryForm(c * a for a in self.coeffs)

    def power(self, n: int) -> "BinaryForm":
        if n < 0:
            raise ValueError("negative power")
        out = BinaryForm((Fraction(1),))
        for _ in range(n):
            out = out * self
        return out

    def evaluate(self, u, v) -> Fraction:
        if self.is_zero:
            return Fraction(0)
        u, v = _frac(u), _frac(v)
        d = self.degree
        return sum((c * u ** (d - i) * v ** i for i, c in enumerate(self.coeffs)), Fraction(0))

    def derivative_u(self) -> "BinaryForm":
        if self.is_zero or self.degree == 0:
            return BinaryForm.zero()
        d = self.degree
        return BinaryForm(tuple((d - i) * c for i, c in enumerate(self.coeffs[:-1])))

    # -- normalization ------------------------------------------------------

    def primitive(self) -> tuple[Fraction, "BinaryForm"]:
        """Split off a rational unit so the rest is a primitive integer form
        with positive first nonzero coefficient."""
        if self.is_zero:
            raise ZeroFormError("the zero form has no primitive part")
        den = math.lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        g = math.gcd(*ints)
        lead = next(c for c in ints if c != 0)
        if lead < 0:
            g = -g
        unit = Fraction(g, den)
        return unit, BinaryForm(tuple(c // g for c in ints))

    def leading_sign_coeff(self) -> Fraction:
        return next(c for c in self.coeffs if c != 0)


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """Result of the Yun decomposition: ``unit * prod(f^m) == input``.

    Factors are primitive integer binary forms with positive first nonzero
    coefficient, pairwise coprime and squarefree, ordered by
    (multiplicity, degree, coefficients).
    """

    unit: Fraction
    factors: tuple[tuple[BinaryForm, int], ...]

    def reconstruct(self) -> BinaryForm:
        out = BinaryForm((self.unit,))
        for f, m in self.factors:
            out = out * f.power(m)
        return out

    @property
    def multiplicities(self) -> tuple[int, ...]:
        return tuple(m for _, m in self.factors)

    def root_partition(self) -> tuple[int, ...]:
        """Multiplicities of the roots over the algebraic closure, sorted
        descending; a factor of degree e contributes e copies of its
        multiplicity."""
        out = []
        for f, m in self.factors:
            out.extend([m] * f.degree)
        return tuple(sorted(out, reverse=True))


# ---------------------------------------------------------------------------
# univariate helpers (ascending coefficient tuples over Fraction)
# ---------------------------------------------------------------------------


def _u_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return p


def _u_deg(p):
    return len(p) - 1


def _u_deriv(p):
    return _u_trim(tuple(i * c for i, c in enumerate(p) if i > 0))


def _u_sub(p, q):
    n = max(len(p), len(q))
    p = p + (Fraction(0),) * (n - len(p))
    q = q + (Fraction(0),) * (n - len(q))
    return _u_trim(tuple(a - b for a, b in zip(p, q)))


def _u_divmod(p, q):
    q = _u_trim(tuple(q))
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(_u_trim(tuple(p)))
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(r) - dq, 0)
    while r and len(r) - 1 >= dq:
        k = len(r) - 1 - dq
        c = r[-1] / lead
        quot[k] = c
        for i, qc in enumerate(q):
            r[k + i] -= c * qc
        while r and r[-1] == 0:
            r.pop()
    return _u_trim(tuple(quot)), tuple(r)


def _u_div_exact(p, q):
    quot, rem = _u_divmod(p, q)
    if rem:
        raise ArithmeticError("division was expected to be exact")
    return quot


def _u_monic(p):
    if not p:
        return p
    lead = p[-1]
    return tuple(c / lead for c in p)


def _u_gcd(p, q):
    p, q = _u_trim(tuple(p)), _u_trim(tuple(q))
    while q:
        _, r = _u_divmod(p, q)
        p, q = q, r
    return _u_monic(p) if p else (Fraction(1),)


def _u_yun(p):
    """Yun squarefree decomposition of a nonconstant univariate polynomial
    with nonzero constant term; returns [(factor, multiplicity)]."""
    dp = _u_deriv(p)
    g = _u_gcd(p, dp)
    out = []
    if _u_deg(g) == 0:
        return [(p, 1)]
    c = _u_div_exact(p, g)
    d = _u_sub(_u_div_exact(dp, g), _u_deriv(c))
    i = 1
    while _u_deg(c) > 0:
        a = _u_gcd(c, d)
        if _u_deg(a) > 0:
            out.append((a, i))
        c = _u_div_exact(c, a)
        d = _u_sub(_u_div_exact(d, a), _u_deriv(c))
        i += 1
    return out


def _binary_from_univariate(p) -> BinaryForm:
    # p(x) with x = u/v, homogenized back to degree deg(p)
    return BinaryForm(tuple(reversed(p)))


# ---------------------------------------------------------------------------
# integer univariate helpers (ascending int tuples); the search loop lives
# on these, Fractions never enter
# ---------------------------------------------------------------------------


def _iu_trim(p):
    while p and p[-1] == 0:
        p = p[:-1]
    return tuple(p)


def _iu_primitive(p):
    """Primitive part with positive leading coefficient; () for zero."""
    p = _iu_trim(p)
    if not p:
        return ()
    g = 0
    for c in p:
        g = math.gcd(g, c)
    if p[-1] < 0:
        g = -g
    return tuple(c // g for c in p)


def _iu_deriv(p):
    return _iu_trim(tuple(i * c for i, c in enumerate(p) if i > 0))


def _iu_sub(p, q):
    n = max(len(p), len(q))
    p = tuple(p) + (0,) * (n - len(p))
    q = tuple(q) + (0,) * (n - len(q))
    return _iu_trim(tuple(a - b for a, b in zip(p, q)))


def _iu_prem(p, q):
    """Pseudo-remainder of p by q (scaled by powers of lc(q))."""
    dq = len(q) - 1
    lc = q[-1]
    r = list(p)
    while len(r) - 1 >= dq and r:
        c = r[-1]
        d = len(r) - 1
        for i in range(len(r)):
            r[i] *= lc
        for i, qc in enumerate(q):
            r[d - dq + i] -= c * qc
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def _iu_gcd(p, q):
    """Primitive gcd of integer polynomials (primitive PRS)."""
    p, q = _iu_primitive(p), _iu_primitive(q)
    if not p:
        return q
    if not q:
        return p
    if len(p) < len(q):
        p, q = q, p
    while q:
        r = _iu_primitive(_iu_prem(p, q))
        p, q = q, r
    return p


def _iu_div_exact(p, q):
    """Exact quotient of integer polynomials (raises when not exact)."""
    p = _iu_trim(p)
    q = _iu_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(p)
    dq = len(q) - 1
    lc = q[-1]
    quot = [0] * max(len(r) - dq, 0)
    while r and len(r) - 1 >= dq:
        c, rem = divmod(r[-1], lc)
        if rem:
            raise ArithmeticError("integer polynomial division was expected to be exact")
        k = len(r) - 1 - dq
        quot[k] = c
        for i, qc in enumerate(q):
            r[k + i] -= c * qc
        while r and r[-1] == 0:
            r.pop()
    if r:
        raise ArithmeticError("integer polynomial division was expected to be exact")
    return _iu_trim(quot)


def _iu_mul(p, q):
    if not p or not q:
        return ()
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return tuple(out)


def _iu_yun(p):
    """Yun squarefree decomposition over Z of a primitive nonconstant
    polynomial with nonzero constant term; factors primitive."""
    dp = _iu_deriv(p)
    g = _iu_gcd(p, dp)
    if len(g) == 1:
        return [(p, 1)]
    out = []
    c = _iu_div_exact(p, g)
    d = _iu_sub(_iu_div_exact(dp, g), _iu_deriv(c))
    i = 1
    while len(c) > 1:
        a = _iu_gcd(c, d)
        if len(a) > 1:
            out.append((a, i))
        c = _iu_div_exact(c, a)
        d = _iu_sub(_iu_div_exact(d, a), _iu_deriv(c))
        i += 1
    return out


def _split_binary(f: "BinaryForm"):
    """(u_mult, v_mult, ascending) with f = u^u_mult * v^v_mult * P(u/v)
    homogenized; the ascending tuple has nonzero ends."""
    coeffs = f.coeffs
    v_mult = 0
    while coeffs[0] == 0:
        v_mult += 1
        coeffs = coeffs[1:]
    u_mult = 0
    while coeffs[-1] == 0:
        u_mult += 1
        coeffs = coeffs[:-1]
    return u_mult, v_mult, tuple(reversed(coeffs))


def _join_binary(u_mult: int, v_mult: int, ascending) -> "BinaryForm":
    return BinaryForm((Fraction(0),) * v_mult + tuple(reversed(ascending)) + (Fraction(0),) * u_mult)


def binary_gcd(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Greatest common divisor of two binary forms, as a primitive integer
    form with positive first nonzero coefficient."""
    if f.is_zero and g.is_zero:
        raise ZeroFormError("gcd of two zero forms")
    if f.is_zero:
        return g.primitive()[1]
    if g.is_zero:
        return f.primitive()[1]
    fu, fv, fp = _split_binary(f)
    gu, gv, gp = _split_binary(g)
    core = _u_gcd(fp, gp)
    return _join_binary(min(fu, gu), min(fv, gv), core).primitive()[1]


def binary_div_exact(f: BinaryForm, g: BinaryForm) -> BinaryForm:
    """Exact quotient f / g of binary forms; raises when not exact."""
    if g.is_zero:
        raise ZeroDivisionError("division of a binary form by zero")
    if f.is_zero:
        return BinaryForm.zero()
    fu, fv, fp = _split_binary(f)
    gu, gv, gp = _split_binary(g)
    if gu > fu or gv > fv:
        raise ArithmeticError("binary form division is not exact")
    quot = _u_div_exact(fp, gp)
    return _join_binary(fu - gu, fv - gv, quot)


# ---------------------------------------------------------------------------
# the operations of this module
# ---------------------------------------------------------------------------


def squarefree_decompose(f: BinaryForm) -> SquarefreeDecomposition:
    """Decompose a nonzero binary form as unit * prod(factor^multiplicity).

    Repeated-gcd (Yun) decomposition: factors are squarefree, primitive
    integer, pairwise coprime, deterministically ordered.  Monomial factors
    u and v are split off first so the univariate step sees a polynomial
    with nonzero ends.
    """
    if not isinstance(f, BinaryForm):
        raise TypeError("squarefree_decompose expects a BinaryForm")
    if f.is_zero:
        raise ZeroFormError("cannot decompose the zero form")

    unit, prim = f.primitive()
    u_mult, v_mult, middle = _split_binary(prim)
    middle = tuple(int(c) for c in middle)

    factors: list[tuple[BinaryForm, int]] = []
    if u_mult:
        factors.append((BinaryForm((1, 0)), u_mult))
    if v_mult:
        factors.append((BinaryForm((0, 1)), v_mult))
    if len(middle) > 1:
        for p, mult in _iu_yun(middle):
            factors.append((_binary_from_univariate(p), mult))

    factors.sort(key=lambda fm: (fm[1], fm[0].degree, fm[0].coeffs))

    # all parts are primitive with positive leading sign, so the product
    # must reproduce the primitive part on the nose
    prod = (1,)
    prod_u = 0
    prod_v = 0
    for g, mult in factors:
        gu, gv, gm = _split_binary(g)
        prod_u += gu * mult
        prod_v += gv * mult
        gm = tuple(int(c) for c in gm)
        for _ in range(mult):
            prod = _iu_mul(prod, gm)
    if prod_u != u_mult or prod_v != v_mult or prod != middle:
        raise ArithmeticError("squarefree decomposition failed to reconstruct its input")
    return SquarefreeDecomposition(unit=unit, factors=tuple(factors))


def is_scaled_square(f: BinaryForm) -> Optional[tuple[Fraction, BinaryForm]]:
    """Return (c, g) with ``f == c * g**2`` and g a primitive integer
    quadratic, or None when no such factorization exists over Q.

    The decision is rational: c need not be a square.  Requires a nonzero
    form of degree 4.
    """
    if f.is_zero:
        raise ZeroFormError("the zero form is not eligible for the square test")
    if f.degree != 4:
        raise DegreeError(f"expected degree 4, got degree {f.degree}")
    dec = squarefree_decompose(f)
    if any(m % 2 for m in dec.multiplicities):
        return None
    g = BinaryForm((1,))
    for factor, m in dec.factors:
        g = g * factor.power(m // 2)
    c = dec.unit
    assert g.power(2).scale(c) == f
    return c, g


def binary_discriminant(q: BinaryForm) -> Fraction:
    """Discriminant b^2 - 4ac of a nonzero degree-2 binary form."""
    if q.is_zero:
        raise ZeroFormError("the zero form has no discriminant")
    if q.degree != 2:
        raise DegreeError(f"expected degree 2, got degree {q.degree}")
    a, b, c = q.coeffs
    return b * b - 4 * a * c


def _as_linear_image(img) -> tuple[Fraction, Fraction]:
    """Accept a BinaryForm of degree <= 1 (or zero) or a coefficient pair."""
    if isinstance(img, BinaryForm):
        if img.is_zero:
            return Fraction(0), Fraction(0)
        if img.degree == 0:
            raise MalformedSubstitutionError("constant image is not a linear form")
        if img.degree != 1:
            raise MalformedSubstitutionError(
                f"image has degree {img.degree}, expected a linear form"
            )
        return img.coeffs[0], img.coeffs[1]
    if isinstance(img, Sequence) and len(img) == 2:
        return _frac(img[0]), _frac(img[1])
    raise MalformedSubstitutionError(f"cannot interpret {img!r} as a linear form in (u, v)")


def substitute_linear(F: "QuarticForm", images) -> BinaryForm:
    """Evaluate a quartic form at four linear binary forms.

    Returns the exact degree-4 restriction, or the flagged zero form when
    everything cancels.
    """
    images = list(images)
    if len(images) != 4:
        raise MalformedSubstitutionError("exactly four images are required")
    lin = [_as_linear_image(img) for img in images]

    if all(a.denominator == 1 and b.denominator == 1 for a, b in lin):
        lin_int = [(int(a), int(b)) for a, b in lin]
        return BinaryForm(_substitute_int(F, lin_int))

    # powers[i][e] = (a_i u + b_i v)^e as ascending-in-v coefficient tuples
    powers = []
    for a, b in lin:
        ps = [(Fraction(1),)]
        for _ in range(4):
            prev = ps[-1]
            nxt = [Fraction(0)] * (len(prev) + 1)
            for k, c in enumerate(prev):
                nxt[k] += c * a
                nxt[k + 1] += c * b
            ps.append(tuple(nxt))
        powers.append(ps)

    acc = [Fraction(0)] * 5
    for exp, coeff in F.terms():
        part = (Fraction(coeff),)
        for i in range(4):
            if exp[i]:
                q = powers[i][exp[i]]
                out = [Fraction(0)] * (len(part) + len(q) - 1)
                for k, c in enumerate(part):
                    if c:
                        for j, d in enumerate(q):
                            out[k + j] += c * d
                part = tuple(out)
        for k, c in enumerate(part):
            acc[k] += c
    return BinaryForm(acc)


def _substitute_int(F: "QuarticForm", lin):
    acc = [0, 0, 0, 0, 0]
    for exp, coeff in F.terms():
        p0, p1, p2, p3, p4 = coeff, 0, 0, 0, 0
        ln = 1
        for i in range(4):
            a, b = lin[i]
            for _ in range(exp[i]):
                if ln == 1:
                    p1 = p0 * b
                    p0 = p0 * a
                elif ln == 2:
                    p2 = p1 * b
                    p1 = p1 * a + p0 * b
                    p0 = p0 * a
                elif ln == 3:
                    p3 = p2 * b
                    p2 = p2 * a + p1 * b
                    p1 = p1 * a + p0 * b
                    p0 = p0 * a
                else:
                    p4 = p3 * b
                    p3 = p3 * a + p2 * b
                    p2 = p2 * a + p1 * b
                    p1 = p1 * a + p0 * b
                    p0 = p0 * a
                ln += 1
        acc[0] += p0
        acc[1] += p1
        acc[2] += p2
        acc[3] += p3
        acc[4] += p4
    return acc


# ---------------------------------------------------------------------------
# quartic forms in four variables
# ---------------------------------------------------------------------------


def quartic_exponents() -> tuple[tuple[int, int, int, int], ...]:
    """The 35 degree-4 exponent vectors over 4 variables, lexicographic."""
    out = []
    for a in range(4, -1, -1):
        for b in range(4 - a, -1, -1):
            for c in range(4 - a - b, -1, -1):
                out.append((a, b, c, 4 - a - b - c))
    return tuple(sorted(out, reverse=True))


_QUARTIC_EXPONENTS = quartic_exponents()


class QuarticForm:
    """Homogeneous degree-4 integer form in variables x, y, z, w."""

    __slots__ = ("coeffs", "_key")

    def __init__(self, coeffs):
        cleaned = {}
        for exp, c in dict(coeffs).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 4 or any(e < 0 for e in exp) or sum(exp) != 4:
                raise ValueError(f"exponent vector {exp} is not a degree-4 monomial")
            if not isinstance(c, int):
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = int(c)
                else:
                    raise ValueError(f"coefficient {c!r} is not an integer")
            if c != 0:
                cleaned[exp] = cleaned.get(exp, 0) + c
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        if not cleaned:
            raise ValueError("the zero quartic form is not allowed")
        self.coeffs = cleaned
        self._key = tuple(sorted(cleaned.items()))

    def terms(self):
        return self._key

    @property
    def content(self) -> int:
        return math.gcd(*(abs(c) for c in self.coeffs.values()))

    @property
    def max_abs_coeff(self) -> int:
        return max(abs(c) for c in self.coeffs.values())

    def __eq__(self, other) -> bool:
        return isinstance(other, QuarticForm) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __repr__(self) -> str:
        return f"QuarticForm({self.to_string()})"

    def evaluate(self, point):
        """Exact evaluation; works over any exact coefficient ring (ints,
        Fractions, QuadraticElement), floats are rejected."""
        x = list(point)
        if len(x) != 4:
            raise ValueError("a point of P^3 needs 4 coordinates")
        for c in x:
            if isinstance(c, (float, complex)):
                raise TypeError("evaluate is exact; floats are not accepted")
        total = 0
        for exp, c in self._key:
            t = c
            for i in range(4):
                if exp[i]:
                    t = t * x[i] ** exp[i]
            total = total + t
        return total

    def gradient(self, point) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        x = [_frac(c) for c in point]
        grad = [Fraction(0)] * 4
        for exp, c in self._key:
            for i in range(4):
                if exp[i] == 0:
                    continue
                t = Fraction(c * exp[i])
                for j in range(4):
                    e = exp[j] - (1 if j == i else 0)
                    if e:
                        t *= x[j] ** e
                grad[i] += t
        return tuple(grad)

    def compose(self, A) -> "QuarticForm":
        """The form x -> F(A x) for an integer 4x4 matrix A (rows index the
        original variables)."""
        rows = [tuple(int(v) for v in row) for row in A]
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("expected a 4x4 integer matrix")
        # linear images of the variables as 4-term coefficient dicts
        out: dict[tuple, int] = {}
        for exp, c in self._key:
            # expand prod_i (sum_j rows[i][j] x_j)^exp[i]
            part = {(0, 0, 0, 0): c}
            for i in range(4):
                for _ in range(exp[i]):
                    nxt: dict[tuple, int] = {}
                    for mono, mc in part.items():
                        for j in range(4):
                            a = rows[i][j]
                            if a:
                                key = tuple(mono[k] + (1 if k == j else 0) for k in range(4))
                                nxt[key] = nxt.get(key, 0) + mc * a
                    part = nxt
            for mono, mc in part.items():
                out[mono] = out.get(mono, 0) + mc
        out = {e: c for e, c in out.items() if c != 0}
        if not out:
            raise ValueError("composition annihilated the form; matrix must be singular")
        return QuarticForm(out)

    def coefficient_vector(self) -> tuple[int, ...]:
        """Coefficients in the fixed 35-slot exponent order (zeros included)."""
        return tuple(self.coeffs.get(e, 0) for e in _QUARTIC_EXPONENTS)

    def to_string(self) -> str:
        names = "xyzw"
        parts = []
        for exp, c in sorted(self.coeffs.items(), reverse=True):
            mono = "*".join(
                names[i] + (f"^{exp[i]}" if exp[i] > 1 else "")
                for i in range(4)
                if exp[i]
            )
            if abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            parts.append((" + " if c > 0 else " - ") + body)
        s = "".join(parts)
        return s[3:] if s.startswith(" + ") else "-" + s[3:]


class TernaryQuartic:
    """Homogeneous degree-4 form in three variables with rational
    coefficients; the zero form only as an explicitly flagged value."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs, allow_zero: bool = False):
        cleaned = {}
        for exp, c in dict(coeffs).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != 3 or any(e < 0 for e in exp) or sum(exp) != 4:
                raise ValueError(f"exponent vector {exp} is not a ternary degree-4 monomial")
            c = _frac(c)
            if c != 0:
                cleaned[exp] = cleaned.get(exp, Fraction(0)) + c
        cleaned = {e: c for e, c in cleaned.items() if c != 0}
        if not cleaned and not allow_zero:
            raise ValueError("zero ternary quartic must be constructed explicitly")
        self.coeffs = cleaned

    @classmethod
    def zero(cls) -> "TernaryQuartic":
        return cls({}, allow_zero=True)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, exp) -> Fraction:
        return self.coeffs.get(tuple(exp), Fraction(0))

    def __eq__(self, other) -> bool:
        return isinstance(other, TernaryQuartic) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        if self.is_zero:
            return "TernaryQuartic(0)"
        names = "abc"
        parts = []
        for exp, c in sorted(self.coeffs.items(), reverse=True):
            mono = "*".join(
                names[i] + (f"^{exp[i]}" if exp[i] > 1 else "") for i in range(3) if exp[i]
            )
            parts.append(f"{c}*{mono}" if mono else str(c))
        return "TernaryQuartic(" + " + ".join(parts) + ")"


# ---------------------------------------------------------------------------
# rational roots and quadratic extensions
# ---------------------------------------------------------------------------


def _divisors(n: int) -> list[int]:
    n = abs(n)
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def rational_roots(f: BinaryForm) -> list[tuple[tuple[int, int], int]]:
    """Rational projective roots of a nonzero binary form.

    Returns [((a, b), multiplicity)] with (a:b) primitive and first nonzero
    entry positive, ordered deterministically.  Only linear factors over Q
    are extracted; irreducible factors of higher degree are not split.
    """
    dec = squarefree_decompose(f)
    roots: list[tuple[tuple[int, int], int]] = []
    for factor, mult in dec.factors:
        d = factor.degree
        cs = [int(c) for c in factor.coeffs]
        if d == 1:
            a, b = cs  # a*u + b*v vanishes at (u:v) = (b:-a), canonicalized
            r = _canon_pair(b, -a)
            roots.append((r, mult))
            continue
        # candidates s/t with form value factor(s, t) == 0
        lead, trail = cs[0], cs[-1]
        seen = set()
        for t in _divisors(lead):
            for s in _divisors(trail):
                for ss in (s, -s):
                    if math.gcd(ss, t) != 1:
                        continue
                    pair = _canon_pair(ss, t)
                    if pair in seen:
                        continue
                    seen.add(pair)
                    if factor.evaluate(pair[0], pair[1]) == 0:
                        roots.append((pair, mult))
    roots.sort()
    return roots


def _canon_pair(a: int, b: int) -> tuple[int, int]:
    g = math.gcd(a, b)
    if g:
        a, b = a // g, b // g
    lead = a if a != 0 else b
    if lead < 0:
        a, b = -a, -b
    return a, b


def squarefree_kernel(n: int) -> int:
    """The squarefree integer d with n = d * k^2 (sign preserved).

    Complete trial division; exact for any integer but intended for the
    discriminant sizes this package produces."""
    if n == 0:
        return 0
    sign = -1 if n < 0 else 1
    n = abs(n)
    kernel = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            if e % 2:
                kernel *= d
        d += 1 if d == 2 else 2
    return sign * kernel * n


class QuadraticElement:
    """An element a + b*sqrt(d) of a quadratic extension of Q.

    d is a fixed integer (normally squarefree); arithmetic is exact over
    Fraction components.  Mixing elements over different d is an error.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b, d: int):
        self.a = _frac(a)
        self.b = _frac(b)
        self.d = int(d)

    def _check(self, other):
        if self.d != other.d:
            raise ValueError("cannot mix elements of different quadratic fields")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticElement(self.a + other, self.b, self.d)
        self._check(other)
        return QuadraticElement(self.a + other.a, self.b + other.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.a, -self.b, self.d)

    def __sub__(self, other):
        return self + (-other if isinstance(other, QuadraticElement) else QuadraticElement(-other, 0, self.d))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QuadraticElement(self.a * other, self.b * other, self.d)
        self._check(other)
        return QuadraticElement(
            self.a * other.a + self.b * other.b * self.d,
            self.a * other.b + self.b * other.a,
            self.d,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int):
        out = QuadraticElement(1, 0, self.d)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self):
        return QuadraticElement(self.a, -self.b, self.d)

    @property
    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.b == 0 and self.a == other
        return (
            isinstance(other, QuadraticElement)
            and self.d == other.d
            and self.a == other.a
            and self.b == other.b
        )

    def __repr__(self) -> str:
        return f"({self.a} + {self.b}*sqrt({self.d}))"
