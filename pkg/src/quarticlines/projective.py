"""Rational points, planes, lines and pencils in P^3.

Canonical representatives everywhere: primitive integer coordinate vectors
with positive first nonzero entry.  That makes equality, hashing and
deduplication trivial, and it is the normalization the height bound in the
search module is measured against.

Plucker coordinates follow the order (p01, p02, p03, p12, p13, p23); the
quadratic relation p01*p23 - p02*p13 + p03*p12 = 0 is asserted on every
construction.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import product as _iproduct

from .errors import DegenerateSpanError, SingularMatrixError
from .forms import QuarticForm

__all__ = [
    "ProjPoint",
    "Plane",
    "Line",
    "Pencil",
    "plucker_from_points",
    "lines_meet",
    "pencil_member",
    "pgl4_apply",
    "canonicalize_int_vector",
]


def canonicalize_int_vector(v) -> tuple[int, ...]:
    """Scale a rational vector to primitive integers with positive first
    nonzero entry.  Raises on the zero vector."""
    fr = [Fraction(x) for x in v]
    if all(x == 0 for x in fr):
        raise ValueError("cannot canonicalize the zero vector")
    den = math.lcm(*(x.denominator for x in fr))
    ints = [int(x * den) for x in fr]
    g = math.gcd(*ints)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


class ProjPoint:
    """A rational point of P^3 in canonical integer coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        coords = tuple(coords)
        if len(coords) != 4:
            raise ValueError("a point of P^3 needs 4 coordinates")
        self.coords = canonicalize_int_vector(coords)

    @property
    def height(self) -> int:
        return max(abs(c) for c in self.coords)

    def __eq__(self, other) -> bool:
        return isinstance(other, ProjPoint) and self.coords == other.coords

    def __hash__(self) -> int:
        return hash(("pt", self.coords))

    def __repr__(self) -> str:
        return "(" + ":".join(str(c) for c in self.coords) + ")"


class Plane:
    """A rational plane of P^3, stored by canonical dual coordinates."""

    __slots__ = ("dual_coords",)

    def __init__(self, dual_coords):
        dual_coords = tuple(dual_coords)
        if len(dual_coords) != 4:
            raise ValueError("a plane of P^3 needs 4 dual coordinates")
        self.dual_coords = canonicalize_int_vector(dual_coords)

    def contains(self, p: ProjPoint) -> bool:
        return sum(a * b for a, b in zip(self.dual_coords, p.coords)) == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Plane) and self.dual_coords == other.dual_coords

    def __hash__(self) -> int:
        return hash(("pl", self.dual_coords))

    def __repr__(self) -> str:
        return "Plane" + repr(self.dual_coords)


def _plucker_of_span(a, b) -> tuple[int, ...]:
    return (
        a[0] * b[1] - a[1] * b[0],
        a[0] * b[2] - a[2] * b[0],
        a[0] * b[3] - a[3] * b[0],
        a[1] * b[2] - a[2] * b[1],
        a[1] * b[3] - a[3] * b[1],
        a[2] * b[3] - a[3] * b[2],
    )


def plucker_relation(p) -> int:
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]


class Line:
    """A rational line of P^3: an ordered spanning pair plus canonical
    Plucker coordinates.  Two lines are equal iff their Plucker vectors are.
    """

    __slots__ = ("span", "plucker")

    def __init__(self, a: ProjPoint, b: ProjPoint):
        if not isinstance(a, ProjPoint):
            a = ProjPoint(a)
        if not isinstance(b, ProjPoint):
            b = ProjPoint(b)
        if a == b:
            raise DegenerateSpanError(f"coincident span points {a} and {b}")
        raw = _plucker_of_span(a.coords, b.coords)
        self.span = (a, b)
        self.plucker = canonicalize_int_vector(raw)
        assert plucker_relation(self.plucker) == 0

    @classmethod
    def from_plucker(cls, p) -> "Line":
        """Rebuild a line from a Plucker 6-vector (validated against the
        quadratic relation); the span is recovered from the Plucker matrix."""
        p = canonicalize_int_vector(tuple(p))
        if len(p) != 6:
            raise ValueError("a Plucker vector has 6 entries")
        if plucker_relation(p) != 0:
            raise ValueError(f"Plucker relation fails for {p}")
        p01, p02, p03, p12, p13, p23 = p
        m = (
            (0, p01, p02, p03),
            (-p01, 0, p12, p13),
            (-p02, -p12, 0, p23),
            (-p03, -p13, -p23, 0),
        )
        # columns i, j of the Plucker matrix span the line whenever p_ij != 0
        pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
        for idx, (i, j) in enumerate(pairs):
            if p[idx] != 0:
                col_j = tuple(m[r][j] for r in range(4))
                col_i = tuple(-m[r][i] for r in range(4))
                line = cls(ProjPoint(col_j), ProjPoint(col_i))
                assert line.plucker == tuple(p)
                return line
        raise ValueError("zero Plucker vector")

    @property
    def height(self) -> int:
        return max(abs(c) for c in self.plucker)

    def contains(self, pt: ProjPoint) -> bool:
        a, b = self.span
        mat = (a.coords, b.coords, pt.coords)
        for cols in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
            det = _det3(tuple(tuple(row[c] for c in cols) for row in mat))
            if det != 0:
                return False
        return True

    def __eq__(self, other) -> bool:
        return isinstance(other, Line) and self.plucker == other.plucker

    def __hash__(self) -> int:
        return hash(("ln", self.plucker))

    def __repr__(self) -> str:
        return f"Line{self.plucker}"


def _det3(m) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def plucker_from_points(a: ProjPoint, b: ProjPoint) -> Line:
    """The line spanned by two distinct points, with canonical Plucker
    coordinates computed from the 2x2 minors."""
    return Line(a, b)


def lines_meet(l: Line, m: Line) -> bool:
    """Incidence in P^3: true iff the Plucker pairing vanishes.  A line
    meets itself."""
    p, q = l.plucker, m.plucker
    pairing = (
        p[0] * q[5] + p[5] * q[0]
        - p[1] * q[4] - p[4] * q[1]
        + p[2] * q[3] + p[3] * q[2]
    )
    return pairing == 0


def _solve_plane_points(plane: Plane, bound: int):
    """Canonical points on a plane with sup-norm <= bound, ascending in
    (height, coordinates).  Solves for the pivot coordinate to avoid a
    full 4-dimensional sweep."""
    d = plane.dual_coords
    piv = min((abs(c), i) for i, c in enumerate(d) if c != 0)[1]
    others = [i for i in range(4) if i != piv]
    for h in range(1, bound + 1):
        shell = []
        for rest in _iproduct(range(-h, h + 1), repeat=3):
            s = sum(d[others[k]] * rest[k] for k in range(3))
            if s % d[piv]:
                continue
            val = -s // d[piv]
            if abs(val) > h:
                continue
            coords = [0, 0, 0, 0]
            coords[piv] = val
            for k in range(3):
                coords[others[k]] = rest[k]
            if all(c == 0 for c in coords):
                continue
            if max(abs(c) for c in coords) != h:
                continue
            pt = ProjPoint(coords)
            if pt.coords == tuple(coords):  # canonical reps only: each point once
                shell.append(pt)
        # smallest first: sup-norm shell, then L1 norm, then lexicographic
        shell.sort(key=lambda p: (sum(abs(c) for c in p.coords), p.coords))
        yield from shell


class Pencil:
    """The lines through a vertex inside a carrier plane, identified with
    P^1 through a deterministic basis.

    The basis is the first two canonical plane points, in (height, lex)
    order, that are independent of the vertex and of each other.
    """

    __slots__ = ("vertex", "carrier", "basis")

    def __init__(self, vertex: ProjPoint, carrier: Plane):
        if not carrier.contains(vertex):
            raise ValueError(f"vertex {vertex} is not on carrier {carrier}")
        self.vertex = vertex
        self.carrier = carrier
        basis = []
        for pt in _solve_plane_points(carrier, bound=max(8, 2 * vertex.height + 2)):
            if pt == vertex:
                continue
            if not basis:
                basis.append(pt)
            else:
                if not _collinear(vertex, basis[0], pt):
                    basis.append(pt)
                    break
        if len(basis) != 2:
            raise RuntimeError("failed to build a pencil basis (search bound too small)")
        self.basis = tuple(basis)

    def __repr__(self) -> str:
        return f"Pencil(vertex={self.vertex}, carrier={self.carrier})"


def _collinear(a: ProjPoint, b: ProjPoint, c: ProjPoint) -> bool:
    mat = (a.coords, b.coords, c.coords)
    for cols in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        if _det3(tuple(tuple(row[k] for k in cols) for row in mat)) != 0:
            return False
    return True


def pencil_member(pencil: Pencil, param) -> Line:
    """The pencil line at parameter (a:b): the line joining the vertex to
    a*basis0 + b*basis1.  Bijective from canonical P^1 parameters."""
    a, b = Fraction(param[0]), Fraction(param[1])
    if a == 0 and b == 0:
        raise ValueError("pencil parameter (0, 0) is not a point of P^1")
    b0, b1 = pencil.basis
    q = tuple(a * x + b * y for x, y in zip(b0.coords, b1.coords))
    return Line(pencil.vertex, ProjPoint(q))


def _det4(m) -> int:
    total = 0
    for j in range(4):
        minor = tuple(tuple(m[r][c] for c in range(4) if c != j) for r in range(1, 4))
        total += (-1) ** j * m[0][j] * _det3(minor)
    return total


def _adjugate4(m):
    adj = [[0] * 4 for _ in range(4)]
    for i in range(4):
        for j in range(4):
            minor = tuple(
                tuple(m[r][c] for c in range(4) if c != j) for r in range(4) if r != i
            )
            adj[j][i] = (-1) ** (i + j) * _det3(minor)
    return tuple(tuple(row) for row in adj)


def pgl4_apply(M, F: QuarticForm, l: Line) -> tuple[QuarticForm, Line]:
    """Act by a projective transform: the form is pulled back through the
    adjugate (an exact integer stand-in for the inverse) and the line is
    pushed forward, so restriction classes are preserved."""
    rows = tuple(tuple(int(v) for v in row) for row in M)
    if len(rows) != 4 or any(len(r) != 4 for r in rows):
        raise ValueError("expected a 4x4 integer matrix")
    det = _det4(rows)
    if det == 0:
        raise SingularMatrixError("transform matrix is singular")
    adj = _adjugate4(rows)
    F_new = F.compose(adj)
    a, b = l.span
    a_new = ProjPoint(tuple(sum(rows[i][j] * a.coords[j] for j in range(4)) for i in range(4)))
    b_new = ProjPoint(tuple(sum(rows[i][j] * b.coords[j] for j in range(4)) for i in range(4)))
    return F_new, Line(a_new, b_new)
