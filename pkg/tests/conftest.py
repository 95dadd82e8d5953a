"""Shared fixtures and independent oracles for the test suite.

The oracles here deliberately avoid the package's own code paths: the
float classifier clusters numpy roots, the incidence oracle ranks a 4x4
matrix, and the line-census oracle sweeps raw 6-tuples.
"""

import itertools
import math
import random

import numpy as np
import pytest

from quarticlines.forms import BinaryForm, QuarticForm, quartic_exponents
from quarticlines.projective import Line, ProjPoint


# the surface with the infinite rational family of quadritangent lines
@pytest.fixture(scope="session")
def family_quartic():
    return QuarticForm({(4, 0, 0, 0): 1, (1, 3, 0, 0): -1, (0, 0, 4, 0): -1, (0, 0, 1, 3): 1})


# the worked surface for the through-a-point pipeline
@pytest.fixture(scope="session")
def worked_quartic():
    return QuarticForm(
        {(1, 0, 0, 3): 1, (0, 1, 1, 2): 1, (4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1}
    )


@pytest.fixture(scope="session")
def fermat_quartic():
    return QuarticForm({(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1})


def random_quartic(rng, bound=5):
    while True:
        coeffs = {e: rng.randint(-bound, bound) for e in quartic_exponents()}
        if any(coeffs.values()):
            return QuarticForm(coeffs)


def random_line(rng, bound=4):
    while True:
        a = tuple(rng.randint(-bound, bound) for _ in range(4))
        b = tuple(rng.randint(-bound, bound) for _ in range(4))
        if not any(a) or not any(b):
            continue
        pa, pb = ProjPoint(a), ProjPoint(b)
        if pa != pb:
            return Line(pa, pb)


def random_unimodular(rng, steps=8):
    """A random determinant +-1 integer matrix from elementary operations."""
    m = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
    for _ in range(steps):
        op = rng.randrange(3)
        i, j = rng.sample(range(4), 2)
        if op == 0:
            c = rng.randint(-2, 2)
            for k in range(4):
                m[i][k] += c * m[j][k]
        elif op == 1:
            m[i], m[j] = m[j], m[i]
        else:
            for k in range(4):
                m[i][k] = -m[i][k]
    return tuple(tuple(row) for row in m)


def _durand_kerner(coeffs, iterations=200, dps=45):
    """All complex roots of a polynomial (descending exact rational
    coefficients) by fixed-iteration Durand-Kerner at high precision.  No
    convergence test: multiple roots approach their limit linearly, and
    the iteration budget drives the cluster radius far below the
    classification tolerance.  Coefficients are converted at working
    precision; rounding them in float64 first would already split a
    multiple root beyond the tolerance."""
    import mpmath

    with mpmath.workdps(dps):
        cs = [mpmath.mpf(c.numerator) / c.denominator for c in coeffs]
        lead = cs[0]
        monic = [c / lead for c in cs]
        n = len(monic) - 1
        # starting points on a slightly irrational spiral
        roots = [
            mpmath.mpc(0.4, 0.9) ** k * (1 + mpmath.mpf(k) / 17) for k in range(n)
        ]

        def val(z):
            acc = mpmath.mpc(1, 0) * monic[0]
            for c in monic[1:]:
                acc = acc * z + c
            return acc

        for _ in range(iterations):
            new = []
            for i, r in enumerate(roots):
                denom = mpmath.mpc(1, 0)
                for j, s in enumerate(roots):
                    if i != j:
                        denom *= r - s
                new.append(r - val(r) / denom)
            roots = new
        return [complex(r) for r in roots]


def float_classify(f: BinaryForm, tol=1e-8) -> str:
    """Independent numeric classifier: find the 4 complex projective roots
    of the restriction and cluster them at the given tolerance."""
    if f.is_zero:
        return "Contained"
    assert f.degree == 4
    # sup-norm normalization, kept exact so multiple roots stay multiple
    sup = max(abs(c) for c in f.coeffs)
    coeffs = [c / sup for c in f.coeffs]
    lead_zeros = 0
    while coeffs[lead_zeros] == 0:
        lead_zeros += 1
    finite = _durand_kerner(coeffs[lead_zeros:])
    roots = [None] * lead_zeros + list(finite)  # None marks (1 : 0)

    def chordal(r1, r2):
        if r1 is None and r2 is None:
            return 0.0
        if r1 is None or r2 is None:
            z = r1 if r2 is None else r2
            return 1.0 / math.sqrt(1.0 + abs(z) ** 2)
        return abs(r1 - r2) / math.sqrt((1.0 + abs(r1) ** 2) * (1.0 + abs(r2) ** 2))

    parent = list(range(4))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(4):
        for j in range(i + 1, 4):
            if chordal(roots[i], roots[j]) < tol:
                pi, pj = find(i), find(j)
                if pi != pj:
                    parent[pi] = pj
    sizes = {}
    for i in range(4):
        sizes[find(i)] = sizes.get(find(i), 0) + 1
    pattern = tuple(sorted(sizes.values(), reverse=True))
    return {
        (1, 1, 1, 1): "Transverse",
        (2, 1, 1): "SimpleTangent",
        (2, 2): "Bitangent",
        (3, 1): "Flex",
        (4,): "Quadritangent",
    }[pattern]


def brute_force_line_census(H):
    """Oracle: all canonical Plucker vectors with sup-norm <= H, by testing
    every integer 6-tuple in the box."""
    out = set()
    for p in itertools.product(range(-H, H + 1), repeat=6):
        if all(v == 0 for v in p):
            continue
        if p[0] * p[5] - p[1] * p[4] + p[2] * p[3] != 0:
            continue
        if math.gcd(*p) != 1:
            continue
        lead = next(v for v in p if v != 0)
        if lead < 0:
            continue
        out.add(p)
    return out


def det4_oracle(rows):
    """Plain cofactor determinant of a 4x4 integer matrix."""

    def det3(m):
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )

    total = 0
    for j in range(4):
        minor = [[rows[r][c] for c in range(4) if c != j] for r in range(1, 4)]
        total += (-1) ** j * rows[0][j] * det3(minor)
    return total


def seeded_rng(name: str) -> random.Random:
    return random.Random(f"quarticlines:{name}")
