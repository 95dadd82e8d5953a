"""Points, planes, lines, pencils, incidence and projective transforms."""

import pytest

from quarticlines.errors import DegenerateSpanError, SingularMatrixError
from quarticlines.forms import QuarticForm
from quarticlines.projective import (
    Line,
    Pencil,
    Plane,
    ProjPoint,
    canonicalize_int_vector,
    lines_meet,
    pencil_member,
    pgl4_apply,
    plucker_from_points,
    plucker_relation,
)
from quarticlines.tangency import classify_tangency

from conftest import det4_oracle, random_line, random_quartic, random_unimodular, seeded_rng


class TestCanonicalization:
    def test_primitive_and_sign(self):
        assert canonicalize_int_vector((2, 4, -6, 0)) == (1, 2, -3, 0)
        assert canonicalize_int_vector((0, -3, 6, 9)) == (0, 1, -2, -3)
        with pytest.raises(ValueError):
            canonicalize_int_vector((0, 0, 0, 0))

    def test_point_uniqueness(self):
        assert ProjPoint((2, 0, 2, 0)) == ProjPoint((-1, 0, -1, 0))
        assert len({ProjPoint((1, 2, 3, 4)), ProjPoint((2, 4, 6, 8))}) == 1


class TestPlucker:
    def test_coordinate_axis(self):
        l = plucker_from_points(ProjPoint((1, 0, 0, 0)), ProjPoint((0, 1, 0, 0)))
        assert l.plucker == (1, 0, 0, 0, 0, 0)

    def test_family_line(self):
        l = plucker_from_points(ProjPoint((8, 0, 1, 0)), ProjPoint((0, 1, 0, 2)))
        assert l.plucker == (8, 0, 16, -1, 0, 2)
        assert 8 * 2 - 0 + 16 * (-1) == 0  # the relation, by hand

    def test_degenerate_span(self):
        with pytest.raises(DegenerateSpanError):
            plucker_from_points(ProjPoint((1, 0, 0, 0)), ProjPoint((2, 0, 0, 0)))

    def test_span_order_irrelevant(self):
        rng = seeded_rng("plucker-antisym")
        for _ in range(100):
            l = random_line(rng)
            a, b = l.span
            assert Line(b, a).plucker == l.plucker

    def test_relation_holds_always(self):
        rng = seeded_rng("plucker-relation")
        for _ in range(300):
            l = random_line(rng)
            assert plucker_relation(l.plucker) == 0

    def test_from_plucker_roundtrip(self):
        rng = seeded_rng("plucker-roundtrip")
        for _ in range(200):
            l = random_line(rng)
            assert Line.from_plucker(l.plucker) == l
        with pytest.raises(ValueError):
            Line.from_plucker((1, 0, 0, 0, 0, 1))  # relation fails


class TestLinesMeet:
    def test_shared_point(self):
        e01 = Line(ProjPoint((1, 0, 0, 0)), ProjPoint((0, 1, 0, 0)))
        e02 = Line(ProjPoint((1, 0, 0, 0)), ProjPoint((0, 0, 1, 0)))
        e23 = Line(ProjPoint((0, 0, 1, 0)), ProjPoint((0, 0, 0, 1)))
        assert lines_meet(e01, e02)
        assert not lines_meet(e01, e23)

    def test_derived_pairing(self):
        l = Line(ProjPoint((8, 0, 1, 0)), ProjPoint((0, 1, 0, 2)))
        m = Line(ProjPoint((27, 0, 1, 0)), ProjPoint((0, 1, 0, 3)))
        assert not lines_meet(l, m)  # pairing = -19

    def test_symmetric_and_reflexive(self):
        rng = seeded_rng("meet-sym")
        for _ in range(100):
            l, m = random_line(rng), random_line(rng)
            assert lines_meet(l, m) == lines_meet(m, l)
            assert lines_meet(l, l)

    def test_rank_oracle_500(self):
        rng = seeded_rng("meet-rank")
        for _ in range(500):
            l, m = random_line(rng), random_line(rng)
            rows = [
                l.span[0].coords,
                l.span[1].coords,
                m.span[0].coords,
                m.span[1].coords,
            ]
            assert lines_meet(l, m) == (det4_oracle(rows) == 0)


class TestPencil:
    def test_worked_basis(self):
        pen = Pencil(ProjPoint((0, 0, 0, 1)), Plane((1, 0, 0, 0)))
        assert pen.basis == (ProjPoint((0, 0, 1, 0)), ProjPoint((0, 1, 0, 0)))

    def test_members(self):
        pen = Pencil(ProjPoint((0, 0, 0, 1)), Plane((1, 0, 0, 0)))
        l10 = pencil_member(pen, (1, 0))  # through (0,0,1,0): the line x = y = 0
        assert l10.contains(ProjPoint((0, 0, 1, 0)))
        l01 = pencil_member(pen, (0, 1))  # through (0,1,0,0): the line x = z = 0
        assert l01.contains(ProjPoint((0, 1, 0, 0)))
        l11 = pencil_member(pen, (1, 1))
        assert l11.contains(ProjPoint((0, 1, 1, 0)))
        for l in (l10, l01, l11):
            assert l.contains(pen.vertex)
        with pytest.raises(ValueError):
            pencil_member(pen, (0, 0))

    def test_injective_on_parameters(self):
        rng = seeded_rng("pencil-injective")
        pen = Pencil(ProjPoint((1, 0, 0, -1)), Plane((1, 1, 1, 1)))
        seen = {}
        for _ in range(200):
            a, b = rng.randint(-20, 20), rng.randint(-20, 20)
            if a == 0 and b == 0:
                continue
            g = __import__("math").gcd(a, b)
            a, b = a // g, b // g
            if (a if a else b) < 0:
                a, b = -a, -b
            key = pencil_member(pen, (a, b)).plucker
            if (a, b) in seen:
                assert seen[(a, b)] == key
            else:
                assert key not in set(seen.values())
                seen[(a, b)] = key

    def test_vertex_must_lie_on_carrier(self):
        with pytest.raises(ValueError):
            Pencil(ProjPoint((1, 0, 0, 0)), Plane((1, 0, 0, 0)))


class TestPGL4:
    def test_identity(self):
        rng = seeded_rng("pgl-identity")
        F = random_quartic(rng)
        l = random_line(rng)
        ident = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        F2, l2 = pgl4_apply(ident, F, l)
        assert F2 == F and l2 == l

    def test_variable_swap_fixes_symmetric_form(self):
        F = QuarticForm({(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1})
        swap = ((0, 1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        l = Line(ProjPoint((1, 0, 0, 0)), ProjPoint((0, 0, 1, 0)))
        F2, l2 = pgl4_apply(swap, F, l)
        assert F2 == F
        assert l2 == Line(ProjPoint((0, 1, 0, 0)), ProjPoint((0, 0, 1, 0)))

    def test_singular_matrix_rejected(self):
        rng = seeded_rng("pgl-singular")
        F = random_quartic(rng)
        l = random_line(rng)
        sing = ((1, 0, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
        with pytest.raises(SingularMatrixError):
            pgl4_apply(sing, F, l)

    def test_classification_invariance(self):
        rng = seeded_rng("pgl-invariance")
        for _ in range(40):
            F = random_quartic(rng)
            l = random_line(rng)
            M = random_unimodular(rng)
            F2, l2 = pgl4_apply(M, F, l)
            assert classify_tangency(F2, l2).kind == classify_tangency(F, l).kind
