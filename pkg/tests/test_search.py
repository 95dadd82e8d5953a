"""Line enumeration, bitangent search (both strategies), rational points,
incidence and the smoothness screen."""

import pytest

from quarticlines.errors import QuarticLinesError
from quarticlines.forms import QuarticForm
from quarticlines.projective import Line, ProjPoint, lines_meet
from quarticlines.search import (
    HeightBound,
    enumerate_lines,
    incidence_graph,
    passes_smoothness_screen,
    search_bitangents,
    search_rational_points,
    smoothness_warnings,
)
from quarticlines.tangency import classify_tangency, family_line

from conftest import brute_force_line_census, random_line, random_quartic, seeded_rng


class TestEnumerateLines:
    def test_height_one_vs_brute_force(self):
        got = {l.plucker for l in enumerate_lines(1)}
        assert got == brute_force_line_census(1)

    def test_height_two_vs_brute_force(self):
        got = {l.plucker for l in enumerate_lines(2)}
        assert got == brute_force_line_census(2)

    def test_includes_coordinate_axes(self):
        axes = {
            (1, 0, 0, 0, 0, 0),
            (0, 1, 0, 0, 0, 0),
            (0, 0, 1, 0, 0, 0),
            (0, 0, 0, 1, 0, 0),
            (0, 0, 0, 0, 1, 0),
            (0, 0, 0, 0, 0, 1),
        }
        got = {l.plucker for l in enumerate_lines(1)}
        assert axes <= got

    def test_monotone_in_height(self):
        s1 = {l.plucker for l in enumerate_lines(1)}
        s2 = {l.plucker for l in enumerate_lines(2)}
        assert s1 <= s2

    def test_each_line_exactly_once_up_to_h5(self):
        seen = set()
        for l in enumerate_lines(5):
            assert l.plucker not in seen
            assert l.height <= 5
            seen.add(l.plucker)
        assert seen == brute_force_line_census(5)

    def test_height_bound_validation(self):
        with pytest.raises(ValueError):
            HeightBound(0)
        with pytest.raises(ValueError):
            list(enumerate_lines(0))


class TestSearchBitangents:
    def test_family_line_found_at_h16(self, family_quartic):
        cat = search_bitangents(family_quartic, 16, mode="sieve")
        assert (8, 0, 16, -1, 0, 2) in cat.plucker_set()
        entry = next(e for e in cat.bitangents if e.line.plucker == (8, 0, 16, -1, 0, 2))
        assert entry.tangency.kind == "Quadritangent"

    def test_contained_line_reported(self, family_quartic):
        cat = search_bitangents(family_quartic, 1)
        target = Line(ProjPoint((1, 0, 1, 0)), ProjPoint((0, 1, 0, 1)))
        assert target.plucker in {l.plucker for l in cat.contained_lines}
        assert cat.counts["Contained"] == len(cat.contained_lines)

    def test_monotone_in_height(self, family_quartic):
        c1 = search_bitangents(family_quartic, 1)
        c4 = search_bitangents(family_quartic, 4)
        assert c1.plucker_set() <= c4.plucker_set()

    def test_modes_agree(self, family_quartic):
        rng = seeded_rng("modes-agree")
        quartics = [family_quartic, random_quartic(rng), random_quartic(rng)]
        for F in quartics:
            for H in (6, 10):
                a = search_bitangents(F, H, mode="exhaustive")
                b = search_bitangents(F, H, mode="sieve")
                assert a.plucker_set() == b.plucker_set()
                assert [l.plucker for l in a.contained_lines] == [
                    l.plucker for l in b.contained_lines
                ]
                assert a.counts == b.counts

    def test_every_entry_reverifies(self, family_quartic):
        cat = search_bitangents(family_quartic, 6)
        for e in cat.bitangents:
            tt = classify_tangency(family_quartic, e.line)
            assert tt.kind == e.tangency.kind
            assert tt.is_bitangent
        for l in cat.contained_lines:
            assert classify_tangency(family_quartic, l).kind == "Contained"

    def test_no_duplicates(self, family_quartic):
        cat = search_bitangents(family_quartic, 8)
        keys = [e.line.plucker for e in cat.bitangents]
        assert len(keys) == len(set(keys))

    def test_deterministic_across_runs_and_workers(self, family_quartic):
        outs = []
        for workers in (1, 2, 8):
            cat = search_bitangents(family_quartic, 6, workers=workers)
            outs.append(
                (
                    tuple(e.line.plucker for e in cat.bitangents),
                    tuple(l.plucker for l in cat.contained_lines),
                    tuple(sorted(cat.counts.items())),
                )
            )
        assert outs[0] == outs[1] == outs[2]

    def test_completeness_spot_check(self, family_quartic):
        # random lines of height <= 6 that classify as bitangent or
        # contained must appear in the catalog for that height
        rng = seeded_rng("completeness")
        cat = search_bitangents(family_quartic, 6)
        found = cat.plucker_set() | {l.plucker for l in cat.contained_lines}
        checked = 0
        hits = 0
        while checked < 1000:
            l = random_line(rng, bound=3)
            if l.height > 6:
                continue
            checked += 1
            tt = classify_tangency(family_quartic, l)
            if tt.is_bitangent or tt.kind == "Contained":
                hits += 1
                assert l.plucker in found
        # seeded family members guarantee the check is not vacuous
        for s0, s1 in ((1, 0), (0, 1), (1, 1)):
            l = family_line("corrected", s0, s1)
            assert l.plucker in found

    def test_int64_guard(self, family_quartic):
        with pytest.raises(QuarticLinesError):
            search_bitangents(family_quartic, 10 ** 5)

    def test_strict_bitangent_catalogued(self):
        # x^2 y^2 + z^4 + w^4 + x z^3 has an honest (2,2) bitangent along
        # the (x, y) axis
        F = QuarticForm({(2, 2, 0, 0): 1, (0, 0, 4, 0): 1, (0, 0, 0, 4): 1, (1, 0, 3, 0): 1})
        for mode in ("exhaustive", "sieve"):
            cat = search_bitangents(F, 2, mode=mode)
            entry = next(
                e for e in cat.bitangents if e.line.plucker == (1, 0, 0, 0, 0, 0)
            )
            assert entry.tangency.kind == "Bitangent"
            pts = {c.point_data for c in entry.contacts}
            assert pts == {ProjPoint((1, 0, 0, 0)), ProjPoint((0, 1, 0, 0))}


class TestRationalPoints:
    def test_signed_fermat(self):
        F = QuarticForm({(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): -1, (0, 0, 0, 4): -1})
        pts = {p.coords for p in search_rational_points(F, 1)}
        assert (1, 0, 1, 0) in pts
        assert (0, 1, 0, 1) in pts
        assert (1, 1, 1, 1) in pts

    def test_positive_definite_empty(self, fermat_quartic):
        assert search_rational_points(fermat_quartic, 3) == ()

    def test_worked_quartic_base_point(self, worked_quartic):
        pts = {p.coords for p in search_rational_points(worked_quartic, 1)}
        assert (0, 0, 0, 1) in pts

    def test_all_points_satisfy_f(self, family_quartic):
        for p in search_rational_points(family_quartic, 2):
            assert family_quartic.evaluate(p.coords) == 0


class TestIncidence:
    def test_empty_graphs(self):
        rng = seeded_rng("incidence-empty")
        F = random_quartic(rng)
        cat = search_bitangents(F, 4)
        assert cat.bitangent_count == 0  # generic quartics have no tiny bitangents
        g = incidence_graph(cat)
        assert g.edges == () and g.lines == ()

    def test_family_members_skew(self, family_quartic):
        cat = search_bitangents(family_quartic, 16, mode="sieve")
        lines = {e.line.plucker: e.line for e in cat.bitangents}
        l2 = lines[(8, 0, 16, -1, 0, 2)]
        l3 = Line(ProjPoint((27, 0, 1, 0)), ProjPoint((0, 1, 0, 3)))
        assert not lines_meet(l2, l3)

    def test_degrees_match_edges(self, family_quartic):
        cat = search_bitangents(family_quartic, 2)
        g = incidence_graph(cat)
        assert sum(g.degrees) == 2 * len(g.edges)
        for i, j in g.edges:
            assert lines_meet(g.lines[i], g.lines[j])


class TestSmoothness:
    def test_smooth_example(self, fermat_quartic):
        # Fermat is smooth away from char | 4; odd primes see nothing
        assert smoothness_warnings(fermat_quartic, (3, 5, 7)) == []

    def test_singular_detected(self):
        F = QuarticForm({(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1})  # cone
        warns = smoothness_warnings(F, (3,))
        assert warns and "singular" in warns[0]
        assert not passes_smoothness_screen(F, (3,))

    def test_warning_not_error_in_search(self):
        F = QuarticForm({(4, 0, 0, 0): 1, (0, 4, 0, 0): 1, (0, 0, 4, 0): 1})
        cat = search_bitangents(F, 1, smooth_check_primes=(3,))
        assert cat.warnings
