from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from unittest import mock

from django.test import SimpleTestCase

from mvpoly.apps.bz.datum import vertex
from mvpoly.apps.bz.fixtures import sl3_hexagon, sl3_hexagon_lowered, sp6_polytope, top_datum
from mvpoly.apps.bz.types import PluckerStatus
from mvpoly.apps.core.exceptions import InvalidDatumError, UnsupportedTypeError
from mvpoly.apps.crystal.graphs import binf_enumerate
from mvpoly.apps.crystal.operators import apply_f
from mvpoly.apps.crystal.types import CrystalElement
from mvpoly.apps.rootdatum.classical import type_a, type_c
from mvpoly.apps.rootdatum.vectors import sub
from mvpoly.apps.weyl.group import weyl_group

from .counterexample import closed_form_f_vertices, counterexample
from .jclose import j_close_check
from .operators import am, am_conditions_check, am_constant, am_datum, am_sln, reflect
from .scan import am_scan, am_scan_lusztig, lusztig_corpus, scan_elements


class AMOperatorTests(SimpleTestCase):
    """Test the min-formula for AM_j."""

    def test_hexagon(self):
        """Test c = -1 and AM_1 = f_1 on the SL3 hexagon."""
        report = am(sl3_hexagon(), 1)
        self.assertEqual(report.c, -1)
        self.assertEqual(report.output, sl3_hexagon_lowered())
        self.assertTrue(report.edge_ok)
        self.assertTrue(report.is_mv)
        self.assertTrue(report.equals_f)
        self.assertTrue(report.contained_in_f)
        self.assertEqual(report.differences(), [])

    def test_top(self):
        """Test AM_1 of the point at 0 in A2."""
        group = weyl_group(type_a(2))
        M = top_datum(group)
        self.assertEqual(am_constant(M, 1), -1)
        report = am(M, 1)
        self.assertEqual(report.output, apply_f(M, 1))
        self.assertTrue(report.equals_f)

    def test_lambda_j_drops_by_one(self):
        """Test M'_{Lambda_j} = M_{Lambda_j} - 1 for every j."""
        for M in (sl3_hexagon(), sp6_polytope(3)):
            group = M.group
            for j in group.nodes:
                gamma = group.fundamental_chamber(j)
                self.assertEqual(am_datum(M, j)[gamma], M[gamma] - 1)

    def test_subset_formula(self):
        """Test the type A subset formula against the general formula."""
        group = weyl_group(type_a(3))
        for b in lusztig_corpus(group, 3):
            for j in group.nodes:
                self.assertEqual(am_sln(b.bz, j), am_datum(b.bz, j))
        self.assertEqual(am_sln(sl3_hexagon(), 1), sl3_hexagon_lowered())

    def test_subset_formula_needs_type_a(self):
        """Test that C3 is rejected by the subset formula."""
        with self.assertRaises(UnsupportedTypeError):
            am_sln(sp6_polytope(2), 1)

    def test_reflection_of_mu_sj(self):
        """Test r(mu_{s_j}) = mu_e - alpha_j^vee."""
        group = weyl_group(type_a(2))
        for b in lusztig_corpus(group, 3):
            for j in group.nodes:
                s_j = group.times_simple_left(j, group.identity)
                expected = sub(vertex(b.bz, group.identity), group.datum.simple_coroot(j))
                self.assertEqual(reflect(b.bz, j, vertex(b.bz, s_j)), expected)


class AMConditionsTests(SimpleTestCase):
    """Test the defining conditions of AM_j P."""

    def test_hexagon_reflections(self):
        """Test that (-2,1,1), (-2,2,0) and (-1,2,-1) are the reflected points."""
        M = sl3_hexagon()
        report = am_conditions_check(M, am_datum(M, 1), 1)
        self.assertTrue(report.ok)
        # Classical (-2,1,1), (-2,2,0), (-1,2,-1) in simple-coroot coordinates.
        self.assertEqual(report.reflected_points, [(-2, -1), (-2, 0), (-1, 1)])

    def test_sp6_conditions(self):
        """Test that AM_1 of the Sp6 polytope meets all four conditions."""
        P = sp6_polytope(2)
        self.assertTrue(am_conditions_check(P, am_datum(P, 1), 1).ok)

    def test_f_is_not_minimal(self):
        """Test that f_1 of the Sp6 polytope is not the smallest candidate."""
        P = sp6_polytope(2)
        report = am_conditions_check(P, apply_f(P, 1), 1)
        self.assertTrue(report.kept_vertices)
        self.assertTrue(report.shifted_bottom)
        self.assertFalse(report.minimal)
        self.assertFalse(report.ok)


class CounterexampleTests(SimpleTestCase):
    """Test the Sp6 counterexample."""

    def test_reproduced(self):
        """Test closed forms, the failing relation and f_1 for x = 2, 3, 4."""
        for x in (2, 3, 4):
            report = counterexample(x)
            self.assertTrue(report.reproduced)
            self.assertTrue(report.am.edge_ok)
            self.assertTrue(report.am.plucker_failures)
            self.assertFalse(report.am.equals_f)
            self.assertTrue(report.am.contained_in_f)
            self.assertEqual(report.relation.status, PluckerStatus.FAILS)
            self.assertEqual((report.relation.lhs, report.relation.rhs), (-2, -3))
            self.assertEqual(report.f_differences, [("1-2", -2, -3)])

    def test_reproduced_needs_the_failing_relation(self):
        """Test that the flag drops when the relation values or the f_1 difference change."""
        report = counterexample(2)
        holds = replace(report.relation, status=PluckerStatus.HOLDS, lhs=-3, rhs=-3)
        self.assertFalse(replace(report, relation=holds).reproduced)
        self.assertFalse(replace(report, relation=replace(report.relation, lhs=-3)).reproduced)
        self.assertFalse(replace(report, f_differences=[]).reproduced)
        self.assertFalse(replace(report, closed_form_relation=None).reproduced)

    def test_vertex_counts(self):
        """Test that f_1 P has 7 vertices at x = 2 and 8 at x = 3."""
        self.assertEqual(len(counterexample(2).f_vertices), 7)
        self.assertEqual(len(counterexample(3).f_vertices), 8)
        self.assertEqual(len(closed_form_f_vertices(3)), 8)

    def test_x_must_be_at_least_two(self):
        """Test that x = 1 is rejected."""
        with self.assertRaises(InvalidDatumError):
            counterexample(1)


class JCloseTests(SimpleTestCase):
    """Test peeling certificates."""

    def test_a1(self):
        """Test that A1 is vacuously 1-close."""
        group = weyl_group(type_a(1))
        certificate = j_close_check(group, 1)
        self.assertTrue(certificate.success)
        self.assertEqual(certificate.order, [group.fundamental_chamber(1)])
        self.assertEqual(certificate.witnesses, [])

    def test_type_a(self):
        """Test every j in A2 and A3, with H dropping by one along each witness."""
        for datum in (type_a(2), type_a(3)):
            group = weyl_group(datum)
            for j in group.nodes:
                certificate = j_close_check(group, j)
                self.assertTrue(certificate.success)
                self.assertEqual(len(certificate.order), len(group.gamma_split(j)[1]))
                self.assertEqual(set(certificate.height_drops), {1} if certificate.witnesses else set())

    def test_witness_definition(self):
        """Test that each witness satisfies the defining relations."""
        group = weyl_group(type_a(3))
        certificate = j_close_check(group, 2)
        peeled = set()
        for position, gamma in enumerate(certificate.order):
            if position:
                witness = certificate.witnesses[position - 1]
                v, i, k = witness.v, witness.i, witness.k
                self.assertEqual(witness.gamma, gamma)
                self.assertIn(witness.delta, peeled)
                self.assertEqual(group.times_simple_left(2, v), group.times_simple_right(v, k))
                self.assertEqual(group.chamber(group.times_simple_right(v, i), i), gamma)
            peeled.add(gamma)

    def test_c3_reports(self):
        """Test that C3 returns a certificate for j = 1 without a height check."""
        certificate = j_close_check(weyl_group(type_c(3)), 1)
        self.assertIsNone(certificate.height_drops)
        self.assertEqual(certificate.order[0], weyl_group(type_c(3)).fundamental_chamber(1))


class AMScanTests(SimpleTestCase):
    """Test exhaustive AM against f scans."""

    def assertClean(self, summary):
        self.assertEqual(summary.failures, [])
        self.assertEqual(summary.containment_violations, 0)
        self.assertEqual(summary.condition_failures, 0)
        self.assertEqual(summary.closed_form_mismatches, 0)

    def test_a2_binf(self):
        """Test zero failures on A2 to depth 6."""
        summary = am_scan(weyl_group(type_a(2)), 6)
        self.assertEqual(summary.elements, 50)
        self.assertClean(summary)

    def test_a3_binf(self):
        """Test zero failures on A3 to depth 4."""
        self.assertClean(am_scan(weyl_group(type_a(3)), 4))

    def test_lusztig_corpora(self):
        """Test zero failures on the 84 A2 and 210 A3 Lusztig data."""
        a2 = am_scan_lusztig(weyl_group(type_a(2)), 6)
        a3 = am_scan_lusztig(weyl_group(type_a(3)), 4)
        self.assertEqual((a2.elements, a3.elements), (84, 210))
        self.assertEqual(a3.checks, 630)
        self.assertClean(a2)
        self.assertClean(a3)

    def test_c3_finds_counterexample(self):
        """Test that the stable Sp6 polytope shows up as a failure at depth 6."""
        summary = am_scan(weyl_group(type_c(3)), 6, js=[1])
        self.assertTrue(summary.failures)
        self.assertEqual(summary.js, (1,))
        stable = CrystalElement.from_bz(sp6_polytope(2)).bz
        self.assertIn(stable, [failure.report.input for failure in summary.failures])
        self.assertEqual(summary.containment_violations, 0)

    def test_threaded_scan_matches_sequential(self):
        """Test that a thread pool reports the same counts and failure positions."""
        group = weyl_group(type_c(3))
        elements = list(binf_enumerate(group, 3).nodes) + [CrystalElement.from_bz(sp6_polytope(2))]

        def outcome(summary):
            return (
                summary.elements,
                summary.checks,
                [(failure.index, failure.j) for failure in summary.failures],
                summary.containment_violations,
                summary.condition_failures,
            )

        sequential = scan_elements(group, elements, workers=1)
        with mock.patch("mvpoly.apps.am.scan.ThreadPoolExecutor", wraps=ThreadPoolExecutor) as pool:
            threaded = scan_elements(group, elements, workers=3)
        pool.assert_called_once_with(max_workers=3)
        self.assertEqual(outcome(threaded), outcome(sequential))
        self.assertIn((len(elements) - 1, 1), outcome(threaded)[2])
