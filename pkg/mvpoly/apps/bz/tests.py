from itertools import product

from django.test import SimpleTestCase

from mvpoly.apps.bz.datum import (
    bottom_vertex,
    check_edge_inequalities,
    check_tropical_plucker,
    contains,
    distinct_vertices,
    edge_length,
    in_b_lambda,
    in_orbit_hull,
    lusztig_datum,
    negate,
    orbit_polytope,
    point_polytope,
    polytope_contains,
    stable_normalize,
    top_vertex,
    translate,
    vertex,
    vertices,
)
from mvpoly.apps.bz.fixtures import sl3_hexagon, sl3_hexagon_lowered, sp6_polytope, top_datum
from mvpoly.apps.bz.propagation import bz_from_lusztig
from mvpoly.apps.bz.types import BZDatum, LusztigDatum, PluckerStatus
from mvpoly.apps.bz.validation import verify
from mvpoly.apps.core.exceptions import (
    InvalidDatumError,
    InvalidPositionError,
    UnsupportedTypeError,
)
from mvpoly.apps.rootdatum.classical import parse_chamber_name, to_classical, type_a, type_c
from mvpoly.apps.rootdatum.types import LatticeRole
from mvpoly.apps.rootdatum.vectors import add, scale
from mvpoly.apps.weyl.group import weyl_group


def classical(datum, mu):
    return to_classical(datum, mu, LatticeRole.COWEIGHT).vector


def lusztig_corpus(group, bound):
    """All Lusztig data on the canonical word with entry sum <= bound."""
    word = group.canonical_word
    for n in product(range(bound + 1), repeat=len(word)):
        if sum(n) <= bound:
            yield LusztigDatum(word, n)


class BZDatumTests(SimpleTestCase):
    """Test construction of BZ data."""

    def test_from_mapping_requires_totality(self):
        """Test that a partial mapping is rejected."""
        group = weyl_group(type_a(2))
        partial = {gamma: 0 for gamma in group.chamber_weights[:-1]}
        with self.assertRaises(InvalidDatumError):
            BZDatum.from_mapping(group, partial)

    def test_wrong_number_of_values(self):
        """Test that a value tuple of the wrong length is rejected."""
        with self.assertRaises(InvalidDatumError):
            BZDatum(weyl_group(type_a(2)), (0, 0))

    def test_lookup_by_element(self):
        """Test M.at(w, i) reads M at w . Lambda_i."""
        M = sl3_hexagon_lowered()
        group = M.group
        self.assertEqual(M.at(group.identity, 1), -2)
        self.assertEqual(M.at(group.identity, 2), -1)


class VertexTests(SimpleTestCase):
    """Test GGMS vertices."""

    def test_hexagon_vertices(self):
        """Test mu_e = (-1,0,1) and mu_w0 = (1,0,-1) for the SL3 hexagon."""
        M = sl3_hexagon()
        datum = M.group.datum
        self.assertEqual(classical(datum, bottom_vertex(M)), (-1, 0, 1))
        self.assertEqual(classical(datum, top_vertex(M)), (1, 0, -1))
        self.assertEqual(len(distinct_vertices(M)), 6)

    def test_top_datum_is_a_point(self):
        """Test that M = 0 has every vertex at the origin."""
        M = top_datum(weyl_group(type_c(3)))
        self.assertEqual(set(vertices(M).vertices.values()), {(0, 0, 0)})

    def test_sp6_vertices(self):
        """Test the four vertices of the Sp6 polytope at x = 2."""
        M = sp6_polytope(2)
        found = {classical(M.group.datum, mu) for mu in distinct_vertices(M)}
        self.assertEqual(found, {(0, 0, 0), (0, 2, 0), (0, 0, 2), (0, 2, 2)})

    def test_vertices_satisfy_support_equations(self):
        """Test <mu_w, w Lambda_i> = M_{w Lambda_i} and mu_w in P."""
        M = sp6_polytope(3)
        group = M.group
        for w in group.elements:
            mu = vertex(M, w)
            self.assertTrue(contains(M, mu))
            for i in group.nodes:
                self.assertEqual(group.datum.pair(mu, group.chamber(w, i).weight), M.at(w, i))

    def test_translate_moves_vertices(self):
        """Test vertices(translate(M, nu)) = vertices(M) + nu."""
        M = sl3_hexagon()
        nu = (2, -1)
        moved = translate(M, nu)
        for w in M.group.elements:
            self.assertEqual(vertex(moved, w), add(vertex(M, w), nu))


class EdgeInequalityTests(SimpleTestCase):
    """Test edge lengths."""

    def test_hexagon_edges_have_length_one(self):
        """Test n(w, i) = 1 everywhere on the SL3 hexagon."""
        M = sl3_hexagon()
        for w in M.group.elements:
            for i in M.group.nodes:
                self.assertEqual(edge_length(M, w, i), 1)
        self.assertTrue(check_edge_inequalities(M).ok)

    def test_a1_violation(self):
        """Test that (M_Lambda1, M_s1Lambda1) = (1, 0) has n = -1."""
        group = weyl_group(type_a(1))
        top = group.fundamental_chamber(1)
        M = BZDatum.from_mapping(group, {top: 1, group.negative(top): 0})
        report = check_edge_inequalities(M)
        self.assertFalse(report.ok)
        self.assertEqual(report.violations[0].length, -1)


class PluckerTests(SimpleTestCase):
    """Test tropical Pluecker relations."""

    def test_hexagon_satisfies_all_relations(self):
        """Test that the SL3 hexagon is an MV polytope."""
        report = verify(sl3_hexagon())
        self.assertTrue(report.valid)
        self.assertTrue(report.plucker)
        self.assertTrue(all(r.status == PluckerStatus.HOLDS for r in report.plucker))

    def test_commuting_position_holds(self):
        """Test that a_ij = 0 makes the relation hold vacuously."""
        group = weyl_group(type_a(3))
        M = BZDatum(group, tuple(range(len(group.chamber_weights))))
        result = check_tropical_plucker(M, group.identity, 1, 3)
        self.assertEqual(result.status, PluckerStatus.HOLDS)

    def test_doubly_laced_position_is_unsupported(self):
        """Test that nodes 2 and 3 of C3 give an unsupported relation."""
        M = sp6_polytope(2)
        result = check_tropical_plucker(M, M.group.identity, 2, 3)
        self.assertEqual(result.status, PluckerStatus.UNSUPPORTED)

    def test_precondition(self):
        """Test that w s_i < w or i = j is rejected."""
        M = sl3_hexagon()
        group = M.group
        with self.assertRaises(InvalidPositionError):
            check_tropical_plucker(M, group.longest, 1, 2)
        with self.assertRaises(InvalidPositionError):
            check_tropical_plucker(M, group.identity, 1, 1)

    def test_broken_hexagon_fails(self):
        """Test that lowering one value breaks the relation at e."""
        M = sl3_hexagon()
        group = M.group
        broken = M.replace({group.chamber_by_weight[parse_chamber_name(group.datum, "2")]: -3})
        result = check_tropical_plucker(broken, group.identity, 1, 2)
        self.assertEqual(result.status, PluckerStatus.FAILS)
        self.assertFalse(verify(broken).valid)

    def test_sp6_polytope_is_valid(self):
        """Test the Sp6 polytope passes edge, Pluecker and string checks."""
        report = verify(sp6_polytope(2))
        self.assertTrue(report.edges.ok)
        self.assertFalse(report.plucker_failures)
        self.assertGreater(report.unsupported_count, 0)
        self.assertTrue(report.string_consistent)
        self.assertTrue(report.valid)


class LusztigDatumTests(SimpleTestCase):
    """Test Lusztig data and the propagation engine."""

    def test_hexagon_lusztig_data(self):
        """Test (1,1,1) for the hexagon and (2,1,1) after f_1."""
        self.assertEqual(lusztig_datum(sl3_hexagon(), (1, 2, 1)).n, (1, 1, 1))
        self.assertEqual(lusztig_datum(sl3_hexagon_lowered(), (1, 2, 1)).n, (2, 1, 1))

    def test_top_datum_has_zero_lusztig_data(self):
        """Test that M = 0 has zero Lusztig datum on every word."""
        group = weyl_group(type_a(3))
        M = top_datum(group)
        for word in group.reduced_words_w0:
            self.assertEqual(lusztig_datum(M, word).n, (0,) * 6)

    def test_negative_lusztig_datum_is_rejected(self):
        """Test that n_k < 0 is rejected."""
        with self.assertRaises(InvalidDatumError):
            LusztigDatum((1, 2, 1), (1, -1, 0))

    def test_rebuild_hexagon(self):
        """Test that (1,1,1) at mu_e = (-1,0,1) rebuilds the hexagon."""
        group = weyl_group(type_a(2))
        M = bz_from_lusztig(group, LusztigDatum((1, 2, 1), (1, 1, 1)), (-1, -1))
        self.assertEqual(M, sl3_hexagon())

    def test_rebuild_top(self):
        """Test that n = 0 at mu_e = 0 rebuilds M = 0."""
        group = weyl_group(type_a(3))
        M = bz_from_lusztig(group, LusztigDatum(group.canonical_word, (0,) * 6), (0, 0, 0))
        self.assertEqual(M, top_datum(group))

    def test_rebuilt_datum_is_valid(self):
        """Test that (2,0,1) at mu_e = 0 gives a valid BZ datum."""
        group = weyl_group(type_a(2))
        M = bz_from_lusztig(group, LusztigDatum((1, 2, 1), (2, 0, 1)), (0, 0))
        self.assertTrue(verify(M).valid)

    def test_propagation_needs_simply_laced_type(self):
        """Test that C2 is rejected."""
        group = weyl_group(type_c(2))
        with self.assertRaises(UnsupportedTypeError):
            bz_from_lusztig(group, LusztigDatum((1, 2, 1, 2), (0, 0, 0, 0)), (0, 0))

    def test_a2_round_trip_exhaustive(self):
        """Test lusztig_datum(bz_from_lusztig(n)) = n for all n with entries <= 3."""
        group = weyl_group(type_a(2))
        mu_e = (-1, 2)
        for n in product(range(4), repeat=3):
            M = bz_from_lusztig(group, LusztigDatum((1, 2, 1), n), mu_e, check=True)
            self.assertEqual(lusztig_datum(M, (1, 2, 1)).n, n)
            self.assertEqual(bottom_vertex(M), mu_e)
            self.assertTrue(check_edge_inequalities(M).ok)
            self.assertTrue(verify(M).valid)

    def test_a3_corpus_never_conflicts(self):
        """Test full propagation over every word for A3 data of total <= 4."""
        group = weyl_group(type_a(3))
        for lusztig in lusztig_corpus(group, 4):
            M = bz_from_lusztig(group, lusztig, (0, 0, 0), check=True)
            self.assertEqual(lusztig_datum(M, lusztig.word), lusztig)

    def test_weight_identity(self):
        """Test that the path vertices of every word agree with the GGMS datum."""
        group = weyl_group(type_a(3))
        M = bz_from_lusztig(group, LusztigDatum(group.canonical_word, (1, 0, 2, 1, 0, 1)), (0, 0, 0))
        for word in group.reduced_words_w0:
            path = group.longest_path(word)
            n = lusztig_datum(M, word).n
            mu = bottom_vertex(M)
            for k, letter in enumerate(word):
                w = path.prefixes[k]
                mu = add(mu, scale(n[k], w.coweight_images[letter - 1]))
                self.assertEqual(mu, vertex(M, path.prefixes[k + 1]))


class SymmetryTests(SimpleTestCase):
    """Test negation and translation."""

    def test_negate_hexagon(self):
        """Test that the hexagon is centrally symmetric."""
        M = sl3_hexagon()
        self.assertEqual(negate(M), M)

    def test_negate_is_involution(self):
        """Test negate twice is the identity."""
        group = weyl_group(type_c(3))
        M = BZDatum(group, tuple(range(len(group.chamber_weights))))
        self.assertEqual(negate(negate(M)), M)

    def test_negate_in_a1_swaps(self):
        """Test (a, b) -> (b, a) in A1."""
        group = weyl_group(type_a(1))
        top = group.fundamental_chamber(1)
        M = BZDatum.from_mapping(group, {top: 3, group.negative(top): -5})
        N = negate(M)
        self.assertEqual(N[top], -5)
        self.assertEqual(N[group.negative(top)], 3)

    def test_negate_reverses_lusztig_data(self):
        """Test the datum of -P along the eta-reversed word is the reversed datum."""
        for datum in (type_a(2), type_a(3)):
            group = weyl_group(datum)
            for lusztig in lusztig_corpus(group, 3):
                M = bz_from_lusztig(group, lusztig, datum.zero())
                N = negate(M)
                self.assertTrue(verify(N).valid)
                for word in group.reduced_words_w0:
                    reversed_word = tuple(group.eta(i) for i in reversed(word))
                    self.assertEqual(
                        lusztig_datum(N, reversed_word).n,
                        tuple(reversed(lusztig_datum(M, word).n)),
                    )

    def test_translate_basics(self):
        """Test translate by alpha_1^vee and by 0."""
        group = weyl_group(type_a(2))
        moved = translate(top_datum(group), (1, 0))
        self.assertEqual(moved[group.fundamental_chamber(1)], 1)
        self.assertEqual(translate(sl3_hexagon(), (0, 0)), sl3_hexagon())

    def test_stable_normalize(self):
        """Test that stable normalization puts mu_w0 at 0."""
        M = stable_normalize(sl3_hexagon())
        group = M.group
        for i in group.nodes:
            self.assertEqual(M.at(group.longest, i), 0)


class MembershipTests(SimpleTestCase):
    """Test point and polytope containment and B(lambda) membership."""

    def test_hexagon_contains_origin(self):
        """Test that the hexagon contains 0."""
        self.assertTrue(contains(sl3_hexagon(), (0, 0)))
        self.assertFalse(contains(sl3_hexagon(), (3, 0)))

    def test_polytope_containment(self):
        """Test that the hexagon lies inside its f_1 image."""
        self.assertTrue(polytope_contains(sl3_hexagon_lowered(), sl3_hexagon()))
        self.assertFalse(polytope_contains(sl3_hexagon(), sl3_hexagon_lowered()))

    def test_point_polytope_in_b_lambda(self):
        """Test that the point at lambda lies in B(lambda)."""
        group = weyl_group(type_c(3))
        lam = (1, 1, 1)
        self.assertTrue(in_b_lambda(point_polytope(group, lam), lam))

    def test_hexagon_in_b_lambda(self):
        """Test the hexagon is conv(W lambda) for lambda = alpha_1^vee + alpha_2^vee."""
        lam = (1, 1)
        M = sl3_hexagon()
        self.assertEqual(M, orbit_polytope(M.group, lam))
        self.assertTrue(in_b_lambda(M, lam))
        self.assertTrue(in_orbit_hull(M, lam))

    def test_lowered_hexagon_not_in_b_lambda(self):
        """Test that f_1 of the hexagon leaves B(lambda)."""
        lam = (1, 1)
        M = sl3_hexagon_lowered()
        self.assertFalse(in_b_lambda(M, lam))
        self.assertFalse(in_orbit_hull(M, lam))

    def test_top_vertex_mismatch(self):
        """Test that in_b_lambda needs mu_w0 = lambda."""
        with self.assertRaises(InvalidDatumError):
            in_b_lambda(sl3_hexagon(), (0, 0))
