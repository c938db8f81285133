from fractions import Fraction

from django.test import SimpleTestCase

from mvpoly.apps.bz.datum import bottom_vertex, point_polytope, top_vertex, translate
from mvpoly.apps.bz.fixtures import sl3_hexagon, sl3_hexagon_lowered
from mvpoly.apps.core.exceptions import InvalidPositionError, NotInCrystalError
from mvpoly.apps.crystal.graphs import crystal_graph_lambda
from mvpoly.apps.kashiwara.data import kashiwara_datum, midpoint_height, string_to_bz
from mvpoly.apps.kashiwara.embedding import embed, phi
from mvpoly.apps.kashiwara.transitions import braid_transition
from mvpoly.apps.kashiwara.types import StringDatum
from mvpoly.apps.rootdatum.classical import type_a, type_c
from mvpoly.apps.weyl.group import weyl_group
from mvpoly.apps.weyl.types import BraidMove


def b_lambda_data(datum, lam):
    """The BZ data of B(lam), each translated to top vertex lam."""
    group = weyl_group(datum)
    graph = crystal_graph_lambda(group, lam)
    return group, [translate(b.bz, lam) for b in graph.nodes]


class KashiwaraDatumTests(SimpleTestCase):
    """Test string data read off BZ data."""

    def test_hexagon_is_lowest(self):
        """Test that the hexagon has string datum 0 along (1,2,1)."""
        p = kashiwara_datum(sl3_hexagon(), (1, 2, 1))
        self.assertEqual(p.p, (0, 0, 0))
        self.assertTrue(p.is_nonnegative)

    def test_point_polytope(self):
        """Test the highest element of B(alpha_1^vee + alpha_2^vee) along both words."""
        group = weyl_group(type_a(2))
        M = point_polytope(group, (1, 1))
        self.assertEqual(kashiwara_datum(M, (1, 2, 1)).p, (1, 2, 1))
        self.assertEqual(kashiwara_datum(M, (2, 1, 2)).p, (1, 2, 1))

    def test_outside_b_lambda_is_rejected(self):
        """Test that f_1 of the hexagon has no string datum for its top vertex."""
        with self.assertRaises(NotInCrystalError):
            kashiwara_datum(sl3_hexagon_lowered(), (1, 2, 1))

    def test_round_trip_hexagon(self):
        """Test that the hexagon is rebuilt from (0,0,0) and mu_e = (-1,0,1)."""
        group = weyl_group(type_a(2))
        p = kashiwara_datum(sl3_hexagon(), (1, 2, 1))
        self.assertEqual(string_to_bz(group, p, (-1, -1)), sl3_hexagon())

    def test_midpoint_height(self):
        """Test the height of the midpoint of the first edge."""
        group = weyl_group(type_a(2))
        self.assertEqual(midpoint_height(sl3_hexagon(), group.identity, 1), Fraction(0))
        self.assertEqual(midpoint_height(sl3_hexagon_lowered(), group.identity, 1), Fraction(-1))

    def test_round_trip_on_crystals(self):
        """Test string_to_bz inverts kashiwara_datum on B(lambda) in A3, C2 and C3."""
        for datum, lam in ((type_a(3), (1, 1, 1)), (type_c(2), (1, 2)), (type_c(3), (1, 1, 1))):
            group, data = b_lambda_data(datum, lam)
            for M in data:
                p = kashiwara_datum(M, group.canonical_word)
                self.assertEqual(string_to_bz(group, p, bottom_vertex(M), check=True), M)

    def test_injective_on_crystals(self):
        """Test that distinct elements of B(lambda) have distinct string data."""
        cases = (
            (type_a(2), (1, 1)),
            (type_a(2), (2, 1)),
            (type_c(2), (1, 2)),
            (type_c(3), (1, 1, 1)),
        )
        for datum, lam in cases:
            group, data = b_lambda_data(datum, lam)
            for word in group.reduced_words_w0:
                found = {kashiwara_datum(M, word).p for M in data}
                self.assertEqual(len(found), len(data))


class BraidTransitionTests(SimpleTestCase):
    """Test the piecewise-linear transition maps."""

    def test_a2_transition(self):
        """Test (1,2,1) on (1,2,1) maps to (1,2,1) on (2,1,2)."""
        moved = braid_transition(type_a(2), StringDatum((1, 2, 1), (1, 2, 1)), BraidMove(0, (1, 2), 3))
        self.assertEqual(moved, StringDatum((2, 1, 2), (1, 2, 1)))

    def test_commuting_transition_swaps(self):
        """Test that a commutation move swaps the two entries."""
        moved = braid_transition(type_a(3), StringDatum((1, 3, 2), (4, 7, 1)), BraidMove(0, (1, 3), 2))
        self.assertEqual(moved, StringDatum((3, 1, 2), (7, 4, 1)))

    def test_wrong_move_length(self):
        """Test that a move of the wrong length is rejected."""
        with self.assertRaises(InvalidPositionError):
            braid_transition(type_a(2), StringDatum((1, 2, 1), (0, 0, 0)), BraidMove(0, (1, 2), 2))

    def test_block_must_match(self):
        """Test that the word must carry the alternating block at the position."""
        with self.assertRaises(InvalidPositionError):
            braid_transition(type_a(2), StringDatum((1, 2, 1), (0, 0, 0)), BraidMove(0, (2, 1), 3))

    def test_coherent_with_polytopes(self):
        """Test that every braid move carries string data of B(lambda) elements to each other."""
        cases = (
            (type_a(2), (2, 1)),
            (type_a(3), (1, 1, 1)),
            (type_c(2), (1, 2)),
            (type_c(3), (1, 1, 1)),
        )
        for datum, lam in cases:
            group, data = b_lambda_data(datum, lam)
            for M in data:
                for word in group.reduced_words_w0:
                    p = kashiwara_datum(M, word)
                    for neighbor, move in group.braid_neighbors(word):
                        self.assertEqual(braid_transition(datum, p, move), kashiwara_datum(M, neighbor))


class EmbeddingTests(SimpleTestCase):
    """Test embedding a polytope into some B(lambda)."""

    def test_phi(self):
        """Test phi_1 on the hexagon and on the highest element."""
        group = weyl_group(type_a(2))
        self.assertEqual(phi(sl3_hexagon(), 1), 0)
        self.assertEqual(phi(point_polytope(group, (1, 1)), 1), 1)

    def test_embed_hexagon(self):
        """Test the hexagon needs lambda = 2 rho^vee."""
        lam, shifted = embed(sl3_hexagon())
        self.assertEqual(lam, (2, 2))
        self.assertEqual(top_vertex(shifted), lam)
        self.assertEqual(embed(sl3_hexagon(), 1)[0], (2, 2))

    def test_embed_point(self):
        """Test that the point at 0 already lies in B(0)."""
        group = weyl_group(type_c(3))
        lam, shifted = embed(point_polytope(group, (0, 0, 0)))
        self.assertEqual(lam, (0, 0, 0))
        self.assertEqual(shifted, point_polytope(group, (0, 0, 0)))
