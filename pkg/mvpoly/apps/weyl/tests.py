from unittest import mock

import networkx as nx
from django.test import SimpleTestCase, override_settings

from mvpoly.apps.core.exceptions import CapExceededError, InvalidDatumError
from mvpoly.apps.rootdatum.classical import chamber_name, type_a, type_c
from mvpoly.apps.weyl.group import WeylGroup, weyl_group
from mvpoly.apps.weyl.types import BraidMove, Side


class WeylGroupEnumerationTests(SimpleTestCase):
    """Test enumeration, lengths and descents."""

    def test_group_orders_and_longest_lengths(self):
        """Test |W| and l(w0) for A2, A3 and C3."""
        for datum, size, length in ((type_a(2), 6, 3), (type_a(3), 24, 6), (type_c(3), 48, 9)):
            group = weyl_group(datum)
            self.assertEqual(group.order, size)
            self.assertEqual(group.longest.length, length)

    def test_length_counts_inverted_positive_roots(self):
        """Test l(w) = #{beta > 0 : w beta < 0} on C3."""
        datum = type_c(3)
        group = weyl_group(datum)
        positive = set(datum.positive_roots)
        for w in group.elements:
            inverted = 0
            for beta in datum.positive_roots:
                image = w.act_weight(datum.root_weight(beta))
                coeffs = next(c for c in datum.roots if datum.root_weight(c) == image)
                if coeffs not in positive:
                    inverted += 1
            self.assertEqual(inverted, w.length)

    @override_settings(MV_WEYL_SIZE_CAP=10)
    def test_size_cap(self):
        """Test that enumeration stops at MV_WEYL_SIZE_CAP."""
        with self.assertRaises(CapExceededError):
            WeylGroup(type_a(3)).elements

    def test_identity_and_longest_descents(self):
        """Test that e has no descents and w0 descends everywhere."""
        group = weyl_group(type_c(3))
        for i in group.nodes:
            for side in Side:
                self.assertFalse(group.descent(group.identity, i, side))
                self.assertTrue(group.descent(group.longest, i, side))

    def test_left_descents_of_s1_s2(self):
        """Test left descents of s1 s2 in A2."""
        group = weyl_group(type_a(2))
        w = group.element_of_word((1, 2))
        self.assertTrue(group.descent(w, 1, Side.LEFT))
        self.assertFalse(group.descent(w, 2, Side.LEFT))
        self.assertTrue(group.descent(w, 2, Side.RIGHT))

    def test_stored_words_are_lexicographically_least(self):
        """Test that w0 in A2 carries the word (1, 2, 1)."""
        self.assertEqual(weyl_group(type_a(2)).canonical_word, (1, 2, 1))

    def test_coweight_action_matches_pairing(self):
        """Test <w mu, w lam> = <mu, lam> for all w in C3."""
        datum = type_c(3)
        group = weyl_group(datum)
        mu, lam = (1, -2, 3), (2, 0, -1)
        for w in group.elements:
            self.assertEqual(datum.pair(w.act_coweight(mu), w.act_weight(lam)), datum.pair(mu, lam))


class ChamberWeightTests(SimpleTestCase):
    """Test chamber weights and the j-relative split."""

    def test_a2_chamber_weights(self):
        """Test Gamma(A2) = {1, 2, 3, 12, 13, 23}."""
        datum = type_a(2)
        group = weyl_group(datum)
        names = {chamber_name(datum, g.weight) for g in group.chamber_weights}
        self.assertEqual(names, {"1", "2", "3", "12", "13", "23"})

    def test_c3_gamma_one(self):
        """Test |Gamma(C3)| = 26 and the listed Gamma_1."""
        datum = type_c(3)
        group = weyl_group(datum)
        self.assertEqual(len(group.chamber_weights), 26)
        _, lower = group.gamma_split(1)
        self.assertEqual(
            {chamber_name(datum, g.weight) for g in lower},
            {"1", "13", "1-23", "-23", "-2", "1-2", "1-3", "1-2-3", "-2-3"},
        )

    def test_fundamental_weight_is_never_relative(self):
        """Test Lambda_j lies in Gamma_j for every j."""
        for datum in (type_a(3), type_c(3)):
            group = weyl_group(datum)
            for j in group.nodes:
                self.assertIn(group.fundamental_chamber(j), group.gamma_split(j)[1])

    def test_relative_weights_pair_nonpositively(self):
        """Test <alpha_j^vee, gamma> <= 0 on Gamma^j."""
        for datum in (type_a(2), type_a(3), type_c(2), type_c(3)):
            group = weyl_group(datum)
            for j in group.nodes:
                for gamma in group.gamma_split(j)[0]:
                    self.assertLessEqual(gamma.weight[j - 1], 0)

    def test_sign_test_converse_on_builtin_types(self):
        """Test Gamma_j = {gamma : <alpha_j^vee, gamma> > 0} on built-in types."""
        for datum in (type_a(1), type_a(2), type_a(3), type_a(4), type_c(2), type_c(3)):
            group = weyl_group(datum)
            for j in group.nodes:
                self.assertTrue(group.sign_test_agrees(j))

    def test_is_relative_matches_split(self):
        """Test membership in Gamma^j through the sign test and through the definition."""
        for datum in (type_a(3), type_c(3)):
            group = weyl_group(datum)
            for j in group.nodes:
                upper, _ = group.gamma_split(j)
                by_sign = {g for g in group.chamber_weights if group.is_relative(g, j)}
                with mock.patch.object(WeylGroup, "sign_test_agrees", return_value=False):
                    by_definition = {g for g in group.chamber_weights if group.is_relative(g, j)}
                self.assertEqual(by_sign, set(upper))
                self.assertEqual(by_definition, set(upper))

    def test_negative_chamber_weight(self):
        """Test that -Lambda_1 is the level-2 weight "23" in A2."""
        datum = type_a(2)
        group = weyl_group(datum)
        minus = group.negative(group.fundamental_chamber(1))
        self.assertEqual(minus.level, 2)
        self.assertEqual(chamber_name(datum, minus.weight), "23")

    def test_chamber_key_format(self):
        """Test the L<i>:<coords> key of a chamber weight."""
        group = weyl_group(type_a(2))
        self.assertEqual(group.fundamental_chamber(2).key(), "L2:0,1")


class DynkinInvolutionTests(SimpleTestCase):
    """Test eta with -w0 alpha_i = alpha_eta(i)."""

    def test_known_involutions(self):
        """Test eta in A1, A2, A3 and C3."""
        self.assertEqual(weyl_group(type_a(1)).dynkin_involution, (1,))
        self.assertEqual(weyl_group(type_a(2)).dynkin_involution, (2, 1))
        self.assertEqual(weyl_group(type_a(3)).dynkin_involution, (3, 2, 1))
        self.assertEqual(weyl_group(type_c(3)).dynkin_involution, (1, 2, 3))


class ReducedWordTests(SimpleTestCase):
    """Test reduced words of w0, braid moves and paths."""

    def test_a2_reduced_words(self):
        """Test that A2 has exactly two reduced words one 3-move apart."""
        group = weyl_group(type_a(2))
        self.assertEqual(group.reduced_words_w0, ((1, 2, 1), (2, 1, 2)))
        self.assertEqual(
            group.braid_neighbors((1, 2, 1)),
            [((2, 1, 2), BraidMove(0, (1, 2), 3))],
        )

    def test_reduced_word_counts(self):
        """Test 16 words in A3, 2 in C2 and 42 in C3."""
        self.assertEqual(len(weyl_group(type_a(3)).reduced_words_w0), 16)
        self.assertEqual(len(weyl_group(type_c(2)).reduced_words_w0), 2)
        self.assertEqual(len(weyl_group(type_c(3)).reduced_words_w0), 42)

    def test_braid_graph_is_connected(self):
        """Test connectivity of the braid graph in A2, A3, C2 and C3."""
        for datum in (type_a(2), type_a(3), type_c(2), type_c(3)):
            graph = weyl_group(datum).braid_graph()
            self.assertTrue(nx.is_connected(graph))

    def test_c2_four_move(self):
        """Test the single 4-move of C2."""
        group = weyl_group(type_c(2))
        self.assertEqual(
            group.braid_neighbors((1, 2, 1, 2)),
            [((2, 1, 2, 1), BraidMove(0, (1, 2), 4))],
        )

    def test_commuting_move(self):
        """Test a 2-move in A3."""
        group = weyl_group(type_a(3))
        moves = dict(group.braid_neighbors((1, 3, 2, 1, 3, 2)))
        self.assertEqual(moves[(3, 1, 2, 1, 3, 2)], BraidMove(0, (1, 3), 2))

    def test_word_starting_with(self):
        """Test the least reduced word of w0 starting with a given letter."""
        group = weyl_group(type_a(2))
        self.assertEqual(group.word_starting_with(1), (1, 2, 1))
        self.assertEqual(group.word_starting_with(2), (2, 1, 2))

        c3 = weyl_group(type_c(3))
        for j in c3.nodes:
            starting = [w for w in c3.reduced_words_w0 if w[0] == j]
            self.assertEqual(c3.word_starting_with(j), min(starting))

    def test_prefix_lengths(self):
        """Test l(w_k) = k along every reduced word of C3."""
        group = weyl_group(type_c(3))
        for word in group.reduced_words_w0:
            path = group.longest_path(word)
            self.assertEqual([w.length for w in path.prefixes], list(range(len(word) + 1)))

    def test_path_rejects_non_reduced_words(self):
        """Test that a non-reduced or short word is rejected."""
        group = weyl_group(type_a(2))
        with self.assertRaises(InvalidDatumError):
            group.path((1, 1))
        with self.assertRaises(InvalidDatumError):
            group.longest_path((1, 2))

    @override_settings(MV_REDUCED_WORD_RANK_CAP=2)
    def test_reduced_word_rank_cap(self):
        """Test that the rank cap applies to reduced word enumeration."""
        with self.assertRaises(CapExceededError):
            WeylGroup(type_a(3)).reduced_words_w0
