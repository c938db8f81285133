from django.test import SimpleTestCase, override_settings, tag

from mvpoly.apps.am.scan import lusztig_corpus
from mvpoly.apps.bz.datum import orbit_polytope, point_polytope, translate, vertex
from mvpoly.apps.bz.fixtures import sl3_hexagon, sl3_hexagon_lowered
from mvpoly.apps.bz.validation import verify
from mvpoly.apps.core.exceptions import CapExceededError, InvalidDatumError, UnsupportedTypeError
from mvpoly.apps.crystal.dimension import weyl_dimension
from mvpoly.apps.crystal.graphs import (
    binf_enumerate,
    crystal_graph_lambda,
    in_crystal,
    kashiwara_datum_by_iteration,
    lowest_element,
)
from mvpoly.apps.crystal.operators import (
    apply_e,
    apply_f,
    apply_f_star,
    e,
    e_star,
    epsilon,
    f,
    f_star,
    phi_in,
)
from mvpoly.apps.crystal.types import CrystalElement, Route
from mvpoly.apps.kashiwara.data import kashiwara_datum
from mvpoly.apps.rootdatum.classical import type_a, type_c
from mvpoly.apps.rootdatum.vectors import add, sub
from mvpoly.apps.weyl.group import weyl_group
from mvpoly.apps.weyl.types import Side


def top(datum):
    group = weyl_group(datum)
    return CrystalElement.from_bz(point_polytope(group, datum.zero()))


def check_axioms(test, datum, depth):
    """e_j f_j = id, the weight drop and epsilon on B(infinity) up to depth."""
    for b in binf_enumerate(weyl_group(datum), depth).nodes:
        for j in b.group.nodes:
            lowered = f(b, j)
            test.assertEqual(e(lowered, j), b)
            test.assertEqual(lowered.weight, sub(b.weight, datum.simple_coroot(j)))
            test.assertEqual(epsilon(lowered, j), epsilon(b, j) + 1)


def check_routes(test, elements):
    """The Lusztig and string routes give the same f_j and e_j."""
    for b in elements:
        for j in b.group.nodes:
            lowered = f(b, j, Route.LUSZTIG)
            test.assertEqual(f(b, j, Route.STRING), lowered)
            test.assertEqual(e(b, j, Route.STRING), e(b, j, Route.LUSZTIG))
            test.assertEqual(e(lowered, j, Route.STRING), b)


def check_star_vertices(test, datum, depth):
    """f_j^* fixes mu_w whenever s_j w > w and raises mu_w0 by alpha_j^vee."""
    group = weyl_group(datum)
    for b in binf_enumerate(group, depth).nodes:
        for j in group.nodes:
            lowered = apply_f_star(b.bz, j)
            for w in group.elements:
                if not group.descent(w, j, Side.LEFT):
                    test.assertEqual(vertex(lowered, w), vertex(b.bz, w))
            test.assertEqual(
                vertex(lowered, group.longest),
                add(vertex(b.bz, group.longest), datum.simple_coroot(j)),
            )


def check_string_iteration(test, datum, lam):
    """The string datum formula agrees with iterating f inside B(lam) and ends at the lowest element."""
    group = weyl_group(datum)
    lowest = translate(lowest_element(group, lam).bz, lam)
    for b in crystal_graph_lambda(group, lam).nodes:
        M = translate(b.bz, lam)
        for word in group.reduced_words_w0:
            p, final = kashiwara_datum_by_iteration(M, word, lam)
            test.assertEqual(p, kashiwara_datum(M, word))
            test.assertEqual(final, lowest)


class CrystalElementTests(SimpleTestCase):
    """Test stable MV polytopes as crystal elements."""

    def test_must_be_stable_normal(self):
        """Test that a datum with mu_w0 != 0 is rejected."""
        with self.assertRaises(InvalidDatumError):
            CrystalElement(sl3_hexagon())

    def test_weight_and_depth(self):
        """Test wt and depth of the stable hexagon."""
        b = CrystalElement.from_bz(sl3_hexagon())
        self.assertEqual(b.weight, (-2, -2))
        self.assertEqual(b.depth, 4)


class OperatorTests(SimpleTestCase):
    """Test f_j, e_j and their starred versions."""

    def test_f1_on_hexagon(self):
        """Test that f_1 moves M_1 and M_13 down to -2."""
        self.assertEqual(apply_f(sl3_hexagon(), 1), sl3_hexagon_lowered())
        self.assertEqual(apply_f(sl3_hexagon(), 1, Route.STRING), sl3_hexagon_lowered())

    def test_e1_undoes_f1(self):
        """Test e_1 f_1 = identity on the hexagon."""
        self.assertEqual(apply_e(sl3_hexagon_lowered(), 1), sl3_hexagon())

    def test_e_on_top_is_none(self):
        """Test that e_j of the point vanishes for every j and route."""
        for datum in (type_a(2), type_c(3)):
            b = top(datum)
            for j in b.group.nodes:
                self.assertIsNone(e(b, j))
                self.assertIsNone(e_star(b, j))
                self.assertEqual(epsilon(b, j), 0)

    def test_lusztig_route_needs_simply_laced_type(self):
        """Test that C2 rejects the Lusztig route."""
        with self.assertRaises(UnsupportedTypeError):
            f(top(type_c(2)), 1, Route.LUSZTIG)

    def test_routes_agree(self):
        """Test that both routes compute the same f_j and e_j in A2 and A3."""
        for datum, depth in ((type_a(2), 4), (type_a(3), 3)):
            check_routes(self, binf_enumerate(weyl_group(datum), depth).nodes)

    @tag("slow")
    def test_routes_agree_on_lusztig_corpus(self):
        """Test both routes on every Lusztig datum up to the corpus bound in A2 and A3."""
        for datum, bound in ((type_a(2), 6), (type_a(3), 4)):
            check_routes(self, lusztig_corpus(weyl_group(datum), bound))

    def test_crystal_axioms(self):
        """Test e_j f_j = id, the weight drop and epsilon in A2, C2 and C3."""
        for datum, depth in ((type_a(2), 4), (type_c(2), 4), (type_c(3), 3)):
            check_axioms(self, datum, depth)

    @tag("slow")
    def test_crystal_axioms_deep(self):
        """Test the crystal axioms to depth 6 in A2 and A3 and depth 5 in C2 and C3."""
        for datum, depth in ((type_a(2), 6), (type_a(3), 6), (type_c(2), 5), (type_c(3), 5)):
            check_axioms(self, datum, depth)

    def test_f_keeps_upper_vertices(self):
        """Test that f_j fixes mu_w whenever s_j w < w."""
        for datum, depth in ((type_a(3), 3), (type_c(3), 3)):
            group = weyl_group(datum)
            for b in binf_enumerate(group, depth).nodes:
                for j in group.nodes:
                    lowered = f(b, j)
                    for w in group.elements:
                        if group.descent(w, j, Side.LEFT):
                            self.assertEqual(vertex(lowered.bz, w), vertex(b.bz, w))

    def test_results_are_mv(self):
        """Test that lowering keeps BZ data valid."""
        for datum in (type_a(3), type_c(2), type_c(3)):
            for b in binf_enumerate(weyl_group(datum), 3).nodes:
                self.assertTrue(verify(b.bz).valid)

    def test_starred_operators(self):
        """Test f_j^* against its definition and e_j^* f_j^* = id."""
        for datum in (type_a(3), type_c(2)):
            for b in binf_enumerate(weyl_group(datum), 3).nodes:
                for j in b.group.nodes:
                    lowered = f_star(b, j)
                    self.assertEqual(e_star(lowered, j), b)
                    self.assertEqual(lowered.weight, sub(b.weight, datum.simple_coroot(j)))

    def test_star_on_top_agrees(self):
        """Test f_j^* and f_j agree on the point."""
        b = top(type_c(3))
        for j in b.group.nodes:
            self.assertEqual(f_star(b, j), f(b, j))

    def test_apply_f_star_keeps_bottom(self):
        """Test that f_1^* of the hexagon keeps mu_e."""
        M = sl3_hexagon()
        lowered = apply_f_star(M, 1)
        group = M.group
        self.assertEqual(vertex(lowered, group.identity), vertex(M, group.identity))

    def test_f_star_vertices(self):
        """Test that f_j^* fixes mu_w for s_j w > w and raises mu_w0 by alpha_j^vee."""
        for datum in (type_a(2), type_a(3), type_c(2), type_c(3)):
            check_star_vertices(self, datum, 3)

    @tag("slow")
    def test_f_star_vertices_deep(self):
        """Test the f_j^* vertex rule to depth 6 in A2 and A3 and depth 5 in C2 and C3."""
        for datum, depth in ((type_a(2), 6), (type_a(3), 6), (type_c(2), 5), (type_c(3), 5)):
            check_star_vertices(self, datum, depth)


class CrystalGraphTests(SimpleTestCase):
    """Test B(lambda) and B(infinity) enumeration."""

    def test_b_lambda_sizes(self):
        """Test the sizes of B(lambda) against the Weyl dimension formula."""
        cases = (
            (type_a(1), (1,), 3),
            (type_a(2), (1, 1), 8),
            (type_a(2), (2, 1), 10),
            (type_a(3), (1, 1, 1), 15),
            (type_c(2), (1, 1), 5),
            (type_c(2), (1, 2), 10),
            (type_c(3), (1, 1, 1), 7),
        )
        for datum, lam, size in cases:
            graph = crystal_graph_lambda(weyl_group(datum), lam)
            self.assertEqual(len(graph), size)
            self.assertEqual(weyl_dimension(datum, lam), size)

    def test_b_lambda_shape(self):
        """Test that B(lambda) has the point as only source and conv(W lambda) as only sink."""
        group = weyl_group(type_a(2))
        lam = (1, 1)
        graph = crystal_graph_lambda(group, lam)
        self.assertEqual(graph.sources(), [graph.root])
        self.assertEqual(graph.nodes[graph.root], CrystalElement.from_bz(point_polytope(group, lam)))
        sink = graph.sinks()
        self.assertEqual(len(sink), 1)
        self.assertEqual(graph.nodes[sink[0]], lowest_element(group, lam))
        self.assertEqual(graph.colors(), {1, 2})
        self.assertEqual(graph.to_networkx().number_of_edges(), len(graph.edges))

    def test_elements_lie_in_orbit_hull(self):
        """Test both B(lambda) membership conditions on every element."""
        for datum, lam in ((type_a(3), (1, 1, 1)), (type_c(2), (1, 2))):
            group = weyl_group(datum)
            hull = orbit_polytope(group, lam)
            for b in crystal_graph_lambda(group, lam).nodes:
                self.assertTrue(in_crystal(b, lam))
                inside = translate(b.bz, lam)
                self.assertTrue(all(x >= y for x, y in zip(inside.values, hull.values)))

    def test_non_dominant_lambda(self):
        """Test that lambda must be dominant."""
        with self.assertRaises(InvalidDatumError):
            crystal_graph_lambda(weyl_group(type_a(2)), (2, 0))
        with self.assertRaises(InvalidDatumError):
            weyl_dimension(type_a(2), (2, 0))

    def test_phi_counts_lowering_steps(self):
        """Test phi_j against the length of the j-string below each element of B(lambda)."""
        for datum, lam in ((type_a(2), (1, 1)), (type_c(2), (1, 2))):
            graph = crystal_graph_lambda(weyl_group(datum), lam)
            below = {(s, j): t for s, j, t in graph.edges}
            for index, b in enumerate(graph.nodes):
                for j in datum.nodes:
                    steps, current = 0, index
                    while (current, j) in below:
                        steps, current = steps + 1, below[(current, j)]
                    self.assertEqual(phi_in(b, j, lam), steps)

    def test_phi_outside_b_lambda(self):
        """Test that phi_j needs b to lie in B(lambda)."""
        group = weyl_group(type_a(2))
        with self.assertRaises(InvalidDatumError):
            phi_in(lowest_element(group, (1, 1)), 1, (0, 0))

    def test_binf_counts(self):
        """Test the number of elements of B(infinity) by depth."""
        cases = (
            (type_a(2), 2, 7),
            (type_a(2), 6, 50),
            (type_a(3), 6, 217),
            (type_c(3), 5, 137),
        )
        for datum, depth, size in cases:
            self.assertEqual(len(binf_enumerate(weyl_group(datum), depth)), size)

    def test_binf_is_sorted_by_depth(self):
        """Test canonical node order."""
        graph = binf_enumerate(weyl_group(type_a(2)), 3)
        depths = [b.depth for b in graph.nodes]
        self.assertEqual(depths, sorted(depths))
        self.assertEqual(graph.root, 0)

    @override_settings(MV_NODE_CAP=5)
    def test_node_cap(self):
        """Test that enumeration stops at the node cap."""
        with self.assertRaises(CapExceededError):
            binf_enumerate(weyl_group(type_a(2)), 4)

    def test_string_datum_by_iteration(self):
        """Test the string datum formula against iterating f inside B(lambda)."""
        for datum, lam in ((type_a(2), (1, 1)), (type_a(2), (2, 1)), (type_c(2), (1, 2))):
            check_string_iteration(self, datum, lam)

    @tag("slow")
    def test_string_datum_by_iteration_c3(self):
        """Test the string datum formula on B(1,1,1) in C3 for all reduced words of w0."""
        check_string_iteration(self, type_c(3), (1, 1, 1))
