from itertools import product

from django.test import SimpleTestCase, override_settings

from mvpoly.apps.core.exceptions import (
    CartanMatrixError,
    ClassicalCoordsError,
    NotFiniteTypeError,
    UnsupportedTypeError,
)
from mvpoly.apps.rootdatum.classical import (
    cartan_type,
    chamber_name,
    from_cartan,
    from_classical,
    parse_chamber_name,
    to_classical,
    type_a,
    type_c,
)
from mvpoly.apps.rootdatum.datum import RootDatum
from mvpoly.apps.rootdatum.types import (
    CartanMatrix,
    ClassicalCoords,
    ClassicalKind,
    LatticeRole,
)


class CartanMatrixTests(SimpleTestCase):
    """Test Cartan matrix validation."""

    def test_builtin_c3_matrix(self):
        """Test that C3 has the long root at node 3."""
        self.assertEqual(
            type_c(3).cartan.entries,
            ((2, -1, 0), (-1, 2, -2), (0, -1, 2)),
        )

    def test_diagonal_must_be_two(self):
        """Test that a wrong diagonal entry is rejected."""
        with self.assertRaises(CartanMatrixError):
            RootDatum(CartanMatrix.from_rows([[2, -1], [-1, 1]]))

    def test_zero_pattern_must_be_symmetric(self):
        """Test that a_ij = 0 iff a_ji = 0."""
        with self.assertRaises(CartanMatrixError):
            RootDatum(CartanMatrix.from_rows([[2, 0], [-1, 2]]))

    def test_g2_is_rejected(self):
        """Test that G2 raises UnsupportedTypeError."""
        with self.assertRaises(UnsupportedTypeError):
            RootDatum(CartanMatrix.from_rows([[2, -1], [-3, 2]]))
        with self.assertRaises(UnsupportedTypeError):
            cartan_type("G2")

    def test_affine_matrix_is_rejected(self):
        """Test that the affine A2 matrix fails the finite-type check."""
        with self.assertRaises(NotFiniteTypeError):
            RootDatum(CartanMatrix.from_rows([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]))
        with self.assertRaises(NotFiniteTypeError):
            RootDatum(CartanMatrix.from_rows([[2, -2], [-2, 2]]))

    @override_settings(MV_ROOT_CAP=4)
    def test_root_cap_is_configurable(self):
        """Test that the root closure honours MV_ROOT_CAP."""
        with self.assertRaises(CartanMatrixError):
            RootDatum(CartanMatrix.from_rows([[2, -1], [-1, 2]]))

    def test_from_cartan_recognises_builtins(self):
        """Test that from_cartan returns the named built-in type."""
        datum = from_cartan([[2, -2], [-1, 2]])
        self.assertEqual(datum.name, "C2")
        self.assertEqual(datum.kind, ClassicalKind.C)

    def test_from_cartan_rejects_wrong_label(self):
        """Test that a label disagreeing with the matrix is an error."""
        with self.assertRaises(ClassicalCoordsError):
            from_cartan([[2, -1], [-1, 2]], kind=ClassicalKind.C)


class RootDatumTests(SimpleTestCase):
    """Test pairings, reflections and roots."""

    def test_pairing_basis_duality(self):
        """Test that <alpha_1^vee, Lambda_1> = 1."""
        datum = type_a(2)
        self.assertEqual(datum.pair(datum.simple_coroot(1), datum.fundamental_weight(1)), 1)

    def test_pairing_is_cartan_entry(self):
        """Test <alpha_1^vee, alpha_2> in A2 and <alpha_2^vee, alpha_3> in C3."""
        a2 = type_a(2)
        self.assertEqual(a2.pair(a2.simple_coroot(1), a2.simple_root(2)), -1)
        c3 = type_c(3)
        self.assertEqual(c3.pair(c3.simple_coroot(2), c3.simple_root(3)), -2)

    def test_reflect_fundamental_weight(self):
        """Test s_1 Lambda_1 = Lambda_1 - alpha_1 and s_1 Lambda_2 = Lambda_2."""
        datum = type_a(2)
        self.assertEqual(datum.reflect_weight(1, (1, 0)), (-1, 1))
        self.assertEqual(datum.reflect_weight(1, (0, 1)), (0, 1))

    def test_composed_reflection_is_subset_three(self):
        """Test that s_2 s_1 Lambda_1 is the weight named "3"."""
        datum = type_a(2)
        weight = datum.reflect_weight(2, datum.reflect_weight(1, (1, 0)))
        self.assertEqual(chamber_name(datum, weight), "3")
        self.assertEqual(to_classical(datum, weight).vector, (0, 0, 1))

    def test_reflections_preserve_pairing(self):
        """Test <s_i mu, s_i lam> = <mu, lam> on a grid of samples."""
        for datum in (type_a(2), type_c(3)):
            r = datum.rank
            samples = list(product(range(-1, 2), repeat=r))
            for i in datum.nodes:
                for mu in samples:
                    for lam in samples:
                        self.assertEqual(
                            datum.pair(datum.reflect_coweight(i, mu), datum.reflect_weight(i, lam)),
                            datum.pair(mu, lam),
                        )

    def test_reflection_is_involution(self):
        """Test that reflecting twice is the identity."""
        datum = type_c(3)
        for i in datum.nodes:
            for v in product(range(-2, 3), repeat=3):
                self.assertEqual(datum.reflect_weight(i, datum.reflect_weight(i, v)), v)
                self.assertEqual(datum.reflect_coweight(i, datum.reflect_coweight(i, v)), v)

    def test_root_counts(self):
        """Test |roots(A2)| = 6 and |roots(C3)| = 18."""
        self.assertEqual(len(type_a(2).roots), 6)
        self.assertEqual(len(type_c(3).roots), 18)
        self.assertEqual(len(type_c(3).positive_roots), 9)
        self.assertEqual(len(type_c(3).positive_coroots), 9)

    def test_highest_root_of_c3(self):
        """Test that the highest root of C3 is 2a1 + 2a2 + a3."""
        self.assertEqual(type_c(3).positive_roots[-1], (2, 2, 1))

    def test_braid_orders(self):
        """Test the order of s_i s_j from the bond."""
        c3 = type_c(3)
        self.assertEqual(c3.braid_order(1, 2), 3)
        self.assertEqual(c3.braid_order(2, 3), 4)
        self.assertEqual(c3.braid_order(1, 3), 2)
        self.assertTrue(type_a(3).is_simply_laced)
        self.assertFalse(c3.is_simply_laced)

    def test_positive_coroot_sum_is_dominant(self):
        """Test that 2 rho^vee pairs to 2 with every simple root."""
        for datum in (type_a(3), type_c(2), type_c(3)):
            two_rho = datum.positive_coroot_sum
            for j in datum.nodes:
                self.assertEqual(datum.pair(two_rho, datum.simple_root(j)), 2)


class ClassicalCoordsTests(SimpleTestCase):
    """Test classical coordinate converters and chamber names."""

    def test_a2_coweight_to_coroot_coords(self):
        """Test (-1,0,1) maps to coroot coordinates (-1,-1) and back."""
        datum = type_a(2)
        x = ClassicalCoords(ClassicalKind.A, (-1, 0, 1))
        mu = from_classical(datum, x, LatticeRole.COWEIGHT)
        self.assertEqual(mu, (-1, -1))
        self.assertEqual(to_classical(datum, mu, LatticeRole.COWEIGHT), x)

    def test_a2_coweight_must_sum_to_zero(self):
        """Test that a type A coweight with nonzero sum is rejected."""
        with self.assertRaises(ClassicalCoordsError):
            from_classical(type_a(2), ClassicalCoords(ClassicalKind.A, (1, 0, 0)), LatticeRole.COWEIGHT)

    def test_c3_signed_subset(self):
        """Test that "1-2" is a level-2 weight pairing to 2 with alpha_1^vee."""
        datum = type_c(3)
        weight = parse_chamber_name(datum, "1-2")
        self.assertEqual(weight, (2, -1, 0))
        self.assertEqual(chamber_name(datum, weight), "1-2")

    def test_c3_coweight_prefix_sums(self):
        """Test (x,y,z) maps to coroot coordinates (x, x+y, x+y+z)."""
        datum = type_c(3)
        mu = from_classical(datum, ClassicalCoords(ClassicalKind.C, (-1, 2, 1)), LatticeRole.COWEIGHT)
        self.assertEqual(mu, (-1, 1, 2))
        self.assertEqual(to_classical(datum, mu, LatticeRole.COWEIGHT).vector, (-1, 2, 1))

    def test_a2_subset_twelve_is_lambda_two(self):
        """Test that "12" and "{1,2}" both name Lambda_2."""
        datum = type_a(2)
        self.assertEqual(parse_chamber_name(datum, "12"), (0, 1))
        self.assertEqual(parse_chamber_name(datum, "{1,2}"), (0, 1))

    def test_weight_representative_has_min_zero(self):
        """Test that type A weights come back with smallest entry 0."""
        datum = type_a(3)
        self.assertEqual(to_classical(datum, (0, 1, 0)).vector, (1, 1, 0, 0))

    def test_malformed_names_are_rejected(self):
        """Test that garbage names raise ClassicalCoordsError."""
        with self.assertRaises(ClassicalCoordsError):
            parse_chamber_name(type_a(2), "14")
        with self.assertRaises(ClassicalCoordsError):
            parse_chamber_name(type_c(3), "1x")
        with self.assertRaises(ClassicalCoordsError):
            parse_chamber_name(type_c(3), "11")

    def test_wrong_length_is_rejected(self):
        """Test that a vector of the wrong length is rejected."""
        with self.assertRaises(ClassicalCoordsError):
            from_classical(type_c(3), ClassicalCoords(ClassicalKind.C, (1, 0)))
