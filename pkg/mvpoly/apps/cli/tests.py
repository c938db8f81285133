import json
import os
import tempfile
from io import StringIO

from django.core.management import call_command
from django.core.management.base import CommandError
from django.test import SimpleTestCase, override_settings

from mvpoly.apps.am.operators import am_datum
from mvpoly.apps.bz.fixtures import sl3_hexagon, sl3_hexagon_lowered, sp6_polytope, top_datum
from mvpoly.apps.core.exceptions import NotFiniteTypeError, UnsupportedTypeError
from mvpoly.apps.rootdatum.classical import type_a

from mvpoly.apps.weyl.group import weyl_group

from .exceptions import BZFileError
from .formats import bz_payload, emit_bz_json, parse_bz_json, parse_vector


class TempFileMixin:
    def write_file(self, text: str) -> str:
        handle = tempfile.NamedTemporaryFile("w", suffix=".json", delete=False)
        with handle:
            handle.write(text)
        self.addCleanup(os.unlink, handle.name)
        return handle.name

    def run_command(self, *args):
        out, err = StringIO(), StringIO()
        call_command(*args, stdout=out, stderr=err)
        return out.getvalue(), err.getvalue()

    def assertExitCode(self, code, *args):
        with self.assertRaises(CommandError) as ctx:
            self.run_command(*args)
        self.assertEqual(ctx.exception.returncode, code)
        return ctx.exception


class BZFileTests(SimpleTestCase):
    """Test the BZ file format."""

    def test_round_trip(self):
        """Test parse(emit(M)) = M for data of A2 and C3."""
        for M in (sl3_hexagon(), sl3_hexagon_lowered(), sp6_polytope(3)):
            self.assertEqual(parse_bz_json(emit_bz_json(M)), M)

    def test_emission_is_deterministic(self):
        """Test byte-identical output and canonical entries."""
        M = sp6_polytope(2)
        self.assertEqual(emit_bz_json(M), emit_bz_json(M))
        payload = bz_payload(M)
        self.assertEqual(payload["labels"], "C")
        self.assertEqual(payload["cartan"], [[2, -1, 0], [-1, 2, -2], [0, -1, 2]])
        self.assertEqual(len(payload["entries"]), 26)

    def test_keys_and_names(self):
        """Test the key and pretty name of Lambda_1 in A2."""
        entry = bz_payload(sl3_hexagon())["entries"]
        by_key = {e["key"]: e for e in entry}
        self.assertEqual(by_key["L1:1,0"]["pretty"], "1")
        self.assertEqual(by_key["L2:0,1"]["pretty"], "12")

    def test_unlabelled_file(self):
        """Test that labels and pretty names are optional."""
        payload = json.loads(emit_bz_json(sl3_hexagon()))
        payload["labels"] = None
        for entry in payload["entries"]:
            del entry["pretty"]
        self.assertEqual(parse_bz_json(json.dumps(payload)), sl3_hexagon())

    def test_malformed_key(self):
        """Test that a malformed key is a parse error."""
        payload = json.loads(emit_bz_json(sl3_hexagon()))
        payload["entries"][0]["key"] = "L1;1,0"
        with self.assertRaises(BZFileError):
            parse_bz_json(json.dumps(payload))

    def test_duplicate_key(self):
        """Test that duplicate keys are rejected."""
        payload = json.loads(emit_bz_json(sl3_hexagon()))
        payload["entries"][1] = dict(payload["entries"][0])
        with self.assertRaises(BZFileError):
            parse_bz_json(json.dumps(payload))

    def test_missing_key(self):
        """Test that keys must cover every chamber weight."""
        payload = json.loads(emit_bz_json(sl3_hexagon()))
        payload["entries"].pop()
        with self.assertRaises(BZFileError):
            parse_bz_json(json.dumps(payload))

    def test_wrong_pretty_name(self):
        """Test that a pretty name must match its key."""
        payload = json.loads(emit_bz_json(sl3_hexagon()))
        entry = next(e for e in payload["entries"] if e["key"] == "L1:1,0")
        entry["pretty"] = "{2,3}"
        with self.assertRaises(BZFileError):
            parse_bz_json(json.dumps(payload))

    def test_not_json(self):
        """Test that text that is not JSON is a parse error."""
        with self.assertRaises(BZFileError):
            parse_bz_json("{cartan: ")

    def test_g2_is_unsupported(self):
        """Test that a G2 Cartan matrix raises UnsupportedTypeError."""
        payload = {"cartan": [[2, -1], [-3, 2]], "labels": None, "entries": []}
        with self.assertRaises(UnsupportedTypeError):
            parse_bz_json(json.dumps(payload))

    def test_affine_matrix_is_not_a_parse_error(self):
        """Test that a well-formed affine Cartan matrix raises NotFiniteTypeError."""
        payload = {"cartan": [[2, -2], [-2, 2]], "labels": None, "entries": []}
        with self.assertRaises(NotFiniteTypeError):
            parse_bz_json(json.dumps(payload))

    def test_parse_vector(self):
        """Test integer vector parsing."""
        self.assertEqual(parse_vector("1,1"), (1, 1))
        self.assertEqual(parse_vector("(1, -2, 0)"), (1, -2, 0))
        with self.assertRaises(BZFileError):
            parse_vector("1,a")


class VerifyCommandTests(TempFileMixin, SimpleTestCase):
    """Test the verify command."""

    def test_hexagon_is_valid(self):
        """Test exit 0 on the SL3 hexagon."""
        out, _ = self.run_command("verify", self.write_file(emit_bz_json(sl3_hexagon())))
        self.assertIn("result: valid", out)
        self.assertIn("unsupported: 0", out)

    def test_am_of_sp6_is_invalid(self):
        """Test exit 2 and the failing relation for AM_1 of the Sp6 polytope."""
        path = self.write_file(emit_bz_json(am_datum(sp6_polytope(2), 1)))
        out = StringIO()
        with self.assertRaises(CommandError) as ctx:
            call_command("verify", path, stdout=out, stderr=StringIO())
        self.assertEqual(ctx.exception.returncode, 2)
        self.assertIn("lhs=-2 rhs=-3", out.getvalue())
        self.assertIn("result: invalid", out.getvalue())

    def test_malformed_file(self):
        """Test exit 64 on a malformed key."""
        text = emit_bz_json(sl3_hexagon()).replace("L1:1,0", "L1:1;0")
        self.assertExitCode(64, "verify", self.write_file(text))

    def test_missing_file(self):
        """Test exit 64 when the file cannot be read."""
        self.assertExitCode(64, "verify", "/nonexistent/datum.json")

    def test_g2(self):
        """Test exit 3 for a G2 Cartan matrix."""
        text = json.dumps({"cartan": [[2, -1], [-3, 2]], "labels": None, "entries": []})
        self.assertExitCode(3, "verify", self.write_file(text))

    @override_settings(MV_ROOT_CAP=50)
    def test_affine_matrix(self):
        """Test exit 2 for Cartan matrices that are well formed but not of finite type."""
        for rows in ([[2, -2], [-2, 2]], [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]]):
            text = json.dumps({"cartan": rows, "labels": None, "entries": []})
            self.assertExitCode(2, "verify", self.write_file(text))

    def test_non_square_matrix(self):
        """Test exit 64 for a Cartan matrix that is not square."""
        text = json.dumps({"cartan": [[2, -1], [-1]], "labels": None, "entries": []})
        self.assertExitCode(64, "verify", self.write_file(text))


class OpCommandTests(TempFileMixin, SimpleTestCase):
    """Test the op command."""

    def test_f1_on_hexagon(self):
        """Test fj --j 1 on the hexagon gives M_1 = M_13 = -2."""
        out, _ = self.run_command("op", self.write_file(emit_bz_json(sl3_hexagon())), "fj", "--j", "1")
        self.assertEqual(parse_bz_json(out), sl3_hexagon_lowered())

    def test_string_route(self):
        """Test that the string route gives the same answer."""
        path = self.write_file(emit_bz_json(sl3_hexagon()))
        out, _ = self.run_command("op", path, "fj", "--j", "1", "--route", "string")
        self.assertEqual(parse_bz_json(out), sl3_hexagon_lowered())

    def test_e1_undoes_f1(self):
        """Test ej --j 1 on the lowered hexagon."""
        path = self.write_file(emit_bz_json(sl3_hexagon_lowered()))
        out, _ = self.run_command("op", path, "ej", "--j", "1")
        self.assertEqual(parse_bz_json(out), sl3_hexagon())

    def test_starred(self):
        """Test that fjstar then ejstar is the identity."""
        path = self.write_file(emit_bz_json(sl3_hexagon()))
        lowered, _ = self.run_command("op", path, "fjstar", "--j", "2")
        out, _ = self.run_command("op", self.write_file(lowered), "ejstar", "--j", "2")
        self.assertEqual(parse_bz_json(out), sl3_hexagon())

    def test_e_at_top(self):
        """Test exit 1 for ej on the point."""
        path = self.write_file(emit_bz_json(top_datum(weyl_group(type_a(2)))))
        self.assertExitCode(1, "op", path, "ej", "--j", "1")

    def test_am_on_sp6(self):
        """Test that am prints M' and reports equals_f = false."""
        P = sp6_polytope(2)
        out, err = self.run_command("op", self.write_file(emit_bz_json(P)), "am", "--j", "1")
        self.assertEqual(parse_bz_json(out), am_datum(P, 1))
        self.assertIn("equals_f: false", err)
        self.assertIn("edge_ok: true", err)
        self.assertIn("1-2: AM -2, f -3", err)

    def test_invalid_input(self):
        """Test exit 2 when the input is not an MV polytope."""
        path = self.write_file(emit_bz_json(am_datum(sp6_polytope(2), 1)))
        self.assertExitCode(2, "op", path, "fj", "--j", "1")

    def test_bad_node(self):
        """Test exit 64 for a node outside the Dynkin diagram."""
        path = self.write_file(emit_bz_json(sl3_hexagon()))
        self.assertExitCode(64, "op", path, "fj", "--j", "3")


class GraphCommandTests(TempFileMixin, SimpleTestCase):
    """Test the graph command."""

    def test_adjoint_json(self):
        """Test B(alpha_1^vee + alpha_2^vee) in A2 has 8 nodes and 2 colors."""
        out, _ = self.run_command("graph", "--type", "A2", "--lambda", "1,1", "--format", "json")
        payload = json.loads(out)
        self.assertEqual(len(payload["nodes"]), 8)
        self.assertEqual({edge["j"] for edge in payload["edges"]}, {1, 2})
        self.assertEqual(payload["word"], [1, 2, 1])
        self.assertEqual(payload["nodes"][payload["root"]]["lusztig"], [0, 0, 0])

    def test_adjoint_dot(self):
        """Test the DOT rendering of the same graph."""
        out, _ = self.run_command("graph", "--type", "A2", "--lambda", "1,1")
        self.assertTrue(out.startswith('digraph "A2" {'))
        self.assertEqual(out.count("->"), 8)
        self.assertEqual(out, self.run_command("graph", "--type", "A2", "--lambda", "1,1")[0])

    def test_word_override(self):
        """Test node labels along another reduced word."""
        out, _ = self.run_command(
            "graph", "--type", "A2", "--lambda", "1,1", "--format", "json", "--word", "2,1,2"
        )
        self.assertEqual(json.loads(out)["word"], [2, 1, 2])

    def test_sp4_portion(self):
        """Test a portion of B(infinity) for C2."""
        out, _ = self.run_command("graph", "--type", "C2", "--depth", "2", "--format", "json")
        payload = json.loads(out)
        self.assertIsNone(payload["highest_weight"])
        self.assertEqual(payload["nodes"][payload["root"]]["weight"], [0, 0])

    def test_errors(self):
        """Test exit codes for a non-dominant lambda, G2 and a non-reduced word."""
        self.assertExitCode(2, "graph", "--type", "A2", "--lambda=-1,1")
        self.assertExitCode(2, "graph", "--type", "A2", "--lambda", "2,0")
        self.assertExitCode(3, "graph", "--type", "G2", "--depth", "1")
        self.assertExitCode(2, "graph", "--type", "A2", "--lambda", "1,1", "--word", "1,1,2")


class ReportCommandTests(SimpleTestCase):
    """Test amscan, counterexample and jclose."""

    def run_command(self, *args):
        out = StringIO()
        call_command(*args, stdout=out, stderr=StringIO())
        return out.getvalue()

    def test_amscan_a3(self):
        """Test zero failures on A3 to depth 4."""
        out = self.run_command("amscan", "--type", "A3", "--depth", "4")
        self.assertIn("0 failures", out)

    def test_amscan_lusztig(self):
        """Test the A2 Lusztig corpus scan."""
        out = self.run_command("amscan", "--type", "A2", "--lusztig-bound", "6")
        self.assertIn("elements: 84", out)
        self.assertIn("0 failures", out)

    def test_counterexample(self):
        """Test the Sp6 report at x = 2."""
        out = self.run_command("counterexample", "--x", "2")
        self.assertIn("LHS -2, RHS -3", out)
        self.assertIn("N_1-2 = -3", out)
        self.assertIn("vertices of f_1 P (7)", out)
        self.assertIn("reproduced: yes", out)

    def test_counterexample_needs_x_two(self):
        """Test exit 2 for x = 1."""
        with self.assertRaises(CommandError) as ctx:
            self.run_command("counterexample", "--x", "1")
        self.assertEqual(ctx.exception.returncode, 2)

    def test_jclose(self):
        """Test the certificate for A3 and j = 2."""
        out = self.run_command("jclose", "--type", "A3", "--j", "2")
        self.assertIn("A3, j = 2: j-close", out)
        self.assertIn("H drops: 1", out)
