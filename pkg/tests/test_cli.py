import io
import json
import os
import tempfile
import unittest
from unittest.mock import patch

from chaincert import __version_v__
from chaincert.__main__ import build_argument_parser, main, parse_args

from .constants import ROOT_9_DOCUMENT, ROOT_32_TIGHT_DOCUMENT


def run(*argv):
    """Run the CLI and return (exit code, stdout, stderr)."""
    with patch("sys.stdout", new_callable=io.StringIO) as out, patch(
        "sys.stderr", new_callable=io.StringIO
    ) as err:
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


class ArgumentParserTest(unittest.TestCase):

    def test_subcommands(self):
        """Test every subcommand parses its defaults"""
        args = parse_args(["chain", "--a", "2", "--b", "3", "--root", "32"])
        self.assertEqual((args.command, args.max_steps, args.format), ("chain", 64, "text"))
        args = parse_args(["stability", "--a", "2", "--b", "1", "--z", "9", "--prime", "2"])
        self.assertEqual(args.terms, 8)
        args = parse_args(["search", "--a", "2", "--b", "1", "--lo", "1", "--hi", "5"])
        self.assertEqual((args.min_len, args.jobs, args.progress), (0, 1, False))

    def test_quiet_after_subcommand(self):
        """Test the shared flags are accepted by subcommands"""
        args = parse_args(["verify", "cert.json", "-q"])
        self.assertTrue(args.quiet)
        self.assertFalse(args.verbose)

    def test_tight_and_corollary_exclusive(self):
        """Test --tight and --corollary cannot be combined"""
        with patch("sys.stderr", new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as ctx:
                parse_args(
                    ["certify", "--a", "2", "--b", "3", "--z", "32", "--tight", "--corollary"]
                )
        self.assertEqual(ctx.exception.code, 2)

    def test_missing_subcommand(self):
        """Test a subcommand is required"""
        with patch("sys.stderr", new_callable=io.StringIO):
            with self.assertRaises(SystemExit) as ctx:
                parse_args([])
        self.assertEqual(ctx.exception.code, 2)

    def test_version(self):
        """Test --version prints the tagged version"""
        with patch("sys.stdout", new_callable=io.StringIO) as out:
            with self.assertRaises(SystemExit) as ctx:
                build_argument_parser().parse_args(["--version"])
        self.assertEqual(ctx.exception.code, 0)
        self.assertEqual(out.getvalue().strip(), __version_v__)


class ChainCommandTest(unittest.TestCase):

    def test_root_32(self):
        """Test the text rendering of the root-32 chain"""
        code, out, _ = run("chain", "--a", "2", "--b", "3", "--root", "32")
        self.assertEqual(code, 0)
        self.assertEqual(
            out,
            "map: 2z+3\n"
            "root: 32\n"
            "elements: 67 137 277 557 1117 2237\n"
            "length: 6\n"
            "terminator: 4477\n",
        )

    def test_root_1_json(self):
        """Test the JSON rendering of the root-1 chain"""
        code, out, _ = run("chain", "--a", "2", "--b", "3", "--root", "1", "--format", "json")
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual(document["elements"], ["5", "13", "29", "61"])
        self.assertEqual(document["length"], "4")
        self.assertEqual(document["terminator"], "125")
        self.assertFalse(document["truncated"])

    def test_truncated(self):
        """Test the truncation notice"""
        code, out, _ = run("chain", "--a", "2", "--b", "3", "--root", "32", "--max-steps", "2")
        self.assertEqual(code, 0)
        self.assertIn("truncated: reached max-steps=2", out)
        self.assertNotIn("terminator", out)

    def test_invalid_map(self):
        """Test a multiplier below 2 is a usage error"""
        code, out, err = run("chain", "--a", "1", "--b", "3", "--root", "5")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("a >= 2", err)

    def test_invalid_root(self):
        """Test a root below 1 is a usage error"""
        code, _, err = run("chain", "--a", "2", "--b", "3", "--root", "0")
        self.assertEqual(code, 2)
        self.assertIn("--root", err)


class CertifyCommandTest(unittest.TestCase):

    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def _path(self, name):
        return os.path.join(self.tmp.name, name)

    def test_tight(self):
        """Test the tight certificate for root 32"""
        code, out, _ = run("certify", "--a", "2", "--b", "3", "--z", "32", "--tight")
        self.assertEqual(code, 0)
        self.assertEqual(out, ROOT_32_TIGHT_DOCUMENT)

    def test_default(self):
        """Test the default certificate for root 9 under 2z + 1"""
        code, out, _ = run("certify", "--a", "2", "--b", "1", "--z", "9")
        self.assertEqual(code, 0)
        self.assertEqual(out, ROOT_9_DOCUMENT)

    def test_shared_factor(self):
        """Test a root sharing a factor with b fails certification"""
        code, out, err = run("certify", "--a", "2", "--b", "3", "--z", "21")
        self.assertEqual(code, 1)
        self.assertEqual(out, "")
        self.assertIn("shared_factor", err)

    def test_below_threshold(self):
        """Test a power of a at or below M has no certificate"""
        code, _, err = run("certify", "--a", "2", "--b", "3", "--z", "16")
        self.assertEqual(code, 1)
        self.assertIn("below_threshold", err)

    def test_root_too_small(self):
        """Test z below 2 is a usage error"""
        code, _, err = run("certify", "--a", "2", "--b", "3", "--z", "1")
        self.assertEqual(code, 2)
        self.assertIn("--z", err)

    def test_corollary(self):
        """Test the image-root certificate and its bound"""
        code, out, err = run("certify", "--a", "2", "--b", "3", "--z", "32", "--corollary")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["z"], "67")
        self.assertIn("l(32) < 67", err)

    def test_round_trip(self):
        """Test certify --out followed by verify"""
        path = self._path("root32.json")
        code, out, _ = run(
            "certify", "--a", "2", "--b", "3", "--z", "32", "--tight", "--out", path
        )
        self.assertEqual((code, out), (0, ""))
        with open(path, encoding="utf-8") as f:
            self.assertEqual(f.read(), ROOT_32_TIGHT_DOCUMENT)

        code, out, _ = run("verify", path)
        self.assertEqual((code, out), (0, "VALID\n"))

    def test_tampered(self):
        """Test an edited witness index is reported"""
        path = self._path("tampered.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write(ROOT_32_TIGHT_DOCUMENT.replace('"witness_index": "7"', '"witness_index": "6"'))
        code, out, _ = run("verify", path)
        self.assertEqual((code, out), (1, "INVALID nonzero_residue\n"))

    def test_schema_violation(self):
        """Test a document missing a field"""
        path = self._path("broken.json")
        with open(path, "w", encoding="utf-8") as f:
            f.write('{"a": "2"}\n')
        code, _, err = run("verify", path)
        self.assertEqual(code, 2)
        self.assertIn("missing fields", err)

    def test_missing_file(self):
        """Test a path that does not exist"""
        code, _, err = run("verify", self._path("absent.json"))
        self.assertEqual(code, 2)
        self.assertIn("cannot read", err)


class StabilityCommandTest(unittest.TestCase):

    def test_table(self):
        """Test the trace table for root 9 under 2z + 1"""
        code, out, _ = run(
            "stability", "--a", "2", "--b", "1", "--z", "9", "--prime", "2", "--terms", "4"
        )
        self.assertEqual(code, 0)
        self.assertEqual(
            out,
            "n\ts_n\tnu_2(s_n)\n"
            "1\t8\t3\n"
            "2\t6\t1\n"
            "3\t2\t1\n"
            "4\t-6\t1\n"
            "stable index: 1\n",
        )

    def test_json(self):
        """Test the JSON trace with no stable index"""
        code, out, _ = run(
            "stability", "--a", "2", "--b", "3", "--z", "32", "--prime", "2",
            "--terms", "4", "--format", "json",
        )
        self.assertEqual(code, 0)
        document = json.loads(out)
        self.assertEqual([t["valuation"] for t in document["terms"]], ["0"] * 4)
        self.assertIsNone(document["stable_index"])

    def test_prime_not_dividing_a(self):
        """Test a prime that does not divide a"""
        code, _, err = run("stability", "--a", "2", "--b", "3", "--z", "32", "--prime", "11")
        self.assertEqual(code, 2)
        self.assertIn("does not divide", err)


class SearchCommandTest(unittest.TestCase):

    def test_rows(self):
        """Test the CSV for roots 1 to 40 under 2z + 3"""
        code, out, _ = run(
            "search", "--a", "2", "--b", "3", "--lo", "1", "--hi", "40", "--min-len", "4"
        )
        self.assertEqual(code, 0)
        lines = out.splitlines()
        self.assertEqual(lines[0], "root,length,first_element,last_element,truncated")
        self.assertIn("1,4,5,61,false", lines)
        self.assertIn("32,6,67,2237,false", lines)

    def test_root_20(self):
        """Test root 20 under 2z + 1"""
        code, out, _ = run(
            "search", "--a", "2", "--b", "1", "--lo", "15", "--hi", "25", "--min-len", "3"
        )
        self.assertEqual(code, 0)
        self.assertIn("20,3,41,167,false", out.splitlines())

    def test_inverted_range(self):
        """Test an empty range is a usage error"""
        code, _, _ = run(
            "search", "--a", "2", "--b", "1", "--lo", "5", "--hi", "4", "--min-len", "1"
        )
        self.assertEqual(code, 2)


class CompleteAndBoundsCommandTest(unittest.TestCase):

    def test_complete(self):
        """Test the complete chain through 11"""
        code, out, _ = run("complete", "--a", "2", "--b", "1", "--p", "11")
        self.assertEqual(code, 0)
        self.assertIn("elements: 2 5 11 23 47\n", out)
        self.assertIn("lambda: 5\n", out)

    def test_complete_json(self):
        """Test the JSON rendering of the chain through 41"""
        code, out, _ = run("complete", "--a", "2", "--b", "1", "--p", "41", "--format", "json")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["elements"], ["41", "83", "167"])

    def test_complete_composite(self):
        """Test a composite start is a usage error"""
        code, _, err = run("complete", "--a", "2", "--b", "1", "--p", "9")
        self.assertEqual(code, 2)
        self.assertIn("9 is not prime", err)

    def test_bounds(self):
        """Test bounds above the threshold succeed"""
        code, out, _ = run("bounds", "--a", "2", "--b", "3", "--lo", "22", "--hi", "40")
        self.assertEqual(code, 0)
        self.assertIn("32\tcertified\t11\t7\ttheorem2\t6", out.splitlines())

    def test_bounds_gap(self):
        """Test a root with no candidate fails the bounds check"""
        code, _, err = run("bounds", "--a", "2", "--b", "1", "--lo", "2", "--hi", "2")
        self.assertEqual(code, 1)
        self.assertIn("no_candidate", err)


if __name__ == "__main__":
    unittest.main()
