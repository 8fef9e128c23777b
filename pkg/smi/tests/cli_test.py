#!/usr/bin/env python
# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

from __future__ import absolute_import, division, print_function, unicode_literals

import io
import json
import unittest

from smi import cli


try:
    import unittest.mock as mock
except ImportError:
    import mock


SOURCE = "(p/\\q)\\/(s/\\t)"
TARGET = "(p\\/s)/\\(q\\/t)"
F = "[0 1 3]@1->2 ; [0 1 2 2]@2->1 ; [0 1 1 3]@2->2"
G = "[0 1 1 3]@2->2 ; [0 1 3]@1->2 ; [0 1 2 3]@2->2"
BAR = ["bar", "--n", "2", "--m", "1", "--shape", "1,2,2"]


class SmiCliTestCase(unittest.TestCase):
    def run_main(self, *args):
        with mock.patch("sys.stdout", new_callable=io.StringIO) as out, mock.patch(
            "sys.stderr", new_callable=io.StringIO
        ) as err:
            status = cli.main(list(args))
        return status, out.getvalue(), err.getvalue()

    def test_canon_sai(self):
        status, out, _ = self.run_main("canon-sai", SOURCE, TARGET)
        self.assertEqual((status, out), (0, "ck(p;q;s;t)\n"))
        status, out, _ = self.run_main("--json", "canon-sai", SOURCE, TARGET)
        payload = json.loads(out)
        self.assertEqual(payload["result"], "ck(p;q;s;t)")
        self.assertEqual(payload["ck_count"], 1)

    def test_canon_arrow(self):
        status, out, _ = self.run_main("canon-arrow", "p \\/ q", "p /\\ q")
        self.assertEqual((status, out), (0, "NONE\n"))
        status, out, _ = self.run_main("--strict", "canon-arrow", "p \\/ q", "p /\\ q")
        self.assertEqual((status, out), (1, "NONE\n"))
        status, out, _ = self.run_main("--strict", "canon-arrow", "p \\/ p", "p /\\ p")
        self.assertEqual((status, out), (1, "UNDECIDED\n"))
        status, out, _ = self.run_main("canon-arrow", "top \\/ top", "top")
        self.assertEqual((status, out), (0, "w_or_fw\n"))

    def test_nu_and_purity(self):
        status, out, _ = self.run_main("--json", "nu", "p \\/ (bot /\\ bot)")
        self.assertEqual(status, 0)
        self.assertEqual(
            json.loads(out), {"result": "p", "source": "p \\/ (bot /\\ bot)"}
        )
        status, out, _ = self.run_main("purity", "p /\\ bot")
        self.assertEqual(out, "top-pure\n")
        status, out, _ = self.run_main("--free", "nu", "(p \\/ bot) /\\ top")
        self.assertEqual(out, "p\n")

    def test_equal(self):
        status, out, _ = self.run_main("equal", "c_or(q;p) . c_or(p;q)", "id(p \\/ q)")
        self.assertEqual((status, out), (0, "EQUAL\n"))
        status, out, _ = self.run_main("equal", "--explain", "c_or(p;p)", "id(p \\/ p)")
        lines = out.splitlines()
        self.assertEqual(lines[0], "UNKNOWN")
        self.assertTrue(lines[1].startswith("source: "))
        self.assertFalse(json.loads(lines[1][len("source: ") :])["diversified"])
        status, _, _ = self.run_main("--strict", "equal", "c_or(p;p)", "id(p \\/ p)")
        self.assertEqual(status, 1)
        status, out, _ = self.run_main("--free", "equal", "d_or_fw(p)", "id(p)")
        self.assertEqual(out, "NOT-PARALLEL\n")

    def test_terms(self):
        status, out, _ = self.run_main("develop", "(c_or(q;p) . c_or(p;q)) | kappa")
        self.assertEqual(
            out.splitlines(),
            ["c_or(p;q) | id(bot)", "c_or(q;p) | id(bot)", "id(p \\/ q) | kappa"],
        )
        status, out, _ = self.run_main(
            "ck-count", "ck(p;q;s;t) . (c_and(q;p) | id(s /\\ t))"
        )
        self.assertEqual((status, out), (0, "1\n"))
        status, out, _ = self.run_main("unit-reduce", "ck(p;q;bot;bot)")
        self.assertEqual(out, "id(p /\\ q)\n")

    def test_simp(self):
        status, out, _ = self.run_main("simp", "hj", "d(1)@2")
        self.assertEqual((status, out), (0, "{0 0}@2->1\n"))
        status, out, _ = self.run_main("--json", "simp", "compose", "s(0)@1", "d(0)@1")
        self.assertEqual(json.loads(out), {"result": "[0 1]@0->0", "word": "id@0"})
        status, out, _ = self.run_main("simp", "render", "s(0)@1")
        self.assertEqual(out, "simplex 0->1\nsrc * *\n    | \\\ndst * o *\nmap 0:0 1:2\n")
        status, _, err = self.run_main("simp", "compose", "s(0)@1")
        self.assertEqual(status, 2)
        self.assertIn("needs two maps", err)

    def test_bar(self):
        status, out, _ = self.run_main(*(BAR + ["omega", F, G]))
        self.assertEqual(status, 0)
        self.assertEqual(
            out.splitlines(),
            ["ck(p_1_1_1;p_1_1_2;bot;bot)", "w_or_fw"] + ["w_and_bw", "kappa"] * 3,
        )
        status, out, _ = self.run_main(*(["--json"] + BAR + ["eval", "--maps", F]))
        self.assertEqual(
            json.loads(out)["result"],
            ["p_1_1_1 /\\ p_1_1_2", "top", "bot /\\ bot", "top"],
        )
        identity = " ; ".join(["id@2"] * 3)
        status, out, _ = self.run_main(*(BAR + ["laxcheck", F, G, identity]))
        self.assertEqual((status, out), (0, "COMMUTES\n"))
        status, _, err = self.run_main(*(BAR + ["omega", F]))
        self.assertEqual(status, 2)
        self.assertIn("takes 2 product maps", err)

    def test_bar_options_after_action(self):
        status, out, _ = self.run_main(
            "bar", "omega", "--n", "2", "--m", "1", "--shape", "1,2,2", F, G
        )
        self.assertEqual(status, 0)
        self.assertEqual(
            out.splitlines(),
            ["ck(p_1_1_1;p_1_1_2;bot;bot)", "w_or_fw"] + ["w_and_bw", "kappa"] * 3,
        )
        status, out, _ = self.run_main(
            "--json", "bar", "eval", "--n", "2", "--m", "1", "--shape", "1,2,2", F
        )
        self.assertEqual(
            json.loads(out)["result"],
            ["p_1_1_1 /\\ p_1_1_2", "top", "bot /\\ bot", "top"],
        )
        with self.assertRaises(SystemExit) as cm:
            self.run_main(*(BAR + ["omega", F, G, "--bogus"]))
        self.assertEqual(cm.exception.code, 2)

    def test_oracle(self):
        status, out, _ = self.run_main("--json", "oracle", "reach", SOURCE, TARGET)
        payload = json.loads(out)
        self.assertEqual(payload["result"], "REACHABLE")
        self.assertEqual(payload["lengths"], [1])
        self.assertEqual(len(payload["witness"]), 2)
        with mock.patch("smi.utils.os.getenv") as fake_env:
            fake_env.return_value = "1"
            status, _, err = self.run_main("oracle", "reach", SOURCE, TARGET)
        self.assertEqual(status, 2)
        self.assertTrue(err.startswith("smi: error: "))

    def test_oracle_unreachable(self):
        status, out, _ = self.run_main("--json", "oracle", "reach", TARGET, SOURCE)
        self.assertEqual(status, 0)
        self.assertEqual(json.loads(out)["result"], "UNREACHABLE")
        status, out, _ = self.run_main("--strict", "oracle", "reach", TARGET, SOURCE)
        self.assertEqual((status, out), (1, "UNREACHABLE\n"))
        status, out, _ = self.run_main("--strict", "oracle", "reach", "p", "q")
        self.assertEqual((status, out), (1, "UNREACHABLE\n"))
        status, _, _ = self.run_main("--strict", "oracle", "reach", SOURCE, TARGET)
        self.assertEqual(status, 0)
        with self.assertRaises(SystemExit) as cm:
            self.run_main("oracle", "reach", SOURCE, TARGET, "extra")
        self.assertEqual(cm.exception.code, 2)

    def test_bad_input(self):
        status, out, err = self.run_main("nu", "p \\/")
        self.assertEqual((status, out), (2, ""))
        self.assertTrue(err.startswith("smi: error: line 1"))
        with self.assertRaises(SystemExit) as cm:
            self.run_main("bar", "omega")
        self.assertEqual(cm.exception.code, 2)


if __name__ == "__main__":
    unittest.main()
