# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import unittest

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from smi import formula, strict
from smi.formula import BOT, TOP, And, Letter, Or
from smi.tests import smi_test_helpers


p, q, r, s, t = map(Letter, "pqrst")


def _bot_impure(a):
    """Not bot-pure, read off the conjunctions of ``a`` directly."""
    if formula.nu(a) == BOT:
        return True
    for node in formula.walk(a):
        if node.kind == formula.AND:
            for unit_side, other in ((node.left, node.right), (node.right, node.left)):
                if formula.nu(unit_side) == BOT and not formula.is_letterless(other):
                    return True
    return False


def _top_impure(a):
    if formula.nu(a) == TOP:
        return True
    for node in formula.walk(a):
        if node.kind == formula.OR:
            for unit_side, other in ((node.left, node.right), (node.right, node.left)):
                if formula.nu(unit_side) == TOP and not formula.is_letterless(other):
                    return True
    return False


class FormulaTest(smi_test_helpers.SmiTestCase):
    def test_letters(self):
        self.assertEqual(formula.letters(BOT), collections.Counter())
        self.assertEqual(formula.letters(Or(p, And(q, p))), collections.Counter("ppq"))
        self.assertEqual(
            formula.letter_set(And(Or(p, s), Or(q, t))), frozenset(["p", "q", "s", "t"])
        )

    def test_bad_letter(self):
        for name in ("", "P", "1p", "bot", "top", "p-q"):
            with self.assertRaises(formula.BadLetter):
                Letter(name)
        self.assertEqual(Letter("p_1_2_1").name, "p_1_2_1")

    def test_nu(self):
        self.assertEqual(formula.nu(Or(p, BOT)), p)
        self.assertEqual(formula.nu(And(BOT, BOT)), BOT)
        self.assertEqual(formula.nu(Or(And(p, TOP), And(BOT, BOT))), p)
        self.assertEqual(formula.nu(p), p)
        self.assertEqual(formula.nu(Or(TOP, TOP)), TOP)
        self.assertEqual(formula.nu(And(p, BOT)), And(p, BOT))

    def test_purity(self):
        self.assertEqual(formula.purity(BOT), formula.Purity(False, True))
        self.assertEqual(formula.purity(And(p, BOT)), formula.Purity(False, True))
        self.assertEqual(formula.purity(Or(p, BOT)), formula.Purity(True, True))
        self.assertTrue(formula.purity(Or(p, BOT)).pure)
        self.assertEqual(formula.purity(Or(p, TOP)), formula.Purity(True, False))

    def test_is_diversified(self):
        self.assertFalse(formula.is_diversified(Or(p, p)))
        self.assertTrue(formula.is_diversified(Or(And(p, q), r)))
        self.assertTrue(formula.is_diversified(Or(BOT, BOT)))

    def test_render(self):
        a = Or(And(p, q), And(s, t))
        self.assertEqual(formula.render(a), "(p /\\ q) \\/ (s /\\ t)")
        self.assertEqual(formula.render(Or(p, Or(q, r))), "p \\/ (q \\/ r)")
        self.assertEqual(formula.render(Or(Or(p, q), r)), "p \\/ q \\/ r")
        self.assertEqual(formula.render(And(Or(p, BOT), TOP), unicode=True), "(p ∨ ⊥) ∧ ⊤")

    def test_sort_key_orders_units_first(self):
        objs = [And(p, q), Or(p, q), q, p, TOP, BOT]
        self.assertEqual(
            sorted(objs, key=formula.sort_key), [BOT, TOP, p, q, Or(p, q), And(p, q)]
        )

    @settings(max_examples=1000, suppress_health_check=[HealthCheck.too_slow])
    @given(smi_test_helpers.formulas(), st.randoms(use_true_random=False))
    def test_nu_is_confluent(self, a, rng):
        self.assertEqual(smi_test_helpers.random_nu(a, rng.choice), formula.nu(a))

    @settings(max_examples=300)
    @given(smi_test_helpers.formulas())
    def test_nu_is_idempotent(self, a):
        reduced = formula.nu(a)
        self.assertEqual(formula.nu(reduced), reduced)
        self.assertEqual(list(smi_test_helpers.redexes(reduced)), [])
        if formula.is_letterless(a):
            self.assertIn(reduced, (BOT, TOP))

    @settings(max_examples=500)
    @given(smi_test_helpers.formulas())
    def test_purity_by_subformulae(self, a):
        purity = formula.purity(a)
        self.assertEqual(not purity.bot_pure, _bot_impure(a))
        self.assertEqual(not purity.top_pure, _top_impure(a))

    @settings(max_examples=500)
    @given(smi_test_helpers.formulas())
    def test_strict_purity_agrees(self, a):
        self.assertEqual(formula.purity(a), strict.purity(strict.to_strict_object(a)))

    @settings(max_examples=500)
    @given(smi_test_helpers.formulas())
    def test_nu_congruent_on_fragment(self, a):
        if not (formula.is_letterless(a) or formula.purity(a).pure):
            return
        self.assertEqual(
            strict.to_strict_object(formula.nu(a)),
            strict.nu(strict.to_strict_object(a)),
        )


if __name__ == "__main__":
    unittest.main()
