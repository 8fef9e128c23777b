# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

from __future__ import absolute_import, division, print_function, unicode_literals

import random
import unittest

from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st
from smi import bar, parser, simplicial, terms
from smi.bar import ProductMap, Shape, TupleObject
from smi.formula import BOT, TOP, Letter
from smi.simplicial import PartialMonotoneMap
from smi.strict import AndList, OrList
from smi.tests import smi_test_helpers
from smi.tests.smi_test_helpers import BOT_BOT, TOP_TOP


p, q = map(Letter, "pq")

SHAPE = Shape(2, 1, (1, 2, 2))
F = "[0 1 3]@1->2 ; [0 1 2 2]@2->1 ; [0 1 1 3]@2->2"
G = "[0 1 1 3]@2->2 ; [0 1 3]@1->2 ; [0 1 2 3]@2->2"

A, B, C, D = (Letter(name) for name in ("p_1_1_1", "p_1_1_2", "p_1_2_1", "p_1_2_2"))


@st.composite
def shapes(draw, max_coordinates=4, max_size=3, max_count=24):
    n = draw(st.integers(min_value=0, max_value=max_coordinates))
    m = draw(st.integers(min_value=1 if n == 0 else 0, max_value=max_coordinates - n))
    sizes = draw(
        st.lists(
            st.integers(min_value=0, max_value=max_size), min_size=n + m, max_size=n + m
        ).filter(lambda sizes: Shape(n, m, sizes).count <= max_count)
    )
    return Shape(n, m, sizes)


@st.composite
def product_maps(draw, sizes, max_size=2):
    """A product map out of ``sizes`` and the sizes it lands on."""
    components = []
    for size in sizes:
        target = draw(st.integers(min_value=0, max_value=max_size))
        homs = simplicial.enumerate_homs(simplicial.DELTA2, size, target)
        components.append(draw(st.sampled_from(homs)))
    return ProductMap(components), tuple(f.dst for f in components)


@st.composite
def composable_triples(draw):
    shape = draw(shapes(max_coordinates=3, max_size=2, max_count=16))
    f, sizes = draw(product_maps(shape.sizes))
    g, sizes = draw(product_maps(sizes))
    h, _ = draw(product_maps(sizes))
    return shape, f, g, h


@st.composite
def generator_runs(draw):
    """A shape and a few generators, each acting on one coordinate."""
    shape = draw(shapes())
    sizes = list(shape.sizes)
    steps = []
    for _ in range(draw(st.integers(min_value=0, max_value=4))):
        i = draw(st.integers(min_value=1, max_value=len(sizes)))
        k = sizes[i - 1]
        kinds = ["s"] if k == 0 else ["d", "s"]
        kind = draw(st.sampled_from(kinds))
        if kind == "d":
            f = simplicial.gen("d", k, draw(st.integers(min_value=0, max_value=k)))
        else:
            f = simplicial.gen("s", k + 1, draw(st.integers(min_value=0, max_value=k)))
        sizes[i - 1] = f.dst
        if Shape(shape.n, shape.m, sizes).count > 24:
            break
        steps.append((i, f))
    return shape, steps


class ShapeTest(smi_test_helpers.SmiTestCase):
    def test_shape(self):
        self.assertEqual(SHAPE.count, 4)
        self.assertEqual(SHAPE.indices[:2], [(1, 1, 1), (1, 1, 2)])
        self.assertEqual((SHAPE.op(2), SHAPE.op(3)), ("or", "and"))
        self.assertEqual(Shape(1, 1, (0, 3)).count, 0)
        for n, m, sizes in ((0, 0, ()), (1, 1, (1,)), (1, 0, (-1,))):
            with self.assertRaises(bar.ShapeMismatch):
                Shape(n, m, sizes)
        with self.assertRaises(bar.ShapeMismatch):
            TupleObject(SHAPE, [p])

    def test_fresh_letters(self):
        letters = bar.fresh_letters(SHAPE)
        self.assertEqual(letters.cells, (A, B, C, D))
        self.assertEqual(letters.as_array().shape, (1, 2, 2))
        self.assertEqual(bar.fresh_letters(SHAPE, "q").cells[0], Letter("q_1_1_1"))


class EvalTest(smi_test_helpers.SmiTestCase):
    def test_fiber_tensor_eval(self):
        h = PartialMonotoneMap(4, 3, [None, None, 2, 2])
        self.assertEqual(
            bar.fiber_tensor_eval(h, [A, B, C, D], "or"), [BOT, BOT, OrList([C, D])]
        )
        self.assertEqual(
            bar.fiber_tensor_eval(h, [A, B, C, D], "and"), [TOP, TOP, AndList([C, D])]
        )
        with self.assertRaises(bar.ArityMismatch):
            bar.fiber_tensor_eval(h, [A, B, C], "or")

    def test_worked_example(self):
        letters = bar.fresh_letters(SHAPE)
        f, g = parser.parse_productmap(F), parser.parse_productmap(G)
        image = bar.bar_eval(f, letters)
        self.assertEqual(image.shape.sizes, (2, 1, 2))
        self.assertEqual(image.cells, (AndList([A, B]), TOP, BOT_BOT, TOP))
        moved = bar.bar_eval(g, TupleObject(image.shape, (A, B, C, D)))
        self.assertEqual(moved.cells, (OrList([A, C]), OrList([B, D])) + (BOT,) * 6)
        self.assertEqual(
            bar.bar_eval(g, image).cells,
            (OrList([AndList([A, B]), BOT_BOT]), TOP_TOP) + (BOT,) * 6,
        )
        gf = bar.compose_product(g, f)
        self.assertEqual(str(gf), "[0 1 3]@1->2 ; [0 1 3 3]@2->2 ; [0 1 1 3]@2->2")
        self.assertEqual(
            bar.bar_eval(gf, letters).cells, (AndList([A, B]), TOP, BOT_BOT, TOP) * 2
        )

    def test_coord_action(self):
        letters = bar.fresh_letters(SHAPE)
        moved = bar.coord_action(SHAPE, 3, simplicial.gen("d", 2, 1), letters)
        self.assertEqual(moved.shape.sizes, (1, 2, 1))
        self.assertEqual(moved.cells, (AndList([A, B]), AndList([C, D])))
        with self.assertRaises(bar.ShapeMismatch):
            bar.coord_action(SHAPE, 1, simplicial.gen("d", 2, 1), letters)

    def test_bad_products(self):
        f = parser.parse_productmap(F)
        with self.assertRaises(bar.NotComposable):
            bar.compose_product(f, f)
        with self.assertRaises(bar.NotComposable):
            bar.compose_product(ProductMap(f.components[:2]), f)
        with self.assertRaises(bar.ShapeMismatch):
            bar.bar_eval(ProductMap(f.components[:2]), bar.fresh_letters(SHAPE))

    def test_arrows(self):
        cells = bar.bar_eval_arrows(
            parser.parse_productmap(F), SHAPE, [terms.Kappa()] + [terms.Id(p)] * 3
        )
        self.assertEqual(len(cells), 4)
        self.assertEqual(cells[0], terms.And(terms.Kappa(), terms.Id(p)))
        self.assertEqual(cells[1], terms.Id(TOP))


class CoherenceTest(smi_test_helpers.SmiTestCase):
    def test_conditions(self):
        report = bar.is_nm_coherent(TupleObject(Shape(1, 1, (2, 1)), [TOP, p]))
        self.assertFalse(report)
        self.assertEqual(report.condition, "top-in-or-block")
        self.assertEqual(report.cells, ((2, 1),))
        report = bar.is_nm_coherent(TupleObject(Shape(1, 1, (1, 2)), [BOT, p]))
        self.assertEqual((report.condition, report.cells), ("bot-in-and-block", ((1, 2),)))
        report = bar.is_nm_coherent(TupleObject(Shape(1, 1, (2, 1)), [p, p]))
        self.assertEqual(report.condition, "disjoint-letters")
        report = bar.is_nm_coherent(TupleObject(Shape(1, 0, (2,)), [AndList([p, BOT]), q]))
        self.assertEqual((report.condition, report.cells), ("pure-or-letterless", ((1,),)))
        self.assertTrue(bar.is_nm_coherent(TupleObject(Shape(1, 1, (2, 1)), [TOP, BOT])))
        self.assertTrue(bar.is_nm_coherent(bar.fresh_letters(SHAPE)))

    @settings(
        max_examples=200,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
    )
    @given(generator_runs())
    def test_images_of_letters_are_coherent(self, run):
        shape, steps = run
        t = bar.fresh_letters(shape)
        for i, f in steps:
            t = bar.coord_action(t.shape, i, f, t)
            report = bar.is_nm_coherent(t)
            self.assertTrue(report, (str(f), i, report))

    def test_many_generator_applications_stay_coherent(self):
        rng = random.Random(0)
        applied = 0
        while applied < 500:
            n = rng.randint(0, 4)
            m = rng.randint(1 if n == 0 else 0, 4 - n)
            shape = Shape(n, m, [rng.randint(0, 3) for _ in range(n + m)])
            if shape.count > 24:
                continue
            t = bar.fresh_letters(shape)
            for _ in range(rng.randint(1, 4)):
                i = rng.randint(1, n + m)
                k = t.shape.sizes[i - 1]
                if k == 0 or rng.random() < 0.5:
                    f = simplicial.gen("s", k + 1, rng.randint(0, k))
                else:
                    f = simplicial.gen("d", k, rng.randint(0, k))
                if t.shape.resized(i, f.dst).count > 24:
                    break
                t = bar.coord_action(t.shape, i, f, t)
                applied += 1
                report = bar.is_nm_coherent(t)
                self.assertTrue(report, (str(f), i, report))
        self.assertGreaterEqual(applied, 500)


class OmegaTest(smi_test_helpers.SmiTestCase):
    def test_worked_example(self):
        letters = bar.fresh_letters(SHAPE)
        f, g = parser.parse_productmap(F), parser.parse_productmap(G)
        witness = bar.omega(f, g, letters)
        self.assertEqual(witness.cells[0], terms.Ck(A, B, BOT, BOT))
        self.assertEqual(
            [terms.render_term(cell) for cell in witness.cells],
            ["ck(p_1_1_1;p_1_1_2;bot;bot)", "w_or_fw"] + ["w_and_bw", "kappa"] * 3,
        )
        for cell, a, b in zip(witness.cells, witness.source.cells, witness.target.cells):
            self.assertTyping(cell, a, b)

    def test_letters_must_be_distinct(self):
        f = parser.parse_productmap(F)
        with self.assertRaises(bar.DuplicateLetters):
            bar.omega(f, f, TupleObject(SHAPE, [p, p, q, q]))

    def test_lax_check_with_an_identity(self):
        f, g = parser.parse_productmap(F), parser.parse_productmap(G)
        h = ProductMap([simplicial.identity_simplex(2)] * 3)
        report = bar.lax_check(f, g, h, bar.fresh_letters(SHAPE))
        self.assertTrue(report.commutes)
        self.assertTrue(report.coherent)
        self.assertEqual(len(report.cells), 8)

    def test_interchange_cell(self):
        f = parser.parse_productmap("id@1 ; id@2 ; d(1)@2")
        g = parser.parse_productmap("id@1 ; d(1)@2 ; id@1")
        witness = bar.omega(f, g, bar.fresh_letters(SHAPE))
        self.assertEqual(witness.cells, (terms.Ck(A, B, C, D),))
        self.assertEqual(
            terms.render_term(witness.cells[0]), "ck(p_1_1_1;p_1_1_2;p_1_2_1;p_1_2_2)"
        )

    def test_symmetry_cell_in_a_pure_block(self):
        f = parser.parse_productmap("id@2 ; d(1)@2")
        g = parser.parse_productmap("d(1)@2 ; id@1")
        witness = bar.omega(f, g, bar.fresh_letters(Shape(2, 0, (2, 2))))
        self.assertEqual(
            [terms.render_term(cell) for cell in witness.cells],
            ["id(p_1_1) | c_or(p_1_2;p_2_1) | id(p_2_2)"],
        )

    def test_lax_check_through_interchanges(self):
        letters = bar.fresh_letters(Shape(2, 1, (2, 2, 2)))
        f = parser.parse_productmap("id@2 ; id@2 ; d(1)@2")
        g = parser.parse_productmap("id@2 ; d(1)@2 ; id@1")
        h = parser.parse_productmap("d(1)@2 ; id@1 ; id@1")
        witness = bar.omega(f, g, letters)
        self.assertEqual(len(witness.cells), 2)
        self.assertEqual([terms.ck_count(cell) for cell in witness.cells], [1, 1])
        report = bar.lax_check(f, g, h, letters)
        self.assertTrue(report.commutes)
        self.assertTrue(report.coherent)
        self.assertEqual(len(report.cells), 1)

    @settings(
        max_examples=100,
        deadline=None,
        suppress_health_check=[HealthCheck.too_slow, HealthCheck.filter_too_much],
    )
    @given(composable_triples())
    def test_associativity_square(self, triple):
        shape, f, g, h = triple
        report = bar.lax_check(f, g, h, bar.fresh_letters(shape))
        self.assertTrue(report.commutes, (str(f), str(g), str(h)))
        self.assertTrue(report.coherent)


if __name__ == "__main__":
    unittest.main()
