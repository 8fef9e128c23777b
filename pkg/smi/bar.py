# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
The (n,m)-iterated reduced bar construction over M^st.

A tuple object is a k_1 x ... x k_{n+m} array of strict objects.  A product
of (Delta+)^op arrows acts on it one coordinate at a time: coordinate i
tensors the fibers of hj(f_i) with \\/ and bot when i <= n, and with /\\ and
top otherwise.  The construction is a lax functor; ``omega`` builds its
comparison g* f* -> (g f)* cell by cell and ``lax_check`` verifies the
associativity square.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import itertools
import logging
import typing
from dataclasses import dataclass

import numpy as np

from smi import SmiError, decision, formula, simplicial, strict, terms, unit_norm
from smi.formula import AND, OR


logger = logging.getLogger("smi")


class Error(SmiError):
    pass


class ArityMismatch(Error):
    pass


class ShapeMismatch(Error):
    pass


class NotComposable(Error):
    pass


class CoherenceGuardFailed(Error):
    pass


class DuplicateLetters(Error):
    pass


@dataclass(frozen=True)
class Shape(object):
    n: int
    m: int
    sizes: typing.Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(self.sizes))
        if self.n < 0 or self.m < 0 or self.n + self.m < 1:
            raise ShapeMismatch("Need n + m >= 1, got n=%d m=%d" % (self.n, self.m))
        if len(self.sizes) != self.n + self.m:
            raise ShapeMismatch(
                "%d sizes for n + m = %d" % (len(self.sizes), self.n + self.m)
            )
        if any(size < 0 for size in self.sizes):
            raise ShapeMismatch("Negative size in %s" % (self.sizes,))

    @property
    def count(self):
        return int(np.prod(self.sizes, dtype=np.int64))

    def op(self, i):
        """The connective of coordinate ``i`` (1-based)."""
        return OR if i <= self.n else AND

    @property
    def indices(self):
        """1-based multi-indices in lexicographic order."""
        return list(itertools.product(*[range(1, size + 1) for size in self.sizes]))

    def resized(self, i, size):
        sizes = list(self.sizes)
        sizes[i - 1] = size
        return Shape(self.n, self.m, sizes)


@dataclass(frozen=True)
class TupleObject(object):
    shape: Shape
    cells: typing.Tuple[typing.Any, ...]

    def __post_init__(self):
        object.__setattr__(self, "cells", tuple(self.cells))
        if len(self.cells) != self.shape.count:
            raise ShapeMismatch(
                "%d cells for shape %s" % (len(self.cells), self.shape.sizes)
            )

    def as_array(self):
        return _to_array(self.cells, self.shape.sizes)

    @property
    def indices(self):
        return self.shape.indices

    def render(self, unicode=False):
        return [formula.render(cell, unicode) for cell in self.cells]


@dataclass(frozen=True)
class ProductMap(object):
    components: typing.Tuple[simplicial.SimplexMap, ...]

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))

    def __str__(self):
        return " ; ".join(str(f) for f in self.components)


class OmegaWitness(typing.NamedTuple):
    source: TupleObject
    target: TupleObject
    cells: typing.Tuple[typing.Any, ...]


class CoherenceReport(typing.NamedTuple):
    ok: bool
    condition: typing.Optional[str] = None
    cells: typing.Tuple[typing.Any, ...] = ()

    def __bool__(self):
        return self.ok


class LaxReport(typing.NamedTuple):
    commutes: bool
    cells: typing.Tuple[typing.Any, ...]
    coherent: bool


def _to_array(cells, sizes):
    array = np.empty(len(cells), dtype=object)
    for k, cell in enumerate(cells):
        array[k] = cell
    return array.reshape(sizes)


def _join(kind, objs):
    return strict.vee(*objs) if kind == OR else strict.wedge(*objs)


def fiber_tensor_eval(h, inputs, op):
    """Output j is the tensor of the inputs in the fiber of j, in order."""
    if len(inputs) != h.src:
        raise ArityMismatch("%d inputs for a map out of %d" % (len(inputs), h.src))
    return [_join(op, [inputs[x] for x in h.fiber(j)]) for j in range(h.dst)]


def _fiber_terms(h, inputs, op):
    return [
        terms.fold(op, [inputs[x] for x in h.fiber(j)]) for j in range(h.dst)
    ]


def _coord_apply(shape, i, f_i, cells, fold):
    if f_i.src != shape.sizes[i - 1]:
        raise ShapeMismatch(
            "Coordinate %d has size %d, map %s starts at %d"
            % (i, shape.sizes[i - 1], f_i, f_i.src)
        )
    h = simplicial.hj(f_i)
    op = shape.op(i)
    array = np.moveaxis(_to_array(cells, shape.sizes), i - 1, -1)
    outer = array.shape[:-1]
    result = np.empty(outer + (f_i.dst,), dtype=object)
    for index in np.ndindex(*outer):
        for j, value in enumerate(fold(h, list(array[index]), op)):
            result[index + (j,)] = value
    result = np.moveaxis(result, -1, i - 1)
    return shape.resized(i, f_i.dst), tuple(result.reshape(-1))


def coord_action(shape, i, f_i, t):
    if t.shape != shape:
        raise ShapeMismatch("Tuple of shape %s, expected %s" % (t.shape.sizes, shape.sizes))
    new_shape, cells = _coord_apply(shape, i, f_i, t.cells, fiber_tensor_eval)
    return TupleObject(new_shape, cells)


def _check_arity(maps, shape):
    if len(maps.components) != len(shape.sizes):
        raise ShapeMismatch(
            "%d components for %d coordinates" % (len(maps.components), len(shape.sizes))
        )


def bar_eval(maps, t):
    """Coordinate 1 first, then 2, up to n+m."""
    _check_arity(maps, t.shape)
    for i, f_i in enumerate(maps.components, 1):
        t = coord_action(t.shape, i, f_i, t)
    return t


def bar_eval_arrows(maps, shape, cells):
    """The action on a tuple of arrows; empty fibers give unit identities."""
    _check_arity(maps, shape)
    for i, f_i in enumerate(maps.components, 1):
        shape, cells = _coord_apply(shape, i, f_i, cells, _fiber_terms)
    return cells


def compose_product(g, f):
    if len(g.components) != len(f.components):
        raise NotComposable(
            "%d components after %d" % (len(g.components), len(f.components))
        )
    try:
        return ProductMap(
            [simplicial.compose_simplex(gi, fi) for gi, fi in zip(g.components, f.components)]
        )
    except simplicial.ObjectMismatch as e:
        raise NotComposable(str(e)) from None


def fresh_letters(shape, prefix="p"):
    return TupleObject(
        shape,
        [
            formula.Letter("%s_%s" % (prefix, "_".join(map(str, index))))
            for index in shape.indices
        ],
    )


# Coherence of tuple objects


def is_nm_coherent(t):
    shape = t.shape
    indices = shape.indices
    bad = tuple(index for index, cell in zip(indices, t.cells) if not decision.in_fragment(cell))
    if bad:
        return CoherenceReport(False, "pure-or-letterless", bad)
    owner = {}
    for index, cell in zip(indices, t.cells):
        for name in formula.letter_set(cell):
            if name in owner:
                return CoherenceReport(False, "disjoint-letters", (owner[name], index))
            owner[name] = index
    nus = dict(zip(indices, map(strict.nu, t.cells)))
    units = (formula.BOT, formula.TOP)
    # Cells sharing their /\ coordinates, then cells sharing their \/ coordinates.
    for condition, trigger, key in (
        ("top-in-or-block", formula.TOP, lambda index: index[shape.n :]),
        ("bot-in-and-block", formula.BOT, lambda index: index[: shape.n]),
    ):
        groups = {}
        for index in indices:
            groups.setdefault(key(index), []).append(index)
        for members in groups.values():
            if any(nus[index] == trigger for index in members):
                offending = tuple(index for index in members if nus[index] not in units)
                if offending:
                    return CoherenceReport(False, condition, offending)
    return CoherenceReport(True)


# The lax structure


def _check_letters(letters):
    names = [getattr(cell, "name", None) for cell in letters.cells]
    if None in names or len(set(names)) != len(names):
        raise DuplicateLetters("Witness letters must be distinct letters")


def omega(f, g, letters):
    """omega_{g,f}: g* f* -> (g f)* at a tuple of distinct letters."""
    _check_letters(letters)
    source = bar_eval(g, bar_eval(f, letters))
    target = bar_eval(compose_product(g, f), letters)
    cells = []
    for index, a, b in zip(target.indices, source.cells, target.cells):
        arrow = decision.canonical_arrow(a, b)
        if arrow is None or arrow is decision.UNDECIDED:
            raise CoherenceGuardFailed(
                "No canonical arrow %s -> %s at %s"
                % (formula.render(a), formula.render(b), index)
            )
        cells.append(unit_norm.present_interchange(arrow))
    logger.debug("omega on shape %s: %d cells", target.shape.sizes, len(cells))
    return OmegaWitness(source, target, tuple(cells))


def _instantiate(witness, mapping):
    return OmegaWitness(
        TupleObject(
            witness.source.shape,
            [strict.substitute(cell, mapping) for cell in witness.source.cells],
        ),
        TupleObject(
            witness.target.shape,
            [strict.substitute(cell, mapping) for cell in witness.target.cells],
        ),
        tuple(terms.substitute(cell, mapping) for cell in witness.cells),
    )


def lax_check(f, g, h, letters):
    """Both legs h* g* f* -> (h g f)* of the associativity square, cell by cell."""
    _check_letters(letters)
    gf, hg = compose_product(g, f), compose_product(h, g)
    image = bar_eval(f, letters)
    fresh = fresh_letters(image.shape, prefix="q")
    mapping = {cell.name: value for cell, value in zip(fresh.cells, image.cells)}
    outer = _instantiate(omega(g, h, fresh), mapping)
    left = omega(f, hg, letters)
    inner = omega(f, g, letters)
    right = omega(gf, h, letters)
    moved = bar_eval_arrows(h, inner.target.shape, inner.cells)
    verdicts = []
    for first, second, third, fourth in zip(outer.cells, left.cells, moved, right.cells):
        equality = decision.equal_arrows(
            terms.compose(second, first), terms.compose(fourth, third)
        )
        verdicts.append(equality.verdict)
    tuples = [
        image,
        inner.source,
        outer.source,
        outer.target,
        inner.target,
        right.source,
        right.target,
    ]
    coherent = all(is_nm_coherent(t) for t in tuples)
    commutes = all(v is decision.Verdict.EQUAL_BY_COHERENCE for v in verdicts)
    logger.debug("lax check: commutes=%s coherent=%s", commutes, coherent)
    return LaxReport(commutes, tuple(verdicts), coherent)
