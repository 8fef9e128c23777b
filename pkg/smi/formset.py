# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Form multisets: unit-free formulae modulo associativity and commutativity.

Bag children are kept sorted by ``formula.sort_key`` so that equality and
hashing are syntactic.  A form set is a form multiset whose letters are
pairwise distinct.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import functools
import itertools
import typing
from dataclasses import dataclass

from smi import formula
from smi.formula import AND, OR, Letter, sort_key


class Error(formula.Error):
    pass


class UnitPresent(Error):
    pass


class AllLettersDeleted(Error):
    pass


class MalformedBag(Error):
    pass


def _check(children, kind):
    if len(children) < 2:
        raise MalformedBag("%s bag needs at least two children" % kind)
    for child in children:
        if child.kind == kind:
            raise MalformedBag("%s bag child of the same kind" % kind)
        if formula.is_unit(child):
            raise UnitPresent("Units are not form multisets: '%s'" % child)


@dataclass(frozen=True)
class OrBag(object):
    children: typing.Tuple[typing.Any, ...]

    kind: typing.ClassVar[str] = OR
    binary: typing.ClassVar[bool] = False

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(sorted(self.children, key=sort_key)))
        _check(self.children, OR)

    def __str__(self):
        return formula.render(self)


@dataclass(frozen=True)
class AndBag(object):
    children: typing.Tuple[typing.Any, ...]

    kind: typing.ClassVar[str] = AND
    binary: typing.ClassVar[bool] = False

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(sorted(self.children, key=sort_key)))
        _check(self.children, AND)

    def __str__(self):
        return formula.render(self)


def _bag(objs, kind, cls):
    flat = []
    for obj in objs:
        if formula.is_unit(obj):
            raise UnitPresent("Unit '%s' in a form multiset" % obj)
        if obj.kind == kind:
            flat.extend(obj.children)
        else:
            flat.append(obj)
    if not flat:
        raise AllLettersDeleted("Empty %s bag" % kind)
    if len(flat) == 1:
        return flat[0]
    return cls(flat)


def or_bag(*objs):
    return _bag(objs, OR, OrBag)


def and_bag(*objs):
    return _bag(objs, AND, AndBag)


class SaiAlgebra(object):
    """Connectives of A^st.  There are no units."""

    name = "sai"

    @property
    def bot(self):
        raise UnitPresent("bot is not an object of A^st")

    @property
    def top(self):
        raise UnitPresent("top is not an object of A^st")

    @staticmethod
    def vee(left, right):
        return or_bag(left, right)

    @staticmethod
    def wedge(left, right):
        return and_bag(left, right)


SAI = SaiAlgebra()


def to_form_multiset(a):
    """Accepts formulae, strict objects and form multisets."""
    if a.kind == "letter":
        return a
    if a.kind == OR:
        return or_bag(*[to_form_multiset(child) for child in a.children])
    if a.kind == AND:
        return and_bag(*[to_form_multiset(child) for child in a.children])
    raise UnitPresent("Unit '%s' in a form multiset" % a)


def is_form_set(x):
    return formula.is_diversified(x)


@dataclass(frozen=True, eq=False)
class CkIndex(object):
    """Index [S,T,U,V] of an intermutation, compared up to its symmetries."""

    s: typing.Any
    t: typing.Any
    u: typing.Any
    v: typing.Any

    def variants(self):
        s, t, u, v = self.s, self.t, self.u, self.v
        return ((s, t, u, v), (t, s, v, u), (u, v, s, t), (v, u, t, s))

    def canonical(self):
        return min(self.variants(), key=lambda quad: tuple(map(sort_key, quad)))

    def __eq__(self, other):
        if not isinstance(other, CkIndex):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())


def delete_letters(x, deleted):
    """X^{-P}: drop the letters of P child-wise and re-flatten."""
    result = _delete(x, frozenset(deleted))
    if result is None:
        raise AllLettersDeleted("All letters of '%s' deleted" % x)
    return result


def _delete(x, deleted):
    if x.kind == "letter":
        return None if x.name in deleted else x
    kept = [c for c in (_delete(child, deleted) for child in x.children) if c is not None]
    if not kept:
        return None
    return or_bag(*kept) if x.kind == OR else and_bag(*kept)


def _set_partitions(items):
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        yield [[first]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1 :]


@functools.lru_cache(maxsize=None)
def _form_sets(names):
    if len(names) == 1:
        return (Letter(names[0]),)
    found = set()
    for kind, build in ((OR, or_bag), (AND, and_bag)):
        for partition in _set_partitions(list(names)):
            if len(partition) < 2:
                continue
            choices = [
                [x for x in _form_sets(tuple(block)) if x.kind != kind]
                for block in partition
            ]
            for children in itertools.product(*choices):
                found.add(build(*children))
    return tuple(sorted(found, key=sort_key))


def enumerate_form_sets(names):
    """Every form set whose letters are exactly ``names``."""
    names = tuple(sorted(set(names)))
    if not names:
        return []
    return list(_form_sets(names))
