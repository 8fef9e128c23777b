# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Strict objects: formulae modulo associativity and the unit laws
A = A\\/bot = bot\\/A = A/\\top = top/\\A.

Lists are flattened, keep their source order, never hold a child of their
own kind and never hold the unit of their own connective.  ``bot /\\ bot``
and ``top \\/ top`` are therefore distinct from ``bot`` and ``top``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import typing
from dataclasses import dataclass

from smi import formset, formula
from smi.formula import AND, BOT, OR, TOP, Bot, Letter, Top  # noqa: F401


class Error(formula.Error):
    pass


class MalformedList(Error):
    pass


def _check(children, kind, unit):
    if len(children) < 2:
        raise MalformedList("%s needs at least two children" % kind)
    for child in children:
        if child.kind == kind:
            raise MalformedList("%s child of the same kind" % kind)
        if child == unit:
            raise MalformedList("%s holds its own unit" % kind)


@dataclass(frozen=True)
class OrList(object):
    children: typing.Tuple[typing.Any, ...]

    kind: typing.ClassVar[str] = OR
    binary: typing.ClassVar[bool] = False

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        _check(self.children, OR, BOT)

    def __str__(self):
        return formula.render(self)


@dataclass(frozen=True)
class AndList(object):
    children: typing.Tuple[typing.Any, ...]

    kind: typing.ClassVar[str] = AND
    binary: typing.ClassVar[bool] = False

    def __post_init__(self):
        object.__setattr__(self, "children", tuple(self.children))
        _check(self.children, AND, TOP)

    def __str__(self):
        return formula.render(self)


def _join(objs, kind, unit, cls):
    flat = []
    for obj in objs:
        if obj == unit:
            continue
        if obj.kind == kind:
            flat.extend(obj.children)
        else:
            flat.append(obj)
    if not flat:
        return unit
    if len(flat) == 1:
        return flat[0]
    return cls(flat)


def vee(*objs):
    """The strict disjunction of already normal objects."""
    return _join(objs, OR, BOT, OrList)


def wedge(*objs):
    return _join(objs, AND, TOP, AndList)


class StrictAlgebra(object):
    name = "strict"
    bot = BOT
    top = TOP

    @staticmethod
    def vee(left, right):
        return vee(left, right)

    @staticmethod
    def wedge(left, right):
        return wedge(left, right)


STRICT = StrictAlgebra()


def to_strict_object(a):
    if a.kind == OR:
        return vee(*[to_strict_object(child) for child in a.children])
    if a.kind == AND:
        return wedge(*[to_strict_object(child) for child in a.children])
    return a


def to_formula(a):
    """The right-nested representative of a strict object."""
    if a.kind in (OR, AND):
        cls = formula.Or if a.kind == OR else formula.And
        result = to_formula(a.children[-1])
        for child in reversed(a.children[:-1]):
            result = cls(to_formula(child), result)
        return result
    return a


def nu(a):
    """Unit erasure evaluated child-wise.

    In an OrList bot results drop out and an all-top remainder collapses to
    top; an AndList is the dual.  On pure and letterless objects this is
    nu of any representative of ``a``.
    """
    if a.kind not in (OR, AND):
        return a
    unit, absorbing = (BOT, TOP) if a.kind == OR else (TOP, BOT)
    kept = [child for child in map(nu, a.children) if child != unit]
    if not kept:
        return unit
    if all(child == absorbing for child in kept):
        return absorbing
    return vee(*kept) if a.kind == OR else wedge(*kept)


def purity(a):
    reduced = nu(a)
    return formula.Purity(
        bot_pure=not formula.occurs(reduced, "bot"),
        top_pure=not formula.occurs(reduced, "top"),
    )


def substitute(a, mapping):
    """Replace letters by strict objects and renormalize."""
    if a.kind == "letter":
        return mapping.get(a.name, a)
    if a.kind == OR:
        return vee(*[substitute(child, mapping) for child in a.children])
    if a.kind == AND:
        return wedge(*[substitute(child, mapping) for child in a.children])
    return a


def to_form_multiset(a):
    """The form multiset of a unit-free strict object; list order is dropped."""
    return formset.to_form_multiset(a)
