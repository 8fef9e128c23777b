# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Unit elimination in M^st.

``unit_iso`` builds the directed isomorphism A -> nu(A) out of forward w
generators.  ``unit_reduce`` turns an arrow between pure objects into a
unit-free arrow between their nu-images, one developed factor at a time.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import logging
import typing

from smi import SmiError, formula, strict, terms
from smi.formula import AND, BOT, OR, TOP
from smi.terms import FW, Ck, Id, Kappa, WAndBot, WOrTop


logger = logging.getLogger("smi")


class Error(SmiError):
    pass


class NotLetterless(Error):
    pass


class NotPure(Error):
    pass


class ReductionInvariantError(Error):
    """A reduced factor disagrees with nu of its endpoints."""


def _unit(kind):
    return BOT if kind == OR else TOP


def _absorbing(kind):
    return TOP if kind == OR else BOT


def _join(kind, objs):
    return strict.vee(*objs) if kind == OR else strict.wedge(*objs)


def _combinator(kind):
    return terms.Or if kind == OR else terms.And


def unit_iso_factors(a):
    """Single-head factors of i_A, innermost-leftmost redex first."""
    if a.kind not in (OR, AND):
        return []
    factors = []
    children = list(a.children)
    for k, child in enumerate(a.children):
        for factor in unit_iso_factors(child):
            factors.append(terms.in_context(a.kind, children[:k], factor, children[k + 1 :]))
        children[k] = strict.nu(child)
    current = _join(a.kind, children)
    absorbing = _absorbing(a.kind)
    head = WOrTop(FW) if a.kind == OR else WAndBot(FW)
    if current.kind == a.kind and all(c == absorbing for c in current.children):
        count = len(current.children)
        while count > 1:
            rest = [absorbing] * (count - 2)
            factors.append(terms.in_context(a.kind, [], head, rest))
            count -= 1
    return factors


def unit_iso(a):
    return terms.chain(unit_iso_factors(a), a)


def inverse_unit_iso_factors(a):
    return [terms.invert(factor) for factor in reversed(unit_iso_factors(a))]


def inverse_unit_iso(a):
    """inv(i_A): nu(A) -> A."""
    return terms.chain(inverse_unit_iso_factors(a), strict.nu(a))


def letterless_arrow(a, b):
    """The canonical arrow between letterless objects, or None."""
    for obj in (a, b):
        if not formula.is_letterless(obj):
            raise NotLetterless("'%s' contains letters" % formula.render(obj))
    source, target = strict.nu(a), strict.nu(b)
    if source == TOP and target == BOT:
        return None
    middle = [Kappa()] if source == BOT and target == TOP else []
    return terms.chain(
        unit_iso_factors(a) + middle + inverse_unit_iso_factors(b), a
    )


def is_unit_free(obj):
    return not (formula.occurs(obj, "bot") or formula.occurs(obj, "top"))


# Reduction of pure arrows

ISO = "iso"
ARROW = "arrow"
KAPPA = "kappa"


class _Part(typing.NamedTuple):
    """A factor seen through nu: an iso, a unit-free arrow or a kappa."""

    kind: str
    source: typing.Any
    target: typing.Any
    term: typing.Any = None


def _nu_typing(term):
    typed = terms.typecheck(term)
    return strict.nu(typed.source), strict.nu(typed.target)


def _unit_indexed(term, source, target):
    if source == target:
        return _Part(ISO, source, target)
    if source == BOT and target == TOP:
        return _Part(KAPPA, source, target)
    raise ReductionInvariantError(
        "'%s' relates '%s' and '%s'"
        % (term, formula.render(source), formula.render(target))
    )


def _reduce_leaf(term):
    source, target = _nu_typing(term)
    if isinstance(term, Kappa):
        return _Part(KAPPA, source, target)
    if isinstance(term, (terms.COr, terms.CAnd, Ck)):
        indices = [strict.nu(obj) for obj in term.objects]
        if all(is_unit_free(index) for index in indices):
            return _Part(ARROW, source, target, type(term)(*indices))
    return _unit_indexed(term, source, target)


def _reduce(term):
    if not isinstance(term, (terms.Or, terms.And)):
        return _reduce_leaf(term)
    kind = OR if isinstance(term, terms.Or) else AND
    left, right = _reduce(term.left), _reduce(term.right)
    source = strict.nu(_join(kind, [left.source, right.source]))
    target = strict.nu(_join(kind, [left.target, right.target]))
    if left.kind == ISO and right.kind == ISO:
        return _Part(ISO, source, target)
    if left.kind != ISO and right.kind != ISO:
        raise ReductionInvariantError("'%s' is not single-headed" % term)
    head, other = (left, right) if left.kind != ISO else (right, left)
    value = other.source
    if head.kind == KAPPA:
        if value == _unit(kind):
            return _Part(KAPPA, source, target)
        if value == _absorbing(kind):
            return _Part(ISO, source, target)
    elif head.kind == ARROW:
        if value == _unit(kind):
            return _Part(ARROW, source, target, head.term)
        if is_unit_free(value):
            cls = _combinator(kind)
            if head is left:
                reduced = cls(head.term, Id(value))
            else:
                reduced = cls(Id(value), head.term)
            return _Part(ARROW, source, target, reduced)
    raise ReductionInvariantError(
        "Cannot reduce '%s' next to '%s'" % (term, formula.render(value))
    )


def unit_reduce(f):
    """f: A -> B with A and B pure, as a unit-free arrow nu(A) -> nu(B)."""
    typed = terms.typecheck(f)
    for obj in (typed.source, typed.target):
        if not strict.purity(obj).pure:
            raise NotPure("'%s' is not pure" % formula.render(obj))
    factors = terms.develop(f)
    reduced = []
    for factor in factors:
        part = _reduce(factor)
        expected = _nu_typing(factor)
        if (part.source, part.target) != expected:
            raise ReductionInvariantError("Factor '%s' lost its endpoints" % factor)
        if part.kind == KAPPA:
            raise ReductionInvariantError("Bare kappa factor '%s' between pure objects" % factor)
        if part.kind == ARROW:
            reduced.append(part.term)
    logger.debug("unit_reduce kept %d of %d factors", len(reduced), len(factors))
    return terms.chain(reduced, strict.nu(typed.source))


def present_interchange(f):
    """Rewrite unit-interchange w factors into their intermutation form."""
    if isinstance(f, terms.Comp):
        return terms.Comp(present_interchange(f.g), present_interchange(f.f))
    if not isinstance(f, (terms.Or, terms.And)):
        return f
    left, right = present_interchange(f.left), present_interchange(f.right)
    if isinstance(f, terms.Or):
        if isinstance(left, Id) and right == WAndBot(FW):
            x0, rest = _split(left.obj, AND)
            if x0 is not None:
                return Ck(x0, rest, BOT, BOT)
        if left == WAndBot(FW) and isinstance(right, Id):
            x0, rest = _split(right.obj, AND)
            if x0 is not None:
                return Ck(BOT, BOT, x0, rest)
        return terms.Or(left, right)
    if isinstance(left, Id) and right == WOrTop(terms.BW):
        x0, rest = _split(left.obj, OR)
        if x0 is not None:
            return Ck(x0, TOP, rest, TOP)
    if left == WOrTop(terms.BW) and isinstance(right, Id):
        x0, rest = _split(right.obj, OR)
        if x0 is not None:
            return Ck(TOP, x0, TOP, rest)
    return terms.And(left, right)


def _split(obj, kind):
    if obj.kind != kind or formula.is_letterless(obj):
        return None, None
    return obj.children[0], _join(kind, obj.children[1:])
