# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Arrow terms of M, M^st and A^st.

One set of term classes serves all three flavors; what differs is the object
algebra used to type them (``formula.FREE``, ``strict.STRICT`` or
``formset.SAI``) and which index objects the generators carry.  Terms are
compared syntactically here.  Equality of arrows lives in ``decision``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import dataclasses
import functools
import logging
import typing
from dataclasses import dataclass

from smi import SmiError, formset, formula, strict
from smi.formula import AND, OR
from smi.strict import STRICT


logger = logging.getLogger("smi")

FW = "fw"
BW = "bw"
_FLIP = {FW: BW, BW: FW}


class Error(SmiError):
    pass


class CompositionMismatch(Error):
    def __init__(self, position, detail):
        self.position = tuple(position)
        self.detail = detail
        super(CompositionMismatch, self).__init__(
            "Composition mismatch at %s: %s" % ("/".join(self.position) or "root", detail)
        )


class BadDirection(Error):
    pass


class NotInvertible(Error):
    pass


class NotPermutationEquivalent(Error):
    pass


class Typing(typing.NamedTuple):
    source: typing.Any
    target: typing.Any


class _Generator(object):
    """Mixin for the primitive arrows.  ``OBJECTS`` names the index fields."""

    OBJECTS: typing.ClassVar[tuple] = ()
    NAME: typing.ClassVar[str] = ""

    def __post_init__(self):
        direction = getattr(self, "direction", None)
        if "direction" in self.__dataclass_fields__ and direction not in _FLIP:
            raise BadDirection("Direction must be fw or bw, not '%s'" % direction)

    @property
    def label(self):
        if "direction" in self.__dataclass_fields__:
            return "%s_%s" % (self.NAME, self.direction)
        return self.NAME

    @property
    def objects(self):
        return tuple(getattr(self, name) for name in self.OBJECTS)

    def __str__(self):
        return render_term(self)


@dataclass(frozen=True)
class Id(_Generator):
    obj: typing.Any

    OBJECTS = ("obj",)
    NAME = "id"


@dataclass(frozen=True)
class BOr(_Generator):
    direction: str
    a: typing.Any
    b: typing.Any
    c: typing.Any

    OBJECTS = ("a", "b", "c")
    NAME = "b_or"


@dataclass(frozen=True)
class BAnd(_Generator):
    direction: str
    a: typing.Any
    b: typing.Any
    c: typing.Any

    OBJECTS = ("a", "b", "c")
    NAME = "b_and"


@dataclass(frozen=True)
class COr(_Generator):
    a: typing.Any
    b: typing.Any

    OBJECTS = ("a", "b")
    NAME = "c_or"


@dataclass(frozen=True)
class CAnd(_Generator):
    a: typing.Any
    b: typing.Any

    OBJECTS = ("a", "b")
    NAME = "c_and"


@dataclass(frozen=True)
class DeltaOr(_Generator):
    direction: str
    a: typing.Any

    OBJECTS = ("a",)
    NAME = "d_or"


@dataclass(frozen=True)
class SigmaOr(_Generator):
    direction: str
    a: typing.Any

    OBJECTS = ("a",)
    NAME = "s_or"


@dataclass(frozen=True)
class DeltaAnd(_Generator):
    direction: str
    a: typing.Any

    OBJECTS = ("a",)
    NAME = "d_and"


@dataclass(frozen=True)
class SigmaAnd(_Generator):
    direction: str
    a: typing.Any

    OBJECTS = ("a",)
    NAME = "s_and"


@dataclass(frozen=True)
class WOrTop(_Generator):
    direction: str

    NAME = "w_or"


@dataclass(frozen=True)
class WAndBot(_Generator):
    direction: str

    NAME = "w_and"


@dataclass(frozen=True)
class Kappa(_Generator):
    NAME = "kappa"


@dataclass(frozen=True)
class Ck(_Generator):
    a: typing.Any
    b: typing.Any
    c: typing.Any
    d: typing.Any

    OBJECTS = ("a", "b", "c", "d")
    NAME = "ck"


@dataclass(frozen=True)
class Comp(object):
    """``g . f``: first f, then g."""

    g: typing.Any
    f: typing.Any

    def __str__(self):
        return render_term(self)


@dataclass(frozen=True)
class Or(object):
    left: typing.Any
    right: typing.Any

    def __str__(self):
        return render_term(self)


@dataclass(frozen=True)
class And(object):
    left: typing.Any
    right: typing.Any

    def __str__(self):
        return render_term(self)


GENERATORS = (
    Id,
    BOr,
    BAnd,
    COr,
    CAnd,
    DeltaOr,
    SigmaOr,
    DeltaAnd,
    SigmaAnd,
    WOrTop,
    WAndBot,
    Kappa,
    Ck,
)
ASSOCIATORS = (BOr, BAnd, DeltaOr, SigmaOr, DeltaAnd, SigmaAnd)


def is_generator(term):
    return isinstance(term, _Generator)


def leaves(term):
    """Generator occurrences, identities included, from left to right."""
    if isinstance(term, Comp):
        for leaf in leaves(term.f):
            yield leaf
        for leaf in leaves(term.g):
            yield leaf
    elif isinstance(term, (Or, And)):
        for leaf in leaves(term.left):
            yield leaf
        for leaf in leaves(term.right):
            yield leaf
    else:
        yield term


def heads(term):
    return [leaf for leaf in leaves(term) if not isinstance(leaf, Id)]


def ck_count(term):
    return sum(1 for leaf in leaves(term) if isinstance(leaf, Ck))


# Typing


def _fw(direction, source, target):
    return Typing(source, target) if direction == FW else Typing(target, source)


def generator_typing(term, algebra=STRICT):
    vee, wedge = algebra.vee, algebra.wedge
    if isinstance(term, Id):
        return Typing(term.obj, term.obj)
    if isinstance(term, BOr):
        a, b, c = term.objects
        return _fw(term.direction, vee(a, vee(b, c)), vee(vee(a, b), c))
    if isinstance(term, BAnd):
        a, b, c = term.objects
        return _fw(term.direction, wedge(a, wedge(b, c)), wedge(wedge(a, b), c))
    if isinstance(term, COr):
        return Typing(vee(term.a, term.b), vee(term.b, term.a))
    if isinstance(term, CAnd):
        return Typing(wedge(term.a, term.b), wedge(term.b, term.a))
    if isinstance(term, DeltaOr):
        return _fw(term.direction, vee(term.a, algebra.bot), term.a)
    if isinstance(term, SigmaOr):
        return _fw(term.direction, vee(algebra.bot, term.a), term.a)
    if isinstance(term, DeltaAnd):
        return _fw(term.direction, wedge(term.a, algebra.top), term.a)
    if isinstance(term, SigmaAnd):
        return _fw(term.direction, wedge(algebra.top, term.a), term.a)
    if isinstance(term, WOrTop):
        return _fw(term.direction, vee(algebra.top, algebra.top), algebra.top)
    if isinstance(term, WAndBot):
        return _fw(term.direction, wedge(algebra.bot, algebra.bot), algebra.bot)
    if isinstance(term, Kappa):
        return Typing(algebra.bot, algebra.top)
    if isinstance(term, Ck):
        a, b, c, d = term.objects
        return Typing(vee(wedge(a, b), wedge(c, d)), wedge(vee(a, c), vee(b, d)))
    raise Error("Not an arrow term: %r" % (term,))


def typecheck(term, algebra=STRICT):
    """Source and target of ``term`` computed bottom-up in ``algebra``."""
    return _typecheck(term, algebra)


@functools.lru_cache(maxsize=65536)
def _typecheck(term, algebra):
    if isinstance(term, Comp):
        f = _typed(term.f, algebra, "f")
        g = _typed(term.g, algebra, "g")
        if f.target != g.source:
            raise CompositionMismatch(
                (), "'%s' is not '%s'" % (formula.render(f.target), formula.render(g.source))
            )
        return Typing(f.source, g.target)
    if isinstance(term, (Or, And)):
        left = _typed(term.left, algebra, "left")
        right = _typed(term.right, algebra, "right")
        op = algebra.vee if isinstance(term, Or) else algebra.wedge
        return Typing(op(left.source, right.source), op(left.target, right.target))
    return generator_typing(term, algebra)


def _typed(term, algebra, step):
    try:
        return _typecheck(term, algebra)
    except CompositionMismatch as e:
        raise CompositionMismatch((step,) + e.position, e.detail) from None


# Smart constructors


def compose(g, f):
    if isinstance(f, Id):
        return g
    if isinstance(g, Id):
        return f
    return Comp(g, f)


def chain(factors, source=None):
    """Compose ``factors`` in order (the first one is applied first)."""
    result = None
    for factor in factors:
        if isinstance(factor, Id):
            continue
        result = factor if result is None else Comp(factor, result)
    if result is not None:
        return result
    if source is not None:
        return Id(source)
    for factor in factors:
        return factor
    raise Error("Cannot chain an empty factor list without a source")


def vee(f, g, algebra=STRICT):
    if isinstance(f, Id) and isinstance(g, Id):
        return Id(algebra.vee(f.obj, g.obj))
    return Or(f, g)


def wedge(f, g, algebra=STRICT):
    if isinstance(f, Id) and isinstance(g, Id):
        return Id(algebra.wedge(f.obj, g.obj))
    return And(f, g)


def fold(kind, terms, algebra=STRICT):
    """Left fold of ``terms`` under ``|`` or ``&``; empty gives the unit identity."""
    combine = vee if kind == OR else wedge
    if not terms:
        return Id(algebra.bot if kind == OR else algebra.top)
    result = terms[0]
    for term in terms[1:]:
        result = combine(result, term, algebra)
    return result


def in_context(kind, before, term, after):
    """``term`` placed between the strict siblings ``before`` and ``after``."""
    cls = Or if kind == OR else And
    join = strict.vee if kind == OR else strict.wedge
    unit = formula.BOT if kind == OR else formula.TOP
    result = term
    prefix = join(*before)
    if prefix != unit:
        result = cls(Id(prefix), result)
    suffix = join(*after)
    if suffix != unit:
        result = cls(result, Id(suffix))
    return result


# Developed form


def develop(term, algebra=STRICT):
    """Single-head factors whose chain has the endpoints of ``term``."""
    typecheck(term, algebra)
    return _develop(term, algebra)


def _develop(term, algebra):
    if isinstance(term, Id):
        return []
    if isinstance(term, Comp):
        return _develop(term.f, algebra) + _develop(term.g, algebra)
    if isinstance(term, (Or, And)):
        cls = type(term)
        right_source = typecheck(term.right, algebra).source
        left_target = typecheck(term.left, algebra).target
        return [cls(x, Id(right_source)) for x in _develop(term.left, algebra)] + [
            cls(Id(left_target), y) for y in _develop(term.right, algebra)
        ]
    return [term]


# Transformations


def map_objects(term, fn):
    if isinstance(term, Comp):
        return Comp(map_objects(term.g, fn), map_objects(term.f, fn))
    if isinstance(term, (Or, And)):
        return type(term)(map_objects(term.left, fn), map_objects(term.right, fn))
    if not term.OBJECTS:
        return term
    return dataclasses.replace(
        term, **{name: fn(getattr(term, name)) for name in term.OBJECTS}
    )


def substitute(term, mapping):
    """Instantiate the letters of a strict term by strict objects."""
    return map_objects(term, lambda obj: strict.substitute(obj, mapping))


def invert(term):
    if isinstance(term, Comp):
        return Comp(invert(term.f), invert(term.g))
    if isinstance(term, (Or, And)):
        return type(term)(invert(term.left), invert(term.right))
    if isinstance(term, (Kappa, Ck)):
        raise NotInvertible("'%s' has no inverse" % term.label)
    if isinstance(term, COr):
        return COr(term.b, term.a)
    if isinstance(term, CAnd):
        return CAnd(term.b, term.a)
    if "direction" in term.__dataclass_fields__:
        return dataclasses.replace(term, direction=_FLIP[term.direction])
    return term


def strictify(term):
    """The strictification functor: M-terms to M^st-terms."""
    if isinstance(term, Comp):
        return Comp(strictify(term.g), strictify(term.f))
    if isinstance(term, (Or, And)):
        return type(term)(strictify(term.left), strictify(term.right))
    if isinstance(term, ASSOCIATORS):
        source = generator_typing(term, formula.FREE).source
        return Id(strict.to_strict_object(source))
    return map_objects(term, strict.to_strict_object)


def sai_ck(s, t, u, v):
    """An A^st intermutation with its index in canonical order."""
    return Ck(*formset.CkIndex(s, t, u, v).canonical())


def to_sai_term(term):
    """Forget units and symmetries: a unit-free strict term as an A^st term."""
    if isinstance(term, Comp):
        return compose(to_sai_term(term.g), to_sai_term(term.f))
    if isinstance(term, Or):
        return vee(to_sai_term(term.left), to_sai_term(term.right), formset.SAI)
    if isinstance(term, And):
        return wedge(to_sai_term(term.left), to_sai_term(term.right), formset.SAI)
    if isinstance(term, Ck):
        return sai_ck(*map(formset.to_form_multiset, term.objects))
    if isinstance(term, (Id, COr, CAnd)):
        source = generator_typing(term, STRICT).source
        return Id(formset.to_form_multiset(source))
    raise formset.UnitPresent("'%s' has no image in A^st" % term.label)


# Symmetry sorting


def _perm_key(obj):
    if obj.kind in (OR, AND):
        return (obj.kind, tuple(sorted(_perm_key(child) for child in obj.children)))
    return (obj.kind, getattr(obj, "name", ""))


def _swap(kind, children, k):
    """Transpose children k and k+1 of a strict list node, as a term."""
    swap = COr if kind == OR else CAnd
    return in_context(
        kind, children[:k], swap(children[k], children[k + 1]), children[k + 2 :]
    )


def sort_iso(a, b):
    """A symmetry a -> b made of adjacent transpositions, bubble-sort order."""
    if a == b:
        return Id(a)
    if (
        a.kind != b.kind
        or a.kind not in (OR, AND)
        or len(a.children) != len(b.children)
        or _perm_key(a) != _perm_key(b)
    ):
        raise NotPermutationEquivalent(
            "'%s' is not a permutation of '%s'" % (formula.render(a), formula.render(b))
        )
    remaining = list(range(len(b.children)))
    order = []
    for child in a.children:
        key = _perm_key(child)
        match = next(j for j in remaining if _perm_key(b.children[j]) == key)
        remaining.remove(match)
        order.append(match)
    inner = [sort_iso(child, b.children[j]) for child, j in zip(a.children, order)]
    factors = [fold(a.kind, inner)]
    current = [b.children[j] for j in order]
    swapped = True
    while swapped:
        swapped = False
        for k in range(len(order) - 1):
            if order[k] > order[k + 1]:
                factors.append(_swap(a.kind, current, k))
                order[k], order[k + 1] = order[k + 1], order[k]
                current[k], current[k + 1] = current[k + 1], current[k]
                swapped = True
    return chain(factors, a)


# Printing


_COMBINATORS = {Comp: (0, " . "), Or: (1, " | "), And: (2, " & ")}


def render_term(term, unicode=False):
    return _render(term, unicode, 0)


def _render(term, unicode, context):
    if isinstance(term, _Generator):
        if not term.OBJECTS:
            return term.label
        args = ";".join(formula.render(obj, unicode) for obj in term.objects)
        return "%s(%s)" % (term.label, args)
    precedence, symbol = _COMBINATORS[type(term)]
    if isinstance(term, Comp):
        # Composition associates to the right.
        text = _render(term.g, unicode, 1) + symbol + _render(term.f, unicode, 0)
    else:
        text = (
            _render(term.left, unicode, precedence)
            + symbol
            + _render(term.right, unicode, precedence + 1)
        )
    if precedence < context:
        return "(%s)" % text
    return text
