# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
The commuting diagrams of SMI categories as pairs of arrow terms.

Diagrams "1" to "13" and the naturality squares are M-terms over formulae;
"1s" and "2s" only exist up to strict associativity and are M^st-terms.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import typing

from smi import SmiError, formula, strict
from smi.formula import BOT, TOP
from smi.terms import (
    BW,
    FW,
    And,
    BAnd,
    BOr,
    CAnd,
    Ck,
    COr,
    Comp,
    DeltaAnd,
    DeltaOr,
    Id,
    Kappa,
    Or,
    SigmaAnd,
    SigmaOr,
    WAndBot,
    WOrTop,
)


class BadParams(SmiError):
    pass


class Legs(typing.NamedTuple):
    left: typing.Any
    right: typing.Any


def _seq(*factors):
    """``_seq(f, g, h)`` is ``h . g . f``."""
    result = factors[0]
    for factor in factors[1:]:
        result = Comp(factor, result)
    return result


def _v(a, b):
    return formula.Or(a, b)


def _w(a, b):
    return formula.And(a, b)


def _axiom_1(a, b, c, d, e, f):
    left = _seq(
        Ck(a, _w(b, c), d, _w(e, f)),
        And(Id(_v(a, d)), Ck(b, c, e, f)),
        BAnd(FW, _v(a, d), _v(b, e), _v(c, f)),
    )
    right = _seq(
        Or(BAnd(FW, a, b, c), BAnd(FW, d, e, f)),
        Ck(_w(a, b), c, _w(d, e), f),
        And(Ck(a, b, d, e), Id(_v(c, f))),
    )
    return Legs(left, right)


def _axiom_2(a, b, c, d, e, f):
    left = _seq(
        Or(Id(_w(a, d)), Ck(b, e, c, f)),
        Ck(a, d, _v(b, c), _v(e, f)),
        And(BOr(FW, a, b, c), BOr(FW, d, e, f)),
    )
    right = _seq(
        BOr(FW, _w(a, d), _w(b, e), _w(c, f)),
        Or(Ck(a, d, b, e), Id(_w(c, f))),
        Ck(_v(a, b), _v(d, e), c, f),
    )
    return Legs(left, right)


def _axiom_3(a, b, c, d):
    return Legs(
        _seq(Ck(a, b, c, d), CAnd(_v(a, c), _v(b, d))),
        _seq(Or(CAnd(a, b), CAnd(c, d)), Ck(b, a, d, c)),
    )


def _axiom_4(a, b, c, d):
    return Legs(
        _seq(Ck(a, c, b, d), And(COr(a, b), COr(c, d))),
        _seq(COr(_w(a, c), _w(b, d)), Ck(b, d, a, c)),
    )


def _axiom_5(a, b):
    return Legs(
        Ck(a, b, BOT, BOT),
        _seq(
            Or(Id(_w(a, b)), WAndBot(FW)),
            DeltaOr(FW, _w(a, b)),
            And(DeltaOr(BW, a), DeltaOr(BW, b)),
        ),
    )


def _axiom_6(a, b):
    return Legs(
        Ck(a, TOP, b, TOP),
        _seq(
            Or(DeltaAnd(FW, a), DeltaAnd(FW, b)),
            DeltaAnd(BW, _v(a, b)),
            And(Id(_v(a, b)), WOrTop(BW)),
        ),
    )


def _axiom_7():
    return Legs(
        BOr(FW, TOP, TOP, TOP),
        _seq(Or(Id(TOP), WOrTop(FW)), Or(WOrTop(BW), Id(TOP))),
    )


def _axiom_8():
    return Legs(
        BAnd(FW, BOT, BOT, BOT),
        _seq(And(Id(BOT), WAndBot(FW)), And(WAndBot(BW), Id(BOT))),
    )


def _axiom_9():
    return Legs(_seq(Or(Id(TOP), Kappa()), WOrTop(FW)), DeltaOr(FW, TOP))


def _axiom_10():
    return Legs(And(Id(BOT), Kappa()), _seq(WAndBot(FW), DeltaAnd(BW, BOT)))


def _axiom_11():
    return Legs(
        Ck(TOP, BOT, BOT, TOP),
        _seq(
            Or(SigmaAnd(FW, BOT), DeltaAnd(FW, BOT)),
            DeltaOr(FW, BOT),
            Kappa(),
            DeltaAnd(BW, TOP),
            And(DeltaOr(BW, TOP), SigmaOr(BW, TOP)),
        ),
    )


def _axiom_12():
    return Legs(COr(TOP, TOP), _seq(WOrTop(FW), WOrTop(BW)))


def _axiom_13():
    return Legs(CAnd(BOT, BOT), _seq(WAndBot(FW), WAndBot(BW)))


def _axiom_1s(u, v, w, x, y, z):
    sv, sw = strict.vee, strict.wedge
    return Legs(
        _seq(Ck(u, sw(v, w), x, sw(y, z)), And(Id(sv(u, x)), Ck(v, w, y, z))),
        _seq(Ck(sw(u, v), w, sw(x, y), z), And(Ck(u, v, x, y), Id(sv(w, z)))),
    )


def _axiom_2s(u, v, w, x, y, z):
    sv, sw = strict.vee, strict.wedge
    return Legs(
        _seq(Or(Id(sw(u, x)), Ck(v, y, w, z)), Ck(u, x, sv(v, w), sv(y, z))),
        _seq(Or(Ck(u, x, v, y), Id(sw(w, z))), Ck(sv(u, v), sv(x, y), w, z)),
    )


def _nat_ck(a, b, c, d, e):
    return Legs(
        _seq(Or(And(CAnd(a, e), Id(b)), Id(_w(c, d))), Ck(_w(e, a), b, c, d)),
        _seq(Ck(_w(a, e), b, c, d), And(Or(CAnd(a, e), Id(c)), Id(_v(b, d)))),
    )


def _nat_kappa(unit_side, cls, delta):
    def build():
        if unit_side == "left":
            lhs = cls(Kappa(), Id(BOT if cls is Or else TOP))
        else:
            lhs = cls(Id(BOT if cls is Or else TOP), Kappa())
        return Legs(lhs, _seq(delta(FW, BOT), Kappa(), delta(BW, TOP)))

    return build


_AXIOMS = {
    "1": (6, _axiom_1),
    "2": (6, _axiom_2),
    "3": (4, _axiom_3),
    "4": (4, _axiom_4),
    "5": (2, _axiom_5),
    "6": (2, _axiom_6),
    "7": (0, _axiom_7),
    "8": (0, _axiom_8),
    "9": (0, _axiom_9),
    "10": (0, _axiom_10),
    "11": (0, _axiom_11),
    "12": (0, _axiom_12),
    "13": (0, _axiom_13),
    "1s": (6, _axiom_1s),
    "2s": (6, _axiom_2s),
    "nat-ck": (5, _nat_ck),
    "nat-kappa-or-l": (0, _nat_kappa("left", Or, DeltaOr)),
    "nat-kappa-or-r": (0, _nat_kappa("right", Or, SigmaOr)),
    "nat-kappa-and-l": (0, _nat_kappa("left", And, DeltaAnd)),
    "nat-kappa-and-r": (0, _nat_kappa("right", And, SigmaAnd)),
}
_ALIASES = {"nat-kappa": "nat-kappa-or-l"}

AXIOM_IDS = tuple(_AXIOMS)
STRICT_AXIOMS = frozenset(["1s", "2s"])
DEFAULT_LETTERS = ("p", "q", "r", "s", "t", "u")


def arity(axiom_id):
    return _lookup(axiom_id)[0]


def algebra(axiom_id):
    """The object algebra the legs of ``axiom_id`` are typed in."""
    return strict.STRICT if str(axiom_id) in STRICT_AXIOMS else formula.FREE


def _lookup(axiom_id):
    key = _ALIASES.get(str(axiom_id), str(axiom_id))
    if key not in _AXIOMS:
        raise BadParams("Unknown axiom '%s'" % axiom_id)
    return _AXIOMS[key]


def _coerce(param):
    if isinstance(param, str):
        return formula.Letter(param)
    if not hasattr(param, "kind"):
        raise BadParams("Not an object: %r" % (param,))
    return param


def axiom_legs(axiom_id, *params):
    """Both legs of diagram ``axiom_id``.

    With no params the diagram is instantiated with distinct letters.
    """
    count, build = _lookup(axiom_id)
    if not params:
        params = DEFAULT_LETTERS[:count]
    if len(params) != count:
        raise BadParams(
            "Axiom '%s' takes %d objects, got %d" % (axiom_id, count, len(params))
        )
    params = [_coerce(param) for param in params]
    if str(axiom_id) in STRICT_AXIOMS:
        params = [strict.to_strict_object(param) for param in params]
    return build(*params)
