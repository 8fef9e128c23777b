# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Surface syntax.

Formulae use ``\\/``, ``/\\``, ``bot`` and ``top``; ``\\/`` binds weaker
than ``/\\`` and both associate to the left.  Arrow terms use ``.`` for
composition (``g . f`` applies f first), ``|`` and ``&`` for the two tensors,
and generator names as printed by ``terms.render_term``, e.g.
``ck(p;q;s;t) . (c_or(p;q) | id(r))``.  Simplex maps are written as an image
``[0 1 1 3]@1->2`` or as a generator word ``d(1)@2 . s(0)@2``; product maps
separate their components with ``;``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import functools

import lark as L
from lark import v_args

from smi import SmiError, bar, formset, formula, simplicial, strict, terms


GRAMMAR = r"""
    formula: disj
    term: comp
    simplex: smap
    productmap: smap (";" smap)*

    ?disj: conj
         | disj "\\/" conj -> f_or
    ?conj: fatom
         | conj "/\\" fatom -> f_and
    ?fatom: NAME -> f_name
          | "(" disj ")"

    ?comp: vee
         | vee "." comp -> t_comp
    ?vee: wedge
        | vee "|" wedge -> t_or
    ?wedge: tatom
          | wedge "&" tatom -> t_and
    ?tatom: NAME -> t_gen0
          | NAME "(" disj (";" disj)* ")" -> t_gen
          | "(" comp ")"

    ?smap: satom
         | satom "." smap -> s_comp
    ?satom: "[" INT* "]" "@" INT "->" INT -> s_image
          | NAME "(" INT ")" "@" INT -> s_gen
          | NAME "@" INT -> s_id
          | "(" smap ")"

    NAME: /[a-z][a-zA-Z0-9_]*/

    %import common.INT
    %import common.WS
    %ignore WS
"""

KINDS = ("formula", "term", "simplex", "productmap")
FLAVORS = ("free", "strict", "sai")


class ParseError(SmiError):
    def __init__(self, line, column, expected, detail=None):
        self.line = line
        self.column = column
        self.expected = sorted(expected)
        message = "line %d, column %d" % (line, column)
        if detail:
            message += ": %s" % detail
        if self.expected:
            message += ": expected one of %s" % ", ".join(self.expected)
        super(ParseError, self).__init__(message)


def _generator_table():
    table = {}
    for cls in terms.GENERATORS:
        arity = len(cls.OBJECTS)
        if "direction" in cls.__dataclass_fields__:
            for direction in (terms.FW, terms.BW):
                name = "%s_%s" % (cls.NAME, direction)
                table[name] = (functools.partial(cls, direction), arity)
        else:
            table[cls.NAME] = (cls, arity)
    return table


_GENERATORS = _generator_table()


class UnknownName(SmiError):
    pass


@v_args(inline=True)
class _Build(L.Transformer):
    def formula(self, value):
        return value

    term = simplex = formula

    def productmap(self, *maps):
        return bar.ProductMap(maps)

    def f_name(self, token):
        name = str(token)
        if name == "bot":
            return formula.BOT
        if name == "top":
            return formula.TOP
        return formula.Letter(name)

    def f_or(self, left, right):
        return formula.Or(left, right)

    def f_and(self, left, right):
        return formula.And(left, right)

    def _generator(self, token, args):
        name = str(token)
        if name not in _GENERATORS:
            raise UnknownName("Unknown generator '%s'" % name)
        build, arity = _GENERATORS[name]
        if len(args) != arity:
            raise UnknownName("'%s' takes %d objects, got %d" % (name, arity, len(args)))
        return build(*args)

    def t_gen0(self, token):
        return self._generator(token, ())

    def t_gen(self, token, *args):
        return self._generator(token, args)

    def t_comp(self, g, f):
        return terms.Comp(g, f)

    def t_or(self, left, right):
        return terms.Or(left, right)

    def t_and(self, left, right):
        return terms.And(left, right)

    def s_image(self, *tokens):
        values = [int(token) for token in tokens]
        return simplicial.SimplexMap(values[-2], values[-1], values[:-2])

    def s_gen(self, token, i, n):
        return simplicial.gen(str(token), int(n), int(i))

    def s_id(self, token, n):
        if str(token) != "id":
            raise UnknownName("Expected 'id', got '%s'" % token)
        return simplicial.identity_simplex(int(n))

    def s_comp(self, g, f):
        return simplicial.compose_simplex(g, f)


_PARSER = L.Lark(GRAMMAR, parser="lalr", start=list(KINDS), maybe_placeholders=False)


def _parse(kind, text):
    try:
        tree = _PARSER.parse(text, start=kind)
    except L.exceptions.UnexpectedInput as e:
        expected = getattr(e, "expected", None) or getattr(e, "allowed", None) or ()
        raise ParseError(
            max(getattr(e, "line", 1), 1), max(getattr(e, "column", 1), 1), expected
        ) from None
    try:
        return _Build().transform(tree)
    except L.exceptions.VisitError as e:
        if isinstance(e.orig_exc, SmiError):
            raise e.orig_exc from None
        raise


def parse_formula(text):
    return _parse("formula", text)


def parse_strict(text):
    return strict.to_strict_object(parse_formula(text))


def parse_formset(text):
    return formset.to_form_multiset(parse_formula(text))


def parse_term(text, flavor="strict"):
    """A term over formulae, strict objects or form multisets."""
    if flavor not in FLAVORS:
        raise UnknownName("Unknown term flavor '%s'" % flavor)
    term = _parse("term", text)
    if flavor == "free":
        return term
    term = terms.strictify(term)
    if flavor == "strict":
        return term
    for leaf in terms.leaves(term):
        if not isinstance(leaf, (terms.Id, terms.Ck)):
            raise UnknownName("'%s' is not an A^st generator" % leaf.label)
    return terms.to_sai_term(term)


def parse_simplex(text):
    return _parse("simplex", text)


def parse_productmap(text):
    return _parse("productmap", text)


def parse(kind, text, flavor="strict"):
    if kind not in KINDS:
        raise UnknownName("Unknown kind '%s'" % kind)
    if kind == "term":
        return parse_term(text, flavor)
    return _parse(kind, text)
