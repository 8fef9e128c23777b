# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Formulae: the objects of the free SMI category.

A formula is a finite tree over letters, the units ``bot`` and ``top`` and
the binary connectives ``\\/`` and ``/\\``.  The helpers at the bottom of
this module (``render``, ``sort_key``, ``letters``) work on every object
kind of the package: formulae, strict objects and form multisets all expose
``kind`` and ``children``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import re
import typing
from dataclasses import dataclass

from smi import SmiError


LETTER_RE = re.compile(r"[a-z][a-zA-Z0-9_]*\Z")
RESERVED = frozenset(["bot", "top"])

OR = "or"
AND = "and"


class Error(SmiError):
    pass


class BadLetter(Error):
    pass


@dataclass(frozen=True)
class Letter(object):
    name: str

    kind: typing.ClassVar[str] = "letter"
    binary: typing.ClassVar[bool] = False
    children: typing.ClassVar[tuple] = ()

    def __post_init__(self):
        if not LETTER_RE.match(self.name or "") or self.name in RESERVED:
            raise BadLetter("Invalid letter name '%s'" % self.name)

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class Bot(object):
    kind: typing.ClassVar[str] = "bot"
    binary: typing.ClassVar[bool] = False
    children: typing.ClassVar[tuple] = ()

    def __str__(self):
        return "bot"


@dataclass(frozen=True)
class Top(object):
    kind: typing.ClassVar[str] = "top"
    binary: typing.ClassVar[bool] = False
    children: typing.ClassVar[tuple] = ()

    def __str__(self):
        return "top"


BOT = Bot()
TOP = Top()


@dataclass(frozen=True)
class Or(object):
    left: typing.Any
    right: typing.Any

    kind: typing.ClassVar[str] = OR
    binary: typing.ClassVar[bool] = True

    @property
    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return render(self)


@dataclass(frozen=True)
class And(object):
    left: typing.Any
    right: typing.Any

    kind: typing.ClassVar[str] = AND
    binary: typing.ClassVar[bool] = True

    @property
    def children(self):
        return (self.left, self.right)

    def __str__(self):
        return render(self)


class Purity(typing.NamedTuple):
    bot_pure: bool
    top_pure: bool

    @property
    def pure(self):
        return self.bot_pure and self.top_pure


class FreeAlgebra(object):
    """Binary connectives of M; used to type arrow terms over formulae."""

    name = "free"
    bot = BOT
    top = TOP

    @staticmethod
    def vee(left, right):
        return Or(left, right)

    @staticmethod
    def wedge(left, right):
        return And(left, right)


FREE = FreeAlgebra()


def is_unit(obj):
    return obj.kind in ("bot", "top")


def nu(a):
    """Erase units: the normal form under B\\/bot, bot\\/B, B/\\top, top/\\B -> B,
    bot/\\bot -> bot and top\\/top -> top."""
    if a.kind == OR:
        x, y = nu(a.left), nu(a.right)
        if y == BOT:
            return x
        if x == BOT:
            return y
        if x == TOP and y == TOP:
            return TOP
        return Or(x, y)
    if a.kind == AND:
        x, y = nu(a.left), nu(a.right)
        if y == TOP:
            return x
        if x == TOP:
            return y
        if x == BOT and y == BOT:
            return BOT
        return And(x, y)
    return a


def purity(a):
    reduced = nu(a)
    return Purity(
        bot_pure=not occurs(reduced, "bot"), top_pure=not occurs(reduced, "top")
    )


def is_letterless(obj):
    return not any(node.kind == "letter" for node in walk(obj))


def is_diversified(obj):
    return all(count == 1 for count in letters(obj).values())


# Structural helpers shared by every object kind.


def walk(obj):
    stack = [obj]
    while stack:
        node = stack.pop()
        yield node
        stack.extend(reversed(node.children))


def occurs(obj, kind):
    return any(node.kind == kind for node in walk(obj))


def letters(obj):
    return collections.Counter(node.name for node in walk(obj) if node.kind == "letter")


def letter_set(obj):
    return frozenset(letters(obj))


def leaf_count(obj):
    return sum(1 for node in walk(obj) if not node.children)


_RANK = {"bot": 0, "top": 1, "letter": 2, OR: 3, AND: 4}


def sort_key(obj):
    """Total structural order: units, then letters by name, then compounds."""
    if obj.kind == "letter":
        return (_RANK["letter"], obj.name)
    return (_RANK[obj.kind],) + tuple(sort_key(child) for child in obj.children)


_ASCII = {OR: " \\/ ", AND: " /\\ ", "bot": "bot", "top": "top"}
_UNICODE = {OR: " ∨ ", AND: " ∧ ", "bot": "⊥", "top": "⊤"}


def render(obj, unicode=False):
    symbols = _UNICODE if unicode else _ASCII
    if obj.kind == "letter":
        return obj.name
    if not obj.children:
        return symbols[obj.kind]
    parts = []
    for position, child in enumerate(obj.children):
        text = render(child, unicode)
        # Left-nested chains of one connective print without parentheses.
        if child.children and not (
            obj.binary and position == 0 and child.kind == obj.kind
        ):
            text = "(%s)" % text
        parts.append(text)
    return symbols[obj.kind].join(parts)
