# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Canonical arrows and equality of arrows in M^st.

Between two pure diversified objects, or two letterless ones, there is at
most one arrow.  ``canonical_arrow`` builds it (or reports that it does not
exist) and ``equal_arrows`` decides equality of parallel arrows on that
fragment.  Outside of it the answer is ``UNDECIDED`` or ``Verdict.UNKNOWN``.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import enum
import logging
import typing

from smi import formset, formula, sai, strict, terms, unit_norm
from smi.formula import AND, OR, letter_set


logger = logging.getLogger("smi")


class _Undecided(object):
    def __repr__(self):
        return "UNDECIDED"

    __str__ = __repr__


UNDECIDED = _Undecided()


class Verdict(enum.Enum):
    EQUAL_BY_COHERENCE = "EQUAL"
    NOT_PARALLEL = "NOT-PARALLEL"
    UNKNOWN = "UNKNOWN"


class Equality(typing.NamedTuple):
    verdict: Verdict
    evidence: dict


def in_fragment(obj):
    """Letterless, or pure and diversified."""
    if formula.is_letterless(obj):
        return True
    return strict.purity(obj).pure and formula.is_diversified(obj)


def canonical_arrow(a, b):
    """The arrow a -> b, None when there is none, or UNDECIDED."""
    if formula.letters(a) != formula.letters(b):
        return None
    source, target = strict.purity(a), strict.purity(b)
    if (source.bot_pure and not target.bot_pure) or (
        target.top_pure and not source.top_pure
    ):
        return None
    if formula.is_letterless(a) and formula.is_letterless(b):
        return unit_norm.letterless_arrow(a, b)
    if not (in_fragment(a) and in_fragment(b)):
        return UNDECIDED
    nu_a, nu_b = strict.nu(a), strict.nu(b)
    found = sai.canonical_sai_arrow(
        strict.to_form_multiset(nu_a), strict.to_form_multiset(nu_b)
    )
    if found is None:
        return None
    logger.debug(
        "canonical arrow '%s' -> '%s' has %d ck",
        formula.render(a),
        formula.render(b),
        terms.ck_count(found),
    )
    return terms.chain(
        [unit_norm.unit_iso(a), decorate(found, nu_a, nu_b), unit_norm.inverse_unit_iso(b)],
        a,
    )


def decorate(t, source, target):
    """Lift the A^st arrow ``t`` to a unit-free M^st arrow source -> target.

    Each index is read off the actual strict object at its position;
    symmetries reorder children where the bag order and the list order differ.
    """
    term, reached = _realize(t, source)
    return terms.chain([term, terms.sort_iso(reached, target)], source)


def _split(obj, kind, letters):
    children = obj.children if obj.kind == kind else (obj,)
    join = strict.vee if kind == OR else strict.wedge
    inside = [c for c in children if letter_set(c) <= letters]
    outside = [c for c in children if not letter_set(c) <= letters]
    return join(*inside), join(*outside)


def _realize(term, source):
    if isinstance(term, terms.Id):
        return terms.Id(source), source
    if isinstance(term, terms.Comp):
        f, middle = _realize(term.f, source)
        g, reached = _realize(term.g, middle)
        return terms.compose(g, f), reached
    if isinstance(term, (terms.Or, terms.And)):
        kind = OR if isinstance(term, terms.Or) else AND
        join = strict.vee if kind == OR else strict.wedge
        left_source = terms.typecheck(term.left, formset.SAI).source
        first, second = _split(source, kind, letter_set(left_source))
        left, left_target = _realize(term.left, first)
        right, right_target = _realize(term.right, second)
        combine = terms.vee if kind == OR else terms.wedge
        return (
            terms.chain(
                [terms.sort_iso(source, join(first, second)), combine(left, right)], source
            ),
            join(left_target, right_target),
        )
    if isinstance(term, terms.Ck):
        first, second = _split(source, OR, letter_set(term.a) | letter_set(term.b))
        s, t = _split(first, AND, letter_set(term.a))
        u, v = _split(second, AND, letter_set(term.c))
        ck = terms.Ck(s, t, u, v)
        arranged = strict.vee(strict.wedge(s, t), strict.wedge(u, v))
        return (
            terms.chain([terms.sort_iso(source, arranged), ck], source),
            terms.typecheck(ck).target,
        )
    raise terms.Error("'%s' is not an A^st term" % (term,))


def _evidence(obj):
    purity = strict.purity(obj)
    return {
        "object": formula.render(obj),
        "bot_pure": purity.bot_pure,
        "top_pure": purity.top_pure,
        "diversified": formula.is_diversified(obj),
        "letterless": formula.is_letterless(obj),
        "letters": dict(sorted(formula.letters(obj).items())),
    }


def equal_arrows(f, g, algebra=strict.STRICT):
    """Decide f = g by coherence.

    Parallelism is checked in ``algebra``; terms over formulae are then
    strictified.
    """
    first, second = terms.typecheck(f, algebra), terms.typecheck(g, algebra)
    if first != second:
        evidence = {
            "source": _evidence(strict.to_strict_object(first.source)),
            "target": _evidence(strict.to_strict_object(first.target)),
            "other": {
                "source": formula.render(second.source),
                "target": formula.render(second.target),
            },
        }
        return Equality(Verdict.NOT_PARALLEL, evidence)
    if algebra is formula.FREE:
        first = terms.typecheck(terms.strictify(f))
    a, b = first
    evidence = {"source": _evidence(a), "target": _evidence(b)}
    letterless = formula.is_letterless(a) and formula.is_letterless(b)
    covered = (
        strict.purity(a).pure
        and strict.purity(b).pure
        and formula.is_diversified(a)
        and formula.is_diversified(b)
    )
    if letterless or covered:
        return Equality(Verdict.EQUAL_BY_COHERENCE, evidence)
    return Equality(Verdict.UNKNOWN, evidence)
