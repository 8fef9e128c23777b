# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Coherence for the unit-free fragment A^st.

``canonical_sai_arrow`` constructs the unique arrow between two form sets
when one exists.  ``reachability_oracle`` searches the finite graph of form
sets over a letter set and is kept as an independent check of it.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import enum
import functools
import itertools
import logging
import typing

import networkx as nx

from smi import SmiError, formula, formset, strict, terms
from smi.formula import AND, BOT, OR, TOP, letter_set
from smi.formset import SAI, and_bag, or_bag


logger = logging.getLogger("smi")

DEFAULT_NODE_LIMIT = 20000


class Error(SmiError):
    pass


class NotDiversified(Error):
    pass


class SourceMismatch(Error):
    pass


class PreconditionViolated(Error):
    pass


class LimitExceeded(Error):
    pass


class Splitting(enum.Enum):
    SPLITTING = "Splitting"
    NONSPLITTING = "Nonsplitting"
    MIXED = "Mixed"


class Reachability(typing.NamedTuple):
    exists: bool
    all_path_lengths: frozenset


# Splitting and deletion


def _ck_sides(ck):
    return (
        letter_set(ck.a) | letter_set(ck.b),
        letter_set(ck.c) | letter_set(ck.d),
    )


def is_splitting_term(u, x1, x2):
    source = terms.typecheck(u, SAI).source
    if source != or_bag(x1, x2):
        raise SourceMismatch(
            "'%s' does not start at '%s'" % (formula.render(source), formula.render(or_bag(x1, x2)))
        )
    left, right = letter_set(x1), letter_set(x2)
    verdicts = set()
    for leaf in terms.leaves(u):
        if isinstance(leaf, terms.Ck):
            first, second = _ck_sides(leaf)
            verdicts.add(
                (first <= left and second <= right) or (first <= right and second <= left)
            )
    if verdicts == {False}:
        return Splitting.NONSPLITTING
    if verdicts == {True, False}:
        return Splitting.MIXED
    return Splitting.SPLITTING


def deletion_condition(x, deleted):
    """At every conjunction the children are all inside ``deleted`` or none is."""
    deleted = frozenset(deleted)
    for node in formula.walk(x):
        if node.kind == AND:
            inside = [letter_set(child) <= deleted for child in node.children]
            if any(inside) and not all(inside):
                return False
    return True


def _delete_or_none(x, deleted):
    try:
        return formset.delete_letters(x, deleted)
    except formset.AllLettersDeleted:
        return None


def delete_letters_term(u, deleted):
    """u^{-P}: the arrow between the endpoints of ``u`` with P deleted."""
    deleted = frozenset(deleted)
    source = terms.typecheck(u, SAI).source
    if letter_set(source) <= deleted:
        raise PreconditionViolated("Every letter of '%s' is deleted" % formula.render(source))
    if not deletion_condition(source, deleted):
        raise PreconditionViolated(
            "Deleting %s splits a conjunction of '%s'"
            % (sorted(deleted), formula.render(source))
        )
    return _delete_term(u, deleted)


def _delete_term(u, deleted):
    if isinstance(u, terms.Comp):
        f, g = _delete_term(u.f, deleted), _delete_term(u.g, deleted)
        if f is None or g is None:
            return f or g
        return terms.compose(g, f)
    if isinstance(u, (terms.Or, terms.And)):
        left, right = _delete_term(u.left, deleted), _delete_term(u.right, deleted)
        if left is None or right is None:
            return left or right
        combine = terms.vee if isinstance(u, terms.Or) else terms.wedge
        return combine(left, right, SAI)
    if isinstance(u, terms.Ck):
        first, second = _ck_sides(u)
        if first <= deleted or second <= deleted:
            remaining = _delete_or_none(terms.typecheck(u, SAI).source, deleted)
            return None if remaining is None else terms.Id(remaining)
        return terms.sai_ck(*[formset.delete_letters(obj, deleted) for obj in u.objects])
    remaining = _delete_or_none(terms.typecheck(u, SAI).source, deleted)
    return None if remaining is None else terms.Id(remaining)


# The canonical arrow


def canonical_sai_arrow(x, y):
    """The arrow x -> y of A^st between form sets, or None."""
    for obj in (x, y):
        if not formula.is_diversified(obj):
            raise NotDiversified("'%s' repeats a letter" % formula.render(obj))
    if letter_set(x) != letter_set(y):
        return None
    return _canonical(x, y)


def _partition(children, letters):
    inside, outside = [], []
    for child in children:
        names = letter_set(child)
        if names <= letters:
            inside.append(child)
        elif names.isdisjoint(letters):
            outside.append(child)
        else:
            return None
    if not inside or not outside:
        return None
    return inside, outside


@functools.lru_cache(maxsize=None)
def _canonical(x, y):
    if x.kind == "letter":
        return terms.Id(x) if x == y else None
    if x.kind == AND:
        x1, x2 = x.children[0], and_bag(*x.children[1:])
        conjuncts = y.children if y.kind == AND else (y,)
        split = _partition(conjuncts, letter_set(x1))
        if split is None:
            return None
        t1 = _canonical(x1, and_bag(*split[0]))
        t2 = _canonical(x2, and_bag(*split[1]))
        if t1 is None or t2 is None:
            return None
        return terms.wedge(t1, t2, SAI)
    if y.kind == OR:
        y1, y2 = y.children[0], or_bag(*y.children[1:])
        split = _partition(x.children, letter_set(y1))
        if split is None:
            return None
        t1 = _canonical(or_bag(*split[0]), y1)
        t2 = _canonical(or_bag(*split[1]), y2)
        if t1 is None or t2 is None:
            return None
        return terms.vee(t1, t2, SAI)
    if y.kind != AND:
        return None
    x1, x2 = x.children[0], or_bag(*x.children[1:])
    y1, y2 = y.children[0], and_bag(*y.children[1:])
    first, second = letter_set(x1), letter_set(x2)
    try:
        a = formset.delete_letters(y1, second)
        b = formset.delete_letters(y2, second)
        c = formset.delete_letters(y1, first)
        d = formset.delete_letters(y2, first)
    except formset.AllLettersDeleted:
        return None
    parts = (
        _canonical(x1, and_bag(a, b)),
        _canonical(x2, and_bag(c, d)),
        _canonical(or_bag(a, c), y1),
        _canonical(or_bag(b, d), y2),
    )
    if any(part is None for part in parts):
        return None
    v1, v2, u1, u2 = parts
    return terms.compose(
        terms.wedge(u1, u2, SAI),
        terms.compose(terms.sai_ck(a, b, c, d), terms.vee(v1, v2, SAI)),
    )


# Single-head steps over form multisets


def _bipartitions(children):
    count = len(children)
    for mask in range(1, (1 << count) - 1):
        yield (
            [c for i, c in enumerate(children) if mask >> i & 1],
            [c for i, c in enumerate(children) if not mask >> i & 1],
        )


def _local_sai_heads(x):
    if x.kind != OR:
        return
    conjunctions = [(i, c) for i, c in enumerate(x.children) if c.kind == AND]
    for (i, first), (j, second) in itertools.permutations(conjunctions, 2):
        rest = [c for k, c in enumerate(x.children) if k not in (i, j)]
        for left in _bipartitions(first.children):
            for right in _bipartitions(second.children):
                s, t = and_bag(*left[0]), and_bag(*left[1])
                u, v = and_bag(*right[0]), and_bag(*right[1])
                head = terms.sai_ck(s, t, u, v)
                target = and_bag(or_bag(s, u), or_bag(t, v))
                if rest:
                    others = or_bag(*rest)
                    yield terms.Or(head, terms.Id(others)), or_bag(target, others)
                else:
                    yield head, target


def _sai_heads(x):
    if x.kind == "letter":
        return
    for step in _local_sai_heads(x):
        yield step
    bag = or_bag if x.kind == OR else and_bag
    cls = terms.Or if x.kind == OR else terms.And
    for i, child in enumerate(x.children):
        if i and child == x.children[i - 1]:
            continue
        others = bag(*(x.children[:i] + x.children[i + 1 :]))
        for term, target in _sai_heads(child):
            yield cls(term, terms.Id(others)), bag(target, others)


def _step_key(step):
    return (terms.render_term(step[0]), formula.render(step[1]))


def enumerate_single_heads(x):
    """Every single-intermutation step out of ``x`` with its target."""
    return sorted(set(_sai_heads(x)), key=_step_key)


# Reachability oracle


def object_graph(x, node_limit=None):
    """The graph of form multisets reachable from ``x`` by single heads."""
    limit = node_limit or DEFAULT_NODE_LIMIT
    graph = nx.DiGraph()
    graph.add_node(x)
    queue = collections.deque([x])
    while queue:
        node = queue.popleft()
        for term, target in enumerate_single_heads(node):
            if target not in graph:
                if graph.number_of_nodes() >= limit:
                    raise LimitExceeded("More than %d objects reachable" % limit)
                graph.add_node(target)
                queue.append(target)
            graph.add_edge(node, target)
    logger.debug(
        "object graph of '%s': %d nodes, %d edges",
        formula.render(x),
        graph.number_of_nodes(),
        graph.number_of_edges(),
    )
    return graph


def path_lengths_from(x, node_limit=None):
    """Map every object reachable from ``x`` to its set of path lengths."""
    graph = object_graph(x, node_limit)
    if nx.is_directed_acyclic_graph(graph):
        lengths = {node: set() for node in graph}
        lengths[x].add(0)
        for node in nx.topological_sort(graph):
            for successor in graph.successors(node):
                lengths[successor].update(length + 1 for length in lengths[node])
    else:
        logger.warning("object graph of '%s' has a cycle", formula.render(x))
        lengths = {node: set() for node in graph}
        lengths[x].add(0)
        for node in graph:
            if node != x:
                for path in nx.all_simple_paths(graph, x, node):
                    lengths[node].add(len(path) - 1)
    return {node: frozenset(found) for node, found in lengths.items()}


def reachability_oracle(x, y, node_limit=None):
    if letter_set(x) != letter_set(y):
        return Reachability(False, frozenset())
    lengths = path_lengths_from(x, node_limit)
    if y not in lengths:
        return Reachability(False, frozenset())
    return Reachability(True, lengths[y])


def sample_path(x, y, rng, node_limit=None):
    """A random path of objects from ``x`` to ``y``, or None."""
    graph = object_graph(x, node_limit)
    if y not in graph:
        return None
    reaching = nx.ancestors(graph, y) | {y}
    path = [x]
    while path[-1] != y:
        options = sorted(
            (node for node in graph.successors(path[-1]) if node in reaching),
            key=formula.sort_key,
        )
        path.append(rng.choice(options))
    return path


# Single-head steps over strict objects


def _join(kind, objs):
    return strict.vee(*objs) if kind == OR else strict.wedge(*objs)


def _foci(a):
    """Pairs of (context frames, focus) for every node and proper sublist."""
    yield (), a
    if a.kind not in (OR, AND):
        return
    count = len(a.children)
    for i, child in enumerate(a.children):
        frame = (a.kind, a.children[:i], a.children[i + 1 :])
        for frames, focus in _foci(child):
            yield (frame,) + frames, focus
    for i in range(count):
        for j in range(i + 2, count + 1):
            if j - i < count:
                frame = (a.kind, a.children[:i], a.children[j:])
                yield (frame,), _join(a.kind, a.children[i:j])


def _plug(frames, term, obj):
    for kind, before, after in reversed(frames):
        term = terms.in_context(kind, before, term, after)
        obj = _join(kind, tuple(before) + (obj,) + tuple(after))
    return term, obj


def _conjunct_splits(obj):
    """(S, T) with S /\\ T equal to ``obj``, units padding included."""
    splits = [(obj, TOP), (TOP, obj)]
    if obj.kind == AND:
        for k in range(1, len(obj.children)):
            splits.append((_join(AND, obj.children[:k]), _join(AND, obj.children[k:])))
    return splits


def _disjunct_splits(obj):
    splits = [(obj, BOT), (BOT, obj)]
    if obj.kind == OR:
        for k in range(1, len(obj.children)):
            splits.append((_join(OR, obj.children[:k]), _join(OR, obj.children[k:])))
    return splits


def _local_strict_heads(focus):
    if focus == BOT:
        yield terms.Kappa(), TOP
        yield terms.WAndBot(terms.BW), strict.AndList([BOT, BOT])
    if focus == TOP:
        yield terms.WOrTop(terms.BW), strict.OrList([TOP, TOP])
    if focus == strict.AndList([BOT, BOT]):
        yield terms.WAndBot(terms.FW), BOT
    if focus == strict.OrList([TOP, TOP]):
        yield terms.WOrTop(terms.FW), TOP
    if focus.kind in (OR, AND):
        swap = terms.COr if focus.kind == OR else terms.CAnd
        for k in range(1, len(focus.children)):
            left = _join(focus.kind, focus.children[:k])
            right = _join(focus.kind, focus.children[k:])
            yield swap(left, right), _join(focus.kind, (right, left))
    for first, second in _disjunct_splits(focus):
        for s, t in _conjunct_splits(first):
            for u, v in _conjunct_splits(second):
                head = terms.Ck(s, t, u, v)
                yield head, terms.typecheck(head).target
    # Units inserted next to the focus.
    for unit_term, kind in (
        (terms.Kappa(), OR),
        (terms.WAndBot(terms.BW), OR),
        (terms.WOrTop(terms.BW), AND),
    ):
        cls = terms.Or if kind == OR else terms.And
        for term in (cls(terms.Id(focus), unit_term), cls(unit_term, terms.Id(focus))):
            yield term, terms.typecheck(term).target


def enumerate_strict_heads(a):
    """Single-head steps out of the strict object ``a`` with their targets.

    Steps act at every node and every proper contiguous sublist of ``a``,
    and at the units implicit in A = A \\/ bot = A /\\ top.
    """
    found = set()
    for frames, focus in _foci(a):
        for head, target in _local_strict_heads(focus):
            found.add(_plug(frames, head, target))
    return sorted(found, key=_step_key)


def letterless_reachable(a, b, max_leaves=None, node_limit=None):
    """Breadth-first search for a path a -> b among small letterless objects."""
    bound = max_leaves or max(formula.leaf_count(a), formula.leaf_count(b))
    limit = node_limit or DEFAULT_NODE_LIMIT
    seen = {a}
    queue = collections.deque([a])
    while queue:
        node = queue.popleft()
        if node == b:
            return True
        for _, target in enumerate_strict_heads(node):
            if target in seen or formula.leaf_count(target) > bound:
                continue
            if len(seen) >= limit:
                raise LimitExceeded("More than %d objects visited" % limit)
            seen.add(target)
            queue.append(target)
    return False


def letterless_graph(max_leaves):
    """Steps between all letterless strict objects of at most ``max_leaves`` leaves."""
    graph = nx.DiGraph()
    for obj in enumerate_letterless(max_leaves):
        graph.add_node(obj)
        for _, target in enumerate_strict_heads(obj):
            if formula.leaf_count(target) <= max_leaves:
                graph.add_edge(obj, target)
    return graph


@functools.lru_cache(maxsize=None)
def _letterless(leaves, outer):
    if leaves == 1:
        return tuple(unit for unit in (BOT, TOP) if outer is None or unit != _unit(outer))
    found = []
    for kind in (OR, AND):
        if kind == outer:
            continue
        for sizes in _compositions(leaves):
            choices = [
                [c for c in _letterless(size, kind) if c.kind != kind] for size in sizes
            ]
            for children in itertools.product(*choices):
                found.append(
                    strict.OrList(children) if kind == OR else strict.AndList(children)
                )
    return tuple(found)


def _unit(kind):
    return BOT if kind == OR else TOP


def _compositions(total):
    """Ordered ways to write ``total`` as a sum of at least two positive parts."""
    for cuts in range(1, total):
        for points in itertools.combinations(range(1, total), cuts):
            bounds = (0,) + points + (total,)
            yield [bounds[k + 1] - bounds[k] for k in range(len(bounds) - 1)]


def enumerate_letterless(max_leaves):
    """All letterless strict objects with at most ``max_leaves`` leaves."""
    found = []
    for leaves in range(1, max_leaves + 1):
        found.extend(_letterless(leaves, None))
    return found
