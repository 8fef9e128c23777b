# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Simplicial operators.

Arrows of (Delta+)^op are stored as their images in Delta_2: monotone maps
between n+2 and m+2 points fixing the first and the last point.  Arrows of
Delta_p are monotone partial maps.  ``hj`` is the functor from the former to
the latter that forgets the two end points.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import collections
import itertools
import logging
import re
import typing
from dataclasses import dataclass

from smi import SmiError


logger = logging.getLogger("smi")

MAX_ENUMERATION_SIZE = 8

DELTA2 = "delta2"
DELTAPLUS_OP = "deltaplus_op"


class Error(SmiError):
    pass


class IndexOutOfRange(Error):
    pass


class ObjectMismatch(Error):
    pass


class TooLarge(Error):
    pass


class BadDiagram(Error):
    pass


def _monotone(values):
    return all(x <= y for x, y in zip(values, values[1:]))


@dataclass(frozen=True)
class SimplexMap(object):
    """An arrow n -> m of (Delta+)^op as its Delta_2 image on n+2 points."""

    class Malformed(Error):
        pass

    src: int
    dst: int
    image: typing.Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if self.src < 0 or self.dst < 0:
            raise self.Malformed("Negative object %d->%d" % (self.src, self.dst))
        if len(self.image) != self.src + 2:
            raise self.Malformed(
                "Image %s has %d points, expected %d"
                % (list(self.image), len(self.image), self.src + 2)
            )
        if self.image[0] != 0 or self.image[-1] != self.dst + 1:
            raise self.Malformed("Image %s moves an end point" % list(self.image))
        if not _monotone(self.image):
            raise self.Malformed("Image %s is not monotone" % list(self.image))

    def __call__(self, x):
        return self.image[x]

    def __str__(self):
        return "[%s]@%d->%d" % (" ".join(map(str, self.image)), self.src, self.dst)


@dataclass(frozen=True)
class PartialMonotoneMap(object):
    """An arrow n -> m of Delta_p; ``None`` marks undefined points."""

    class Malformed(Error):
        pass

    src: int
    dst: int
    image: typing.Tuple[typing.Optional[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))
        if self.src < 0 or self.dst < 0:
            raise self.Malformed("Negative object %d->%d" % (self.src, self.dst))
        if len(self.image) != self.src:
            raise self.Malformed(
                "Image has %d points, expected %d" % (len(self.image), self.src)
            )
        defined = [y for y in self.image if y is not None]
        if any(not 0 <= y < self.dst for y in defined) or not _monotone(defined):
            raise self.Malformed("Image %s is not monotone into %d" % (self._text(), self.dst))

    def __call__(self, x):
        return self.image[x]

    def fiber(self, y):
        return [x for x, value in enumerate(self.image) if value == y]

    def _text(self):
        return " ".join("-" if y is None else str(y) for y in self.image)

    def __str__(self):
        return "{%s}@%d->%d" % (self._text(), self.src, self.dst)


# (Delta+)^op in Delta_2


class Step(typing.NamedTuple):
    """A generator d_i^n or s_i^n."""

    kind: str
    n: int
    i: int

    def to_map(self):
        return gen(self.kind, self.n, self.i)

    def __str__(self):
        return "%s(%d)@%d" % (self.kind, self.i, self.n)


def gen(kind, n, i):
    """d_i^n: n -> n-1 merges points i and i+1; s_i^n: n-1 -> n skips point i+1."""
    if kind == "d":
        if n < 1 or not 0 <= i <= n:
            raise IndexOutOfRange("d(%d)@%d needs n >= 1 and 0 <= i <= n" % (i, n))
        return SimplexMap(n, n - 1, [x if x <= i else x - 1 for x in range(n + 2)])
    if kind == "s":
        if n < 1 or not 0 <= i <= n - 1:
            raise IndexOutOfRange("s(%d)@%d needs n >= 1 and 0 <= i < n" % (i, n))
        return SimplexMap(n - 1, n, [x if x <= i else x + 1 for x in range(n + 1)])
    raise IndexOutOfRange("Unknown generator '%s'" % kind)


def identity_simplex(n):
    return SimplexMap(n, n, range(n + 2))


def compose_simplex(g, f):
    """g . f: first f, then g."""
    if f.dst != g.src:
        raise ObjectMismatch("Cannot compose %s after %s" % (g, f))
    return SimplexMap(f.src, g.dst, [g.image[y] for y in f.image])


def factor_simplex(f):
    """Generators whose composite is ``f``, in the order they are applied.

    Merges come first, from the top down; then the missed points are
    inserted from the bottom up.
    """
    steps = []
    k = f.src
    for x in reversed(range(f.src + 1)):
        if f.image[x] == f.image[x + 1]:
            steps.append(Step("d", k, x))
            k -= 1
    hit = set(f.image)
    for y in range(f.dst + 2):
        if y not in hit:
            steps.append(Step("s", k + 1, y - 1))
            k += 1
    return steps


def simplex_from_word(steps, n=None):
    """Compose ``steps`` (first applied first); ``n`` types the empty word."""
    if not steps:
        if n is None:
            raise ObjectMismatch("The empty word needs an object")
        return identity_simplex(n)
    result = None
    for step in steps:
        current = step.to_map() if isinstance(step, Step) else step
        result = current if result is None else compose_simplex(current, result)
    return result


def simplex_word(f):
    """``f`` as a generator word, outermost generator first."""
    steps = factor_simplex(f)
    if not steps:
        return "id@%d" % f.src
    return " . ".join(str(step) for step in reversed(steps))


# Delta_p


def deltap_gen(kind, n, i):
    """delta_i^n: n -> n+1, sigma_i^n: n+1 -> n and rho_i^n: n+1 -> n."""
    if kind == "delta":
        if n < 0 or not 0 <= i <= n:
            raise IndexOutOfRange("delta_%d^%d needs 0 <= i <= n" % (i, n))
        return PartialMonotoneMap(n, n + 1, [x if x < i else x + 1 for x in range(n)])
    if kind == "sigma":
        if n < 1 or not 0 <= i <= n - 1:
            raise IndexOutOfRange("sigma_%d^%d needs 0 <= i < n" % (i, n))
        return PartialMonotoneMap(n + 1, n, [x if x <= i else x - 1 for x in range(n + 1)])
    if kind == "rho":
        if n < 0 or not 0 <= i <= n:
            raise IndexOutOfRange("rho_%d^%d needs 0 <= i <= n" % (i, n))
        return PartialMonotoneMap(
            n + 1,
            n,
            [x if x < i else (None if x == i else x - 1) for x in range(n + 1)],
        )
    raise IndexOutOfRange("Unknown generator '%s'" % kind)


def identity_deltap(n):
    return PartialMonotoneMap(n, n, range(n))


def compose_deltap(g, f):
    """g . f, defined where both are."""
    if f.dst != g.src:
        raise ObjectMismatch("Cannot compose %s after %s" % (g, f))
    return PartialMonotoneMap(
        f.src, g.dst, [None if y is None else g.image[y] for y in f.image]
    )


def hj(f):
    """The partial map obtained by dropping the end points of the Delta_2 image."""
    return PartialMonotoneMap(
        f.src,
        f.dst,
        [
            f.image[x + 1] - 1 if 1 <= f.image[x + 1] <= f.dst else None
            for x in range(f.src)
        ],
    )


def as_partial(f):
    """A Delta_2 image as a total map on n+2 points."""
    return PartialMonotoneMap(f.src + 2, f.dst + 2, f.image)


# The counital monad T(n) = 1 + n on one object


def unit_map(n):
    return deltap_gen("delta", n, 0)


def multiplication_map(n):
    return deltap_gen("sigma", n + 1, 0)


def counit_map(n):
    return deltap_gen("rho", n, 0)


def monad_functor(f):
    """T(f): the new first point is kept, the rest is shifted by one."""
    return PartialMonotoneMap(
        f.src + 1, f.dst + 1, [0] + [None if y is None else y + 1 for y in f.image]
    )


# Enumeration


def enumerate_homs(cat, n, m):
    """All arrows n -> m of ``cat``, sorted by image."""
    if max(n, m) > MAX_ENUMERATION_SIZE:
        raise TooLarge(
            "Objects above %d are not enumerated: %d->%d" % (MAX_ENUMERATION_SIZE, n, m)
        )
    if cat == DELTA2:
        return [
            SimplexMap(n, m, (0,) + inner + (m + 1,))
            for inner in itertools.combinations_with_replacement(range(m + 2), n)
        ]
    if cat == DELTAPLUS_OP:
        return sorted(_generated_homs(n, max(n, m)).get(m, ()), key=lambda f: f.image)
    raise Error("Unknown category '%s'" % cat)


def _generated_homs(n, bound):
    """Closure of the identity on n under post-composition by generators."""
    found = collections.defaultdict(set)
    start = identity_simplex(n)
    found[n].add(start)
    queue = collections.deque([start])
    while queue:
        f = queue.popleft()
        k = f.dst
        candidates = []
        if k >= 1:
            candidates.extend(gen("d", k, i) for i in range(k + 1))
        if k + 1 <= bound:
            candidates.extend(gen("s", k + 1, i) for i in range(k + 1))
        for step in candidates:
            h = compose_simplex(step, f)
            if h not in found[h.dst]:
                found[h.dst].add(h)
                queue.append(h)
    logger.debug("generated homs out of %d: %d", n, sum(map(len, found.values())))
    return found


# Diagrams


def _edge(x, y):
    if y is None:
        return " "
    if y == x:
        return "|"
    return "/" if y < x else "\\"


def render_ascii(f):
    """Two rows of points joined by edges, followed by the exact image.

    ``*`` is a filled point and ``o`` an open one: a missed target point of a
    simplex map, or an undefined source point of a partial map.
    """
    if isinstance(f, SimplexMap):
        header = "simplex %d->%d" % (f.src, f.dst)
        image = f.image
        top = ["*"] * len(image)
        hit = set(image)
        bottom = ["*" if y in hit else "o" for y in range(f.dst + 2)]
    else:
        header = "partial %d->%d" % (f.src, f.dst)
        image = f.image
        top = ["o" if y is None else "*" for y in image]
        bottom = ["*"] * f.dst
    lines = [
        header,
        ("src " + " ".join(top)).rstrip(),
        ("    " + " ".join(_edge(x, y) for x, y in enumerate(image))).rstrip(),
        ("dst " + " ".join(bottom)).rstrip(),
        " ".join(
            ["map"]
            + ["%d:%s" % (x, "-" if y is None else y) for x, y in enumerate(image)]
        ),
    ]
    return "\n".join(lines)


_HEADER_RE = re.compile(r"(simplex|partial) (\d+)->(\d+)\Z")
_PAIR_RE = re.compile(r"(\d+):(-|\d+)\Z")


def parse_ascii(text):
    """Read back a diagram printed by ``render_ascii``."""
    lines = [line.strip() for line in text.strip().splitlines()]
    header = _HEADER_RE.match(lines[0]) if lines else None
    if header is None:
        raise BadDiagram("Missing diagram header")
    rows = [line for line in lines if line.startswith("map")]
    if len(rows) != 1:
        raise BadDiagram("Expected exactly one map line")
    image = []
    for position, pair in enumerate(rows[0].split()[1:]):
        match = _PAIR_RE.match(pair)
        if match is None or int(match.group(1)) != position:
            raise BadDiagram("Bad map entry '%s'" % pair)
        value = match.group(2)
        image.append(None if value == "-" else int(value))
    kind, src, dst = header.group(1), int(header.group(2)), int(header.group(3))
    if kind == "simplex":
        if None in image:
            raise BadDiagram("Simplex maps are total")
        return SimplexMap(src, dst, image)
    return PartialMonotoneMap(src, dst, image)
