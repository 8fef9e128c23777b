#!/usr/bin/env python
# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""
Command line interface to the SMI coherence engine.

Usage:
  smi canon-sai "(p/\\q)\\/(s/\\t)" "(p\\/s)/\\(q\\/t)"
  smi equal --explain "ck(p;q;s;t)" "ck(p;q;s;t)"
  smi simp render "d(0)@1"
  smi bar omega --n 2 --m 1 --shape 1,2,2 F G

Objects use the ASCII syntax of ``smi.parser``; terms are read as M^st terms
unless --free is given.  Exit status is 0 on success, 2 on bad input, and 1
when --strict is set and the answer is NONE, UNKNOWN, UNDECIDED or
UNREACHABLE.  The bar options may come before or after the action.
"""

from __future__ import absolute_import, division, print_function, unicode_literals

import argparse
import json
import logging
import random
import sys

from smi import (
    SmiError,
    bar,
    decision,
    formula,
    parser,
    sai,
    simplicial,
    strict,
    terms,
    unit_norm,
    utils,
)


logger = logging.getLogger("smi")

NONE = "NONE"


class _Printer(object):
    def __init__(self, unicode):
        self.unicode = unicode

    def obj(self, value):
        return formula.render(value, self.unicode)

    def term(self, value):
        return terms.render_term(value, self.unicode)


def _flavor(opts):
    return "free" if opts.free else "strict"


def _algebra(opts):
    return formula.FREE if opts.free else strict.STRICT


def _object(opts, text):
    return parser.parse_formula(text) if opts.free else parser.parse_strict(text)


def cmd_nu(opts, out):
    a = _object(opts, opts.object)
    reduced = formula.nu(a) if opts.free else strict.nu(a)
    return True, {"result": out.obj(reduced), "source": out.obj(a)}


def cmd_purity(opts, out):
    a = _object(opts, opts.object)
    purity = formula.purity(a) if opts.free else strict.purity(a)
    if purity.pure:
        result = "pure"
    elif purity.bot_pure:
        result = "bot-pure"
    elif purity.top_pure:
        result = "top-pure"
    else:
        result = "impure"
    return True, {
        "result": result,
        "bot_pure": purity.bot_pure,
        "top_pure": purity.top_pure,
    }


def cmd_canon_sai(opts, out):
    x, y = parser.parse_formset(opts.source), parser.parse_formset(opts.target)
    found = sai.canonical_sai_arrow(x, y)
    if found is None:
        return False, {"result": NONE, "source": out.obj(x), "target": out.obj(y)}
    return True, {
        "result": out.term(found),
        "source": out.obj(x),
        "target": out.obj(y),
        "ck_count": terms.ck_count(found),
    }


def cmd_canon_arrow(opts, out):
    a, b = parser.parse_strict(opts.source), parser.parse_strict(opts.target)
    found = decision.canonical_arrow(a, b)
    payload = {"source": out.obj(a), "target": out.obj(b)}
    if found is None:
        payload["result"] = NONE
        return False, payload
    if found is decision.UNDECIDED:
        payload["result"] = str(decision.UNDECIDED)
        return False, payload
    payload["result"] = out.term(found)
    return True, payload


def cmd_equal(opts, out):
    f = parser.parse_term(opts.f, _flavor(opts))
    g = parser.parse_term(opts.g, _flavor(opts))
    equality = decision.equal_arrows(f, g, _algebra(opts))
    payload = {"result": equality.verdict.value, "verdict": equality.verdict.value}
    if opts.explain:
        payload["evidence"] = equality.evidence
    return equality.verdict is not decision.Verdict.UNKNOWN, payload


def cmd_develop(opts, out):
    f = parser.parse_term(opts.term, _flavor(opts))
    factors = terms.develop(f, _algebra(opts))
    return True, {"result": [out.term(factor) for factor in factors]}


def cmd_ck_count(opts, out):
    f = parser.parse_term(opts.term, _flavor(opts))
    terms.typecheck(f, _algebra(opts))
    return True, {"result": str(terms.ck_count(f))}


def cmd_unit_reduce(opts, out):
    f = parser.parse_term(opts.term, "strict")
    reduced = unit_norm.unit_reduce(f)
    typed = terms.typecheck(reduced)
    return True, {
        "result": out.term(reduced),
        "source": out.obj(typed.source),
        "target": out.obj(typed.target),
    }


def cmd_simp(opts, out):
    f = parser.parse_simplex(opts.f)
    if opts.action == "compose":
        if opts.g is None:
            raise SmiError("simp compose needs two maps")
        g = parser.parse_simplex(opts.g)
        result = simplicial.compose_simplex(g, f)
        return True, {"result": str(result), "word": simplicial.simplex_word(result)}
    if opts.action == "hj":
        return True, {"result": str(simplicial.hj(f))}
    return True, {"result": simplicial.render_ascii(f)}


def _shape(opts):
    return bar.Shape(opts.n, opts.m, utils.parse_shape(opts.shape))


def cmd_bar(opts, out):
    shape = _shape(opts)
    letters = bar.fresh_letters(shape)
    maps = [parser.parse_productmap(text) for text in opts.maps]
    expected = {"eval": 1, "omega": 2, "laxcheck": 3}[opts.action]
    if len(maps) != expected:
        raise SmiError("bar %s takes %d product maps" % (opts.action, expected))
    if opts.action == "eval":
        result = bar.bar_eval(maps[0], letters)
        return True, {
            "result": result.render(out.unicode),
            "tuples": [letters.render(out.unicode), result.render(out.unicode)],
        }
    if opts.action == "omega":
        witness = bar.omega(maps[0], maps[1], letters)
        return True, {
            "result": [out.term(cell) for cell in witness.cells],
            "cells": [out.term(cell) for cell in witness.cells],
            "source": witness.source.render(out.unicode),
            "target": witness.target.render(out.unicode),
        }
    report = bar.lax_check(maps[0], maps[1], maps[2], letters)
    return report.commutes, {
        "result": "COMMUTES" if report.commutes else "UNKNOWN",
        "cells": [verdict.value for verdict in report.cells],
        "coherent": report.coherent,
    }


def cmd_oracle(opts, out):
    x, y = parser.parse_formset(opts.source), parser.parse_formset(opts.target)
    limit = opts.limit or utils.get_node_limit()
    found = sai.reachability_oracle(x, y, limit)
    payload = {
        "result": "REACHABLE" if found.exists else "UNREACHABLE",
        "lengths": sorted(found.all_path_lengths),
    }
    if found.exists:
        path = sai.sample_path(x, y, random.Random(opts.seed), limit)
        payload["witness"] = [out.obj(node) for node in path]
    return found.exists, payload


def _emit(opts, payload, stream):
    if opts.json:
        print(json.dumps(payload, sort_keys=True, ensure_ascii=False), file=stream)
        return
    result = payload["result"]
    for line in result if isinstance(result, list) else [result]:
        print(line, file=stream)
    for key, value in sorted(payload.get("evidence", {}).items()):
        print("%s: %s" % (key, json.dumps(value, sort_keys=True, ensure_ascii=False)), file=stream)


def _parser():
    p = argparse.ArgumentParser(prog="smi", description="SMI coherence engine.")
    p.add_argument("--json", action="store_true", help="Print one JSON document.")
    p.add_argument("--seed", type=int, default=0, help="Seed for sampled output.")
    p.add_argument(
        "--strict",
        action="store_true",
        help="Exit with status 1 on NONE, UNKNOWN, UNDECIDED and UNREACHABLE.",
    )
    p.add_argument("--unicode", action="store_true", help="Print with unicode symbols.")
    p.add_argument("--verbose", action="store_true", help="Log debug messages.")
    p.add_argument(
        "--free",
        action="store_true",
        help="Read terms and objects over formulae instead of strict objects.",
    )
    sub = p.add_subparsers(dest="command")
    sub.required = True

    for name, handler, arg in (
        ("nu", cmd_nu, "object"),
        ("purity", cmd_purity, "object"),
        ("develop", cmd_develop, "term"),
        ("ck-count", cmd_ck_count, "term"),
        ("unit-reduce", cmd_unit_reduce, "term"),
    ):
        command = sub.add_parser(name)
        command.add_argument(arg)
        command.set_defaults(handler=handler)

    for name, handler in (("canon-sai", cmd_canon_sai), ("canon-arrow", cmd_canon_arrow)):
        command = sub.add_parser(name)
        command.add_argument("source")
        command.add_argument("target")
        command.set_defaults(handler=handler)

    command = sub.add_parser("equal")
    command.add_argument("f")
    command.add_argument("g")
    command.add_argument("--explain", action="store_true", help="Print the evidence.")
    command.set_defaults(handler=cmd_equal)

    command = sub.add_parser("simp")
    command.add_argument("action", choices=["compose", "hj", "render"])
    command.add_argument("f", help="The map applied first.")
    command.add_argument("g", nargs="?", help="The map applied second.")
    command.set_defaults(handler=cmd_simp)

    command = sub.add_parser("bar")
    command.add_argument("action", choices=["eval", "omega", "laxcheck"])
    command.add_argument("--n", type=int, required=True, help="Number of \\/ levels.")
    command.add_argument("--m", type=int, required=True, help="Number of /\\ levels.")
    command.add_argument("--shape", required=True, help="Sizes k1,k2,...")
    command.add_argument(
        "--maps", action="append", default=[], help="A product map 'f_1 ; f_2 ; ...'."
    )
    command.add_argument("positional_maps", nargs="*", metavar="MAP")
    command.set_defaults(handler=cmd_bar)

    command = sub.add_parser("oracle")
    command.add_argument("action", choices=["reach"])
    command.add_argument("source")
    command.add_argument("target")
    command.add_argument("--limit", type=int, default=None, help="Node limit.")
    command.set_defaults(handler=cmd_oracle)
    return p


def main(args=None):
    p = _parser()
    # Maps given after the bar options arrive as leftovers.
    opts, extra = p.parse_known_args(args)
    unknown = [arg for arg in extra if opts.command != "bar" or arg.startswith("-")]
    if unknown:
        p.error("unrecognized arguments: %s" % " ".join(unknown))
    logging.basicConfig(
        level=logging.DEBUG if opts.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(message)s",
    )
    if opts.command == "bar":
        opts.maps = opts.maps + opts.positional_maps + extra
    out = _Printer(opts.unicode)
    try:
        ok, payload = opts.handler(opts, out)
    except (SmiError, ValueError) as e:
        print("smi: error: %s" % e, file=sys.stderr)
        return 2
    logger.info("%s: %s", opts.command, payload["result"])
    _emit(opts, payload, sys.stdout)
    if opts.strict and not ok:
        return 1
    return 0


def invoke_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    invoke_main()  # pragma: no cover
