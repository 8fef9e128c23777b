# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

"""Handy helpers for reading run-time settings"""

from __future__ import absolute_import, division, print_function, unicode_literals

import os

from smi import sai


def get_node_limit() -> int:
    """Return the oracle node limit, SMI_NODE_LIMIT when it is set"""

    limit = os.getenv("SMI_NODE_LIMIT")
    if limit:
        if not limit.isdigit() or int(limit) <= 0:
            raise ValueError("SMI_NODE_LIMIT is invalid: %s" % limit)
        return int(limit)

    return sai.DEFAULT_NODE_LIMIT


def parse_shape(text):
    """'1,2,2' as a tuple of sizes."""
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError("Invalid shape: %s" % text) from None
    if any(size < 0 for size in sizes):
        raise ValueError("Invalid shape: %s" % text)
    return sizes
