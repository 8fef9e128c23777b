# Copyright (c) smi contributors. All Rights Reserved
#
# This source code is licensed under the BSD-style license found in the
# LICENSE file in the root directory of this source tree.

from __future__ import absolute_import, division, print_function, unicode_literals


class SmiError(Exception):
    """Base class of every error raised by the smi package."""
