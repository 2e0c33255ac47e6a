# -*- coding: utf-8 -*-
#
# Copyright © 2023 The hsigma developers
#
# This library is free software; you can redistribute it and/or modify it under
# the terms of the GNU Lesser General Public License as published by the Free
# Software Foundation; either version 2.1 of the License, or (at your option)
# any later version.
#
# This library is distributed in the hope that it will be useful, but WITHOUT
# ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS
# FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more
# details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this library.  If not, see <http://www.gnu.org/licenses/>.

"""
Deliberate faults for exercising the harness.

Code that supports a fault checks `is_active`; memo keys that depend on
faulty code include `signature()` so that results computed under a
fault never leak into clean runs.
"""

import contextlib

KNOWN_FAULTS = ('normal-core',)

_ACTIVE = set()


def is_active(name):
    """Whether fault @name is currently injected"""
    return name in _ACTIVE


def signature():
    """A hashable summary of the active faults"""
    return tuple(sorted(_ACTIVE))


@contextlib.contextmanager
def injected_fault(name):
    """Activate fault @name for the duration of the block"""
    if name is None:
        yield
        return

    if name not in KNOWN_FAULTS:
        raise ValueError('Unknown fault %s, known faults: %s' %
                         (name, ', '.join(KNOWN_FAULTS)))

    already = name in _ACTIVE
    _ACTIVE.add(name)
    try:
        yield
    finally:
        if not already:
            _ACTIVE.discard(name)
