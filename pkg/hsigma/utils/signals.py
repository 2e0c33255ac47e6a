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
Simple signalling system
"""

import inspect


class Slot:
    """A callback plus the extra arguments it was connected with"""
    # pylint: disable=too-few-public-methods

    def __init__(self, func, *extra_args):
        self.extra_args = extra_args
        if inspect.ismethod(func):
            self.obj = func.__self__
            self.func = func.__func__
        else:
            self.obj = None
            self.func = func

    def __hash__(self):
        return hash((self.func, self.extra_args))

    def __eq__(self, other):
        return (self.func, self.extra_args, self.obj) == (
            other.func, other.extra_args, other.obj)

    def __call__(self, *args, **kwargs):
        _args = []
        if self.obj is not None:
            _args.append(self.obj)

        _args += list(args) + list(self.extra_args)
        return self.func(*_args, **kwargs)


class Signal:
    """
    Callbacks run in connection order, `connect_after` ones last.

    Emitting returns the list of callback results.
    """

    def __init__(self):
        self._functions = {}
        self._after_functions = {}

    def __call__(self, *args, **kwargs):
        return [func(*args, **kwargs)
                for func in list(self._functions) +
                list(self._after_functions)]

    def connect(self, slot, *extra_args):
        """Banana banana"""
        self._functions[Slot(slot, *extra_args)] = None

    def connect_after(self, slot, *extra_args):
        """Banana banana"""
        self._after_functions[Slot(slot, *extra_args)] = None

    def disconnect(self, slot, *extra_args):
        """Disconnect @slot from the signal"""
        slot = Slot(slot, *extra_args)
        self._functions.pop(slot, None)
        self._after_functions.pop(slot, None)

    def clear(self):
        """Banana banana"""
        self._functions.clear()
        self._after_functions.clear()
