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
Helpers that belong nowhere else.
"""


def all_subclasses(cls):
    """
    Every direct and indirect subclass of @cls, each listed once, in
    discovery order.
    """
    res = []
    for sub in cls.__subclasses__():
        for candidate in [sub] + all_subclasses(sub):
            if candidate not in res:
                res.append(candidate)
    return res
