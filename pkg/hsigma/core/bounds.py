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
Process-wide size bounds for dense tables and lattice enumeration.
"""

import os

from hsigma.core.exceptions import OrderBoundExceeded, LatticeBoundExceeded
from hsigma.utils.configurable import Configurable

DEFAULT_MAX_ORDER = 1500
DEFAULT_LATTICE_BOUND = 1500


def _env_lattice_bound():
    value = os.getenv('SIGMA_LATTICE_BOUND')
    if value is None:
        return DEFAULT_LATTICE_BOUND
    return int(value)


class Bounds(Configurable):
    """
    Holds the dense-order bound and the full-lattice bound.

    Groups above `max_order` are never materialized, and
    `core.lattice.all_subgroups` refuses groups above `lattice_bound`.
    """

    max_order = DEFAULT_MAX_ORDER
    lattice_bound = _env_lattice_bound()

    @staticmethod
    def add_arguments(parser):
        group = parser.add_argument_group(
            'Bounds', 'size limits for dense groups')
        group.add_argument('--max-order', type=int, dest='max_order',
                           default=DEFAULT_MAX_ORDER,
                           help='Largest group order that gets a Cayley '
                           'table (default %d)' % DEFAULT_MAX_ORDER)
        group.add_argument('--lattice-bound', type=int, dest='lattice_bound',
                           default=None,
                           help='Largest group order whose full subgroup '
                           'lattice may be enumerated (default %d, or '
                           'SIGMA_LATTICE_BOUND)' % DEFAULT_LATTICE_BOUND)

    @staticmethod
    def parse_config(config):
        Bounds.configure(config.get('max_order'),
                         config.get('lattice_bound'))

    @staticmethod
    def configure(max_order=None, lattice_bound=None):
        """Set the bounds, leaving unset ones untouched"""
        if max_order is not None:
            if max_order <= 0:
                raise ValueError('max order must be positive')
            Bounds.max_order = max_order
        if lattice_bound is not None:
            if lattice_bound <= 0:
                raise ValueError('lattice bound must be positive')
            Bounds.lattice_bound = lattice_bound

    @staticmethod
    def snapshot():
        """The current bounds, suitable for shipping to worker processes"""
        return (Bounds.max_order, Bounds.lattice_bound)

    @staticmethod
    def reset():
        """Back to the defaults"""
        Bounds.max_order = DEFAULT_MAX_ORDER
        Bounds.lattice_bound = _env_lattice_bound()

    @staticmethod
    def check_order(order):
        """Raise `OrderBoundExceeded` when @order is above the dense bound"""
        if order > Bounds.max_order:
            raise OrderBoundExceeded(
                'Group of order %d exceeds the dense bound %d' %
                (order, Bounds.max_order), order=order,
                bound=Bounds.max_order)

    @staticmethod
    def check_lattice(order):
        """Raise `LatticeBoundExceeded` when @order is above the lattice
        bound"""
        if order > Bounds.lattice_bound:
            raise LatticeBoundExceeded(
                'Subgroup lattice of a group of order %d requested, the '
                'lattice bound is %d' % (order, Bounds.lattice_bound),
                order=order, bound=Bounds.lattice_bound)
