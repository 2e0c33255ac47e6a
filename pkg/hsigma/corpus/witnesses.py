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
Arithmetic checks for the ex1.2ii and ex1.2iii constructions, which are
too large for dense tables.

Only orders and σ-signatures are verified: the subgroup orders follow
from the construction (a simple faithful F_p-module of the acting group
has dimension the multiplicative order of p modulo the prime of its
Fitting subgroup), and σ-Hall claims reduce to
σ(|A|) ∩ σ(|V : A|) = ∅.
"""

from sympy import factorint, n_order

from hsigma.core.exceptions import UnknownEntry
from hsigma.core.partition import parse_partition
from hsigma.core.sigma import sigma_of_int
from hsigma.harness.lemmas import Violation

# r² divides q - 1 and p > q > r
EX_1_2_II_PRIMES = (7, 5, 2)
EX_1_2_II_ORDER = 48020
EX_1_2_III_ORDER = 1677060


def _sigma_hall(sigma, order, index):
    return sigma_of_int(sigma, order).isdisjoint(sigma_of_int(sigma, index))


def _ex_1_2_ii():
    p, q, r = EX_1_2_II_PRIMES
    dim = n_order(p, q)
    module = p ** dim
    order = module * q * r * r
    sigma = parse_partition('{%d,%d}|rest' % (q, r))
    v = module * r

    yield ('parameters', p > q > r and (q - 1) % (r * r) == 0, True,
           {'p': p, 'q': q, 'r': r})
    yield ('order', order == EX_1_2_II_ORDER, True,
           {'module_dimension': dim, 'order': order})
    yield ('R1-sigma-hall-in-V', _sigma_hall(sigma, r, v // r), True,
           {'R1': r, 'V': v, 'sigma': sigma.render()})
    yield ('V-index-sigma-primary',
           len(sigma_of_int(sigma, order // v)) == 1, True,
           {'index': order // v, 'sigma': sigma.render()})
    yield ('R1-not-hall', _sigma_hall(sigma, r, order // r), False,
           {'R1': r, 'G': order, 'sigma': sigma.render()})


def _ex_1_2_iii():
    dim = n_order(11, 7)
    module = 11 ** dim
    order = module * 21 * 60
    m = module * 7 * 60
    b = 12

    yield ('order', order == EX_1_2_III_ORDER, True,
           {'module_dimension': dim, 'order': order})
    yield ('M-index', order // m == 3 and factorint(order // m) == {3: 1},
           True, {'M': m})
    for spec, expected in (('{5,7,11}|rest', True), ('{7}|rest', False)):
        sigma = parse_partition(spec)
        yield ('B-sigma-hall-in-M', _sigma_hall(sigma, b, m // b), expected,
               {'B': b, 'M': m, 'sigma': sigma.render()})


_CHECKS = {
    'ex1.2ii': _ex_1_2_ii,
    'ex1.2iii': _ex_1_2_iii,
}


def arithmetic_entries():
    """Banana banana"""
    return list(_CHECKS)


def arithmetic_witness_checks(name):
    """
    Run the arithmetic checks of example @name.

    Returns:
        list: of `Violation`, one per check whose outcome differs from
            the expected one

    Raises:
        UnknownEntry
    """
    if name not in _CHECKS:
        raise UnknownEntry('No arithmetic checks for %s' % name)

    violations = []
    for clause, holds, expected, inst in _CHECKS[name]():
        if holds != expected:
            violations.append(Violation(
                '%s:%s' % (name, clause),
                'expected %s, computed %s' % (expected, holds), inst))
    return violations
