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
σ-arithmetic over groups: signatures, σ-Hall tests, complete Hall σ-sets,
σ-nilpotency, σ-solubility and σ-bases.

Functions accepting "a group" take either a `GroupTable` or a
`SubgroupRef`; only the order matters for the arithmetic predicates.
"""

import itertools

from sympy import primefactors

from hsigma.core.exceptions import UnknownBlock
from hsigma.core.group import generate
from hsigma.core.lattice import (
    chief_series, hall_subgroups, permutes, prime_part)
from hsigma.core.partition import SigmaSignature, label_sort_key


def pi(n):
    """π(n)"""
    return frozenset(primefactors(n))


def sigma_of_int(sigma, n):
    """σ(n): labels of the blocks meeting π(n), empty for n = 1"""
    return SigmaSignature(frozenset(sigma.labels_of(primefactors(n))))


def sigma_of(sigma, group):
    """σ(|group|)"""
    return sigma_of_int(sigma, group.order)


def sigma_part(sigma, n, labels):
    """The largest divisor of @n whose primes all lie in blocks @labels"""
    labels = set(labels)
    part = 1
    for p in primefactors(n):
        if sigma.label_of(p) in labels:
            part *= prime_part(n, p)
    return part


def is_sigma_number(sigma, n, labels):
    """Whether σ(n) ⊆ @labels"""
    return sigma_part(sigma, n, labels) == n


def is_sigma_primary(sigma, group):
    """At most one block divides the order"""
    return len(sigma_of(sigma, group)) <= 1


def is_sigma_hall(sigma, container, a):
    """
    σ(|a|) ∩ σ(|container : a|) = ∅

    @container is the group (table or subgroup) @a is measured in.
    """
    index = container.order // a.order
    return sigma_of_int(sigma, a.order).isdisjoint(sigma_of_int(sigma, index))


class HallSigmaSet:
    """
    One Hall σ_i-subgroup per block of σ(G), keyed by block label and
    ordered with the residual block last.
    """

    def __init__(self, members):
        self.__members = tuple(sorted(members.items(),
                                      key=lambda item: label_sort_key(item[0])))

    def __getitem__(self, label):
        for key, sub in self.__members:
            if key == label:
                return sub
        raise KeyError(label)

    def __iter__(self):
        return iter(sub for _, sub in self.__members)

    def __len__(self):
        return len(self.__members)

    def __eq__(self, other):
        if not isinstance(other, HallSigmaSet):
            return NotImplemented
        return self.__members == other.__members

    def __hash__(self):
        return hash(tuple((k, s.bits) for k, s in self.__members))

    def __repr__(self):
        return '<HallSigmaSet %s>' % ', '.join(
            '%s: %d' % (k, s.order) for k, s in self.__members)

    def items(self):
        """(label, subgroup) pairs"""
        return self.__members

    def labels(self):
        """Banana banana"""
        return [k for k, _ in self.__members]

    def describe(self, sigma):
        """Block name → member order"""
        return {sigma.label_name(k): s.order for k, s in self.__members}


def hall_block_subgroups(sigma, g, label):
    """
    Hall σ_i-subgroups of @g for the block @label

    Raises:
        UnknownBlock: if the block does not meet π(G)
    """
    if label not in sigma_of(sigma, g):
        raise UnknownBlock('Block %s does not meet π(G) = %s' % (
            sigma.label_name(label), sorted(pi(g.order))))
    return hall_subgroups(g, sigma.block_primes(label, pi(g.order)))


def hall_pi_subgroups(sigma, g, labels):
    """Hall Π-subgroups for the set of block labels @labels"""
    labels = set(labels)
    primes = [p for p in pi(g.order) if sigma.label_of(p) in labels]
    return hall_subgroups(g, primes)


def complete_hall_sigma_sets(sigma, g):
    """
    Every complete Hall σ-set, in lexicographic order of the members.

    Empty exactly when @g is not σ-full.
    """
    def build():
        labels = list(sigma_of(sigma, g))
        choices = [hall_block_subgroups(sigma, g, label) for label in labels]
        return [HallSigmaSet(dict(zip(labels, combo)))
                for combo in itertools.product(*choices)]
    return g.memoize(('hall-sigma-sets', sigma.key), build)


def first_hall_sigma_set(sigma, g):
    """The lexicographically first complete Hall σ-set, or None"""
    labels = list(sigma_of(sigma, g))
    members = {}
    for label in labels:
        halls = hall_block_subgroups(sigma, g, label)
        if not halls:
            return None
        members[label] = halls[0]
    return HallSigmaSet(members)


def is_sigma_full(sigma, g):
    """Whether @g possesses a complete Hall σ-set"""
    return all(hall_block_subgroups(sigma, g, label)
               for label in sigma_of(sigma, g))


def normal_hall_subgroup(g, primes):
    """
    The normal Hall subgroup for @primes, or None.

    It exists exactly when the subgroup generated by all elements of
    @primes-order has the full @primes-part of |G| as its order.
    """
    primes = frozenset(primes)
    target = 1
    for p in pi(g.order) & primes:
        target *= prime_part(g.order, p)

    orders = g.element_orders()
    elements = [x for x in range(1, g.order)
                if pi(int(orders[x])) <= primes]
    candidate = generate(g, elements)
    if candidate.order == target:
        return candidate
    return None


def is_sigma_nilpotent(sigma, g):
    """Every block of σ(G) has a normal Hall subgroup"""
    def build():
        for label in sigma_of(sigma, g):
            primes = sigma.block_primes(label, pi(g.order))
            if normal_hall_subgroup(g, primes) is None:
                return False
        return True
    return g.memoize(('sigma-nilpotent', sigma.key), build)


def is_sigma_soluble(sigma, g):
    """Every chief factor is σ-primary"""
    return all(len(sigma_of_int(sigma, f.factor_order)) <= 1
               for f in chief_series(g))


def sigma_basis(sigma, g):
    """The first complete Hall σ-set whose members pairwise permute"""
    for hall_set in complete_hall_sigma_sets(sigma, g):
        members = list(hall_set)
        if all(permutes(g, a, b)
               for a, b in itertools.combinations(members, 2)):
            return hall_set
    return None
