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

# pylint: disable=missing-docstring
# pylint: disable=invalid-name

import unittest

from hypothesis import given, settings, strategies as st
from sympy import divisor_count

from hsigma.core.bounds import Bounds
from hsigma.core.exceptions import (
    LatticeBoundExceeded, NotNormal, TrivialGroup)
from hsigma.core.group import (
    alternating_group, cyclic_group, dihedral_group, direct_product,
    generate, quaternion_group, symmetric_group)
from hsigma.core.lattice import (
    all_subgroups, center, centralizer, chief_series, commutator,
    complements, conjugacy_classes, conjugates, derived_series,
    frattini_subgroup, hall_subgroups, is_carter_subgroup, is_cyclic,
    is_cyclic_squarefree, is_dedekind, is_nilpotent, is_normal, is_soluble,
    is_subnormal, maximal_subgroups, minimal_normal_subgroups,
    nilpotent_residual, normal_closure, normal_core, normal_subgroups,
    normalizer, overgroups, permutes, product_set, quotient, sylow_subgroups)
from hsigma.utils.loggable import Logger


def _of_order(g, order):
    return [s for s in all_subgroups(g) if s.order == order]


class TestLattice(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True
        Bounds.reset()

    def tearDown(self):
        Bounds.reset()

    def test_subgroup_counts(self):
        self.assertEqual(len(all_subgroups(symmetric_group(3))), 6)
        self.assertEqual(len(all_subgroups(symmetric_group(4))), 30)
        self.assertEqual(len(all_subgroups(alternating_group(4))), 10)
        self.assertEqual(len(all_subgroups(quaternion_group())), 6)
        self.assertEqual(len(all_subgroups(dihedral_group(8))), 10)
        self.assertEqual(len(all_subgroups(alternating_group(5))), 59)

    def test_sorted_and_unique(self):
        subgroups = all_subgroups(symmetric_group(4))
        keys = [s.sort_key() for s in subgroups]
        self.assertListEqual(keys, sorted(keys))
        self.assertEqual(len({s.bits for s in subgroups}), len(subgroups))
        self.assertTrue(subgroups[0].is_trivial())
        self.assertTrue(subgroups[-1].is_whole())

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=1, max_value=40))
    def test_cyclic_subgroups_are_divisors(self, n):
        g = cyclic_group(n)
        self.assertEqual(len(all_subgroups(g)), int(divisor_count(n)))
        for sub in all_subgroups(g):
            self.assertEqual(n % sub.order, 0)

    def test_lattice_bound(self):
        Bounds.configure(lattice_bound=20)
        with self.assertRaises(LatticeBoundExceeded):
            all_subgroups(symmetric_group(4))
        self.assertEqual(len(all_subgroups(symmetric_group(3))), 6)

    def test_sylow(self):
        s4 = symmetric_group(4)
        self.assertEqual(len(sylow_subgroups(s4, 2)), 3)
        self.assertEqual(len(sylow_subgroups(s4, 3)), 4)
        self.assertTrue(all(p.order == 8 for p in sylow_subgroups(s4, 2)))
        a5 = alternating_group(5)
        self.assertEqual(len(sylow_subgroups(a5, 2)), 5)
        self.assertEqual(len(sylow_subgroups(a5, 3)), 10)
        self.assertEqual(len(sylow_subgroups(a5, 5)), 6)
        self.assertEqual(len(sylow_subgroups(s4, 5)), 1)

    def test_hall(self):
        a5 = alternating_group(5)
        self.assertEqual(len(hall_subgroups(a5, [2, 3])), 5)
        self.assertListEqual(hall_subgroups(a5, [3, 5]), [])
        self.assertEqual(len(hall_subgroups(symmetric_group(4), [2])), 3)

    def test_normal_subgroups(self):
        s4 = symmetric_group(4)
        self.assertListEqual([n.order for n in normal_subgroups(s4)],
                             [1, 4, 12, 24])
        self.assertEqual(len(normal_subgroups(alternating_group(5))), 2)
        self.assertEqual(len(normal_subgroups(quaternion_group())), 6)
        self.assertEqual(len(normal_subgroups(dihedral_group(8))), 6)
        for n in normal_subgroups(s4):
            self.assertTrue(is_normal(s4, n))

    def test_minimal_normal(self):
        self.assertListEqual(
            [n.order for n in minimal_normal_subgroups(symmetric_group(4))],
            [4])
        self.assertListEqual(
            [n.order for n in minimal_normal_subgroups(cyclic_group(6))],
            [2, 3])
        with self.assertRaises(TrivialGroup):
            minimal_normal_subgroups(cyclic_group(1))

    def test_conjugacy(self):
        s4 = symmetric_group(4)
        self.assertEqual(len(conjugacy_classes(s4)), 5)
        self.assertEqual(len(conjugacy_classes(cyclic_group(7))), 7)
        sylow = sylow_subgroups(s4, 2)[0]
        self.assertEqual(len(conjugates(s4, sylow)), 3)
        self.assertEqual(normalizer(s4, sylow), sylow)
        self.assertEqual(normalizer(s4, sylow_subgroups(s4, 3)[0]).order, 6)

    def test_closure_and_core(self):
        s3 = symmetric_group(3)
        c2 = _of_order(s3, 2)[0]
        self.assertEqual(normal_closure(s3, c2).order, 6)
        self.assertEqual(normal_core(s3, c2).order, 1)
        c3 = _of_order(s3, 3)[0]
        self.assertEqual(normal_core(s3, c3), c3)

    def test_center(self):
        self.assertEqual(center(quaternion_group()).order, 2)
        self.assertEqual(center(symmetric_group(3)).order, 1)
        self.assertEqual(center(cyclic_group(9)).order, 9)
        s3 = symmetric_group(3)
        c3 = _of_order(s3, 3)[0]
        self.assertEqual(centralizer(s3, c3.generators), c3)

    def test_quotient(self):
        s4 = symmetric_group(4)
        v4 = normal_subgroups(s4)[1]
        q = quotient(s4, v4)
        self.assertEqual(q.target.order, 6)
        self.assertEqual(q.target.name, 'sym(4)/4')
        self.assertFalse(is_nilpotent(q.target))
        a4 = normal_subgroups(s4)[2]
        self.assertEqual(q.image(a4).order, 3)
        self.assertEqual(q.preimage(q.image(a4)), a4)
        with self.assertRaises(NotNormal):
            quotient(s4, sylow_subgroups(s4, 2)[0])

    def test_series(self):
        s4 = symmetric_group(4)
        self.assertListEqual([d.order for d in derived_series(s4)],
                             [24, 12, 4, 1])
        self.assertEqual(commutator(s4, s4.whole(), s4.whole()).order, 12)
        self.assertEqual(nilpotent_residual(s4).order, 12)
        self.assertEqual(nilpotent_residual(symmetric_group(3)).order, 3)
        self.assertTrue(nilpotent_residual(dihedral_group(8)).is_trivial())
        self.assertTrue(is_soluble(s4))
        self.assertFalse(is_soluble(alternating_group(5)))

    def test_chief_series(self):
        s4 = symmetric_group(4)
        factors = chief_series(s4)
        self.assertListEqual([f.factor_order for f in factors], [4, 3, 2])
        self.assertEqual(factors[0].centralizer.order, 4)
        a4 = normal_subgroups(s4)[2]
        through = chief_series(s4, through=a4)
        self.assertTrue(any(f.top == a4 for f in through))
        with self.assertRaises(NotNormal):
            chief_series(s4, through=sylow_subgroups(s4, 3)[0])
        self.assertListEqual(
            [f.factor_order for f in chief_series(alternating_group(5))],
            [60])

    def test_frattini_and_maximal(self):
        self.assertEqual(frattini_subgroup(quaternion_group()).order, 2)
        self.assertEqual(frattini_subgroup(cyclic_group(4)).order, 2)
        self.assertTrue(frattini_subgroup(symmetric_group(4)).is_trivial())
        self.assertEqual(len(maximal_subgroups(symmetric_group(3))), 4)

    def test_overgroups(self):
        s4 = symmetric_group(4)
        sylow = sylow_subgroups(s4, 2)[0]
        self.assertListEqual([o.order for o in overgroups(s4, sylow)],
                             [8, 24])
        self.assertEqual(len(overgroups(s4, s4.trivial())), 30)

    def test_complements(self):
        s4 = symmetric_group(4)
        v4 = normal_subgroups(s4)[1]
        self.assertEqual(len(complements(s4, v4)), 4)
        c4 = cyclic_group(4)
        self.assertListEqual(complements(c4, generate(c4, [2])), [])

    def test_permutes(self):
        s3 = symmetric_group(3)
        c2s = _of_order(s3, 2)
        c3 = _of_order(s3, 3)[0]
        self.assertFalse(permutes(s3, c2s[0], c2s[1]))
        self.assertTrue(permutes(s3, c2s[0], c3))
        self.assertEqual(product_set(s3, c2s[0], c3), s3.whole().bits)

    def test_subnormal_and_carter(self):
        s3 = symmetric_group(3)
        c2 = _of_order(s3, 2)[0]
        self.assertFalse(is_subnormal(s3, c2))
        self.assertTrue(is_carter_subgroup(s3, c2))
        d8 = dihedral_group(8)
        self.assertTrue(all(is_subnormal(d8, s) for s in all_subgroups(d8)))
        s4 = symmetric_group(4)
        self.assertTrue(is_carter_subgroup(s4, sylow_subgroups(s4, 2)[0]))

    def test_predicates(self):
        self.assertTrue(is_cyclic(cyclic_group(12)))
        self.assertFalse(is_cyclic(direct_product(cyclic_group(2),
                                                  cyclic_group(2))))
        self.assertTrue(is_cyclic_squarefree(cyclic_group(6)))
        self.assertFalse(is_cyclic_squarefree(cyclic_group(4)))
        self.assertTrue(is_dedekind(quaternion_group()))
        self.assertTrue(is_dedekind(cyclic_group(12)))
        self.assertFalse(is_dedekind(dihedral_group(8)))
        self.assertTrue(is_nilpotent(quaternion_group()))
        self.assertFalse(is_nilpotent(symmetric_group(3)))
        self.assertTrue(is_nilpotent(cyclic_group(1)))
