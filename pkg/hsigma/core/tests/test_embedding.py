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

from hsigma.core.embedding import (
    NORMAL_STEP, PRIMARY_CORE_STEP, RESIDUAL_NOT_HALL, block_residual,
    has_sylow_tower, is_h_sigma_embedded, is_hall_normally_embedded,
    is_hall_subnormally_embedded, is_hsigmaE, is_s_permutable,
    is_sigma_permutable, is_sigma_quasinormal, is_sigma_subnormal,
    residual_of_subgroup, sigma_carter_subgroups, sigma_nilpotent_residual,
    sigma_subnormal_subgroups, step_kind, validate_chain,
    validate_embedding, validate_hall_set)
from hsigma.core.exceptions import NotSigmaFull
from hsigma.core.group import (
    alternating_group, cyclic_group, dihedral_group, frobenius_group,
    symmetric_group)
from hsigma.core.lattice import all_subgroups, sylow_subgroups
from hsigma.core.partition import PrimePartition, parse_partition
from hsigma.utils import faults
from hsigma.utils.loggable import Logger


FINEST = PrimePartition(finest=True)
COARSEST = PrimePartition()


def _of_order(g, order):
    return [s for s in all_subgroups(g) if s.order == order]


class TestSigmaSubnormal(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True
        self.s3 = symmetric_group(3)
        self.c2 = _of_order(self.s3, 2)[0]
        self.c3 = _of_order(self.s3, 3)[0]

    def test_finest(self):
        self.assertIsNone(is_sigma_subnormal(FINEST, self.s3, self.c2))
        witness = is_sigma_subnormal(FINEST, self.s3, self.c3)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.chain[0], self.c3)
        self.assertTrue(witness.chain[-1].is_whole())
        self.assertTrue(validate_chain(FINEST, self.s3, witness, self.c3))
        self.assertEqual(
            [s.order for s in sigma_subnormal_subgroups(FINEST, self.s3)],
            [1, 3, 6])

    def test_primary_step(self):
        sigma = parse_partition('{2,3}')
        witness = is_sigma_subnormal(sigma, self.s3, self.c2)
        self.assertIsNotNone(witness)
        self.assertEqual(witness.steps[-1].kind, PRIMARY_CORE_STEP)
        self.assertTrue(validate_chain(sigma, self.s3, witness, self.c2))
        links = witness.describe(sigma)
        self.assertEqual(links[-1]['block'], '{2,3}')
        self.assertEqual(len(sigma_subnormal_subgroups(sigma, self.s3)), 6)

    def test_step_kind(self):
        step = step_kind(FINEST, self.s3, self.c3, self.s3.whole())
        self.assertEqual(step.kind, NORMAL_STEP)
        self.assertIsNone(step_kind(FINEST, self.s3, self.c2,
                                    self.s3.whole()))

    def test_validate_rejects_wrong_witness(self):
        witness = is_sigma_subnormal(FINEST, self.s3, self.c3)
        self.assertFalse(validate_chain(FINEST, self.s3, witness, self.c2))

    def test_normal_core_fault(self):
        with faults.injected_fault('normal-core'):
            witness = is_sigma_subnormal(FINEST, self.s3, self.c2)
            self.assertIsNotNone(witness)
            self.assertFalse(validate_chain(FINEST, self.s3, witness,
                                            self.c2))
        self.assertIsNone(is_sigma_subnormal(FINEST, self.s3, self.c2))

    def test_unknown_fault(self):
        with self.assertRaises(ValueError):
            with faults.injected_fault('does-not-exist'):
                pass


class TestEmbeddings(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True
        self.s3 = symmetric_group(3)
        self.c2 = _of_order(self.s3, 2)[0]
        self.c3 = _of_order(self.s3, 3)[0]

    def test_sigma_permutable(self):
        self.assertIsNone(is_sigma_permutable(FINEST, self.s3, self.c2))
        hall_set = is_sigma_permutable(FINEST, self.s3, self.c3)
        self.assertIsNotNone(hall_set)
        self.assertTrue(validate_hall_set(FINEST, self.s3, self.c3,
                                          hall_set))
        self.assertEqual(is_sigma_quasinormal(FINEST, self.s3, self.c3),
                         hall_set)

    def test_not_sigma_full(self):
        a5 = alternating_group(5)
        sigma = parse_partition('{2,5}')
        with self.assertRaises(NotSigmaFull):
            is_sigma_permutable(sigma, a5, a5.trivial())
        with self.assertRaises(NotSigmaFull):
            is_h_sigma_embedded(sigma, a5, a5.trivial(), 'permutable')

    def test_h_sigma_embedded(self):
        for kind in ('subnormal', 'permutable', 'normal'):
            witness = is_h_sigma_embedded(FINEST, self.s3, self.c2, kind)
            self.assertIsNotNone(witness, kind)
            self.assertTrue(witness.container.is_whole())
            self.assertTrue(validate_embedding(FINEST, self.s3, self.c2,
                                               witness))
            self.assertEqual(witness.describe(FINEST)['kind'], kind)
        with self.assertRaises(ValueError):
            is_h_sigma_embedded(FINEST, self.s3, self.c2, 'sideways')

    def test_not_embedded(self):
        s4 = symmetric_group(4)
        transposition = [s for s in _of_order(s4, 2)
                         if s <= _of_order(s4, 6)[0]][0]
        self.assertIsNone(
            is_h_sigma_embedded(FINEST, s4, transposition, 'normal'))
        self.assertFalse(is_hall_normally_embedded(s4, transposition))

    def test_classical(self):
        self.assertTrue(is_hall_normally_embedded(self.s3, self.c2))
        self.assertTrue(is_hall_subnormally_embedded(self.s3, self.c2))
        self.assertTrue(is_s_permutable(self.s3, self.c3))
        self.assertFalse(is_s_permutable(self.s3, self.c2))


class TestResiduals(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True

    def test_sigma_nilpotent_residual(self):
        s4 = symmetric_group(4)
        self.assertEqual(sigma_nilpotent_residual(FINEST, s4).order, 12)
        self.assertEqual(
            sigma_nilpotent_residual(FINEST, symmetric_group(3)).order, 3)
        self.assertTrue(
            sigma_nilpotent_residual(parse_partition('{2,3}'),
                                     s4).is_trivial())
        self.assertTrue(sigma_nilpotent_residual(COARSEST, s4).is_trivial())

    def test_residual_of_subgroup(self):
        s4 = symmetric_group(4)
        s3 = _of_order(s4, 6)[0]
        residual = residual_of_subgroup(FINEST, s4, s3)
        self.assertEqual(residual.order, 3)
        self.assertTrue(residual <= s3)

    def test_block_residual(self):
        s4 = symmetric_group(4)
        self.assertEqual(block_residual(FINEST, s4, 0).order, 12)
        self.assertEqual(block_residual(FINEST, s4, 1).order, 24)

    def test_sigma_carter(self):
        s4 = symmetric_group(4)
        carter = sigma_carter_subgroups(FINEST, s4)
        self.assertListEqual(carter, sylow_subgroups(s4, 2))
        self.assertEqual(len(sigma_carter_subgroups(FINEST,
                                                    symmetric_group(3))), 3)
        self.assertListEqual(sigma_carter_subgroups(COARSEST, s4),
                             [s4.whole()])

    def test_sylow_tower(self):
        self.assertFalse(has_sylow_tower(symmetric_group(4)))
        self.assertTrue(has_sylow_tower(symmetric_group(3)))
        self.assertTrue(has_sylow_tower(alternating_group(4)))
        self.assertTrue(has_sylow_tower(dihedral_group(8)))


class TestHsigmaE(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True

    def test_s3(self):
        report = is_hsigmaE(FINEST, symmetric_group(3))
        self.assertTrue(report.is_hsigmaE)
        self.assertEqual(report.residual.order, 3)
        self.assertEqual(report.complement.order, 2)
        self.assertTrue(report.describe()['hsigmaE'])

    def test_frobenius(self):
        report = is_hsigmaE(FINEST, frobenius_group(7, 3, 2))
        self.assertTrue(report.is_hsigmaE)
        self.assertEqual(report.residual.order, 7)

    def test_a4(self):
        report = is_hsigmaE(FINEST, alternating_group(4))
        self.assertTrue(report.is_hsigmaE)
        self.assertEqual(report.residual.order, 4)

    def test_sigma_nilpotent(self):
        report = is_hsigmaE(FINEST, cyclic_group(6))
        self.assertTrue(report.is_hsigmaE)
        self.assertTrue(report.residual.is_trivial())

    def test_residual_not_hall(self):
        report = is_hsigmaE(FINEST, symmetric_group(4))
        self.assertFalse(report.is_hsigmaE)
        self.assertEqual(report.failed_clause, RESIDUAL_NOT_HALL)
        self.assertEqual(report.describe()['failed_clause'],
                         RESIDUAL_NOT_HALL)

    def test_complement_filter(self):
        s3 = symmetric_group(3)
        report = is_hsigmaE(FINEST, s3, complement_filter=lambda m: False)
        self.assertFalse(report.is_hsigmaE)
        self.assertEqual(report.failed_clause, 'complement-condition')
