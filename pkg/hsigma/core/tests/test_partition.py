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

from hypothesis import given, strategies as st

from hsigma.core.exceptions import OverlappingBlocks, PartitionParseError
from hsigma.core.partition import (
    RESIDUAL, PrimePartition, parse_partition, render_partition)
from hsigma.utils.loggable import Logger


BLOCK_TEXTS = ['{2}', '{3}', '{5}', '{7}', '{2,3}', '{5,7}', '{11,13}']


class TestPartitionParser(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True

    def test_named(self):
        self.assertTrue(parse_partition('finest').finest)
        self.assertTrue(parse_partition(' finest ').finest)
        coarsest = parse_partition('coarsest')
        self.assertEqual(coarsest.blocks, ())
        self.assertEqual(coarsest.label_of(101), RESIDUAL)
        self.assertEqual(parse_partition('rest'), coarsest)

    def test_blocks(self):
        sigma = parse_partition('{2,3}|{5}|rest')
        self.assertEqual(sigma.label_of(2), 0)
        self.assertEqual(sigma.label_of(3), 0)
        self.assertEqual(sigma.label_of(5), 1)
        self.assertEqual(sigma.label_of(7), RESIDUAL)
        self.assertEqual(sigma.render(), '{2,3}|{5}|rest')

    def test_rest_is_implied(self):
        self.assertEqual(parse_partition('{5} | {2, 3}').render(),
                         '{5}|{2,3}|rest')
        self.assertEqual(parse_partition('{3,2}'), parse_partition('{2,3}|rest'))
        self.assertEqual(hash(parse_partition('{3,2}')),
                         hash(parse_partition('{2,3}|rest')))

    def test_finest_labels(self):
        sigma = PrimePartition(finest=True)
        self.assertEqual(sigma.label_of(2), 0)
        self.assertEqual(sigma.label_of(3), 1)
        self.assertEqual(sigma.label_of(5), 2)
        self.assertEqual(sigma.label_name(2), '{5}')
        self.assertEqual(render_partition(sigma), 'finest')

    def test_restrict(self):
        sigma = parse_partition('{2,3}|{5}')
        self.assertListEqual(sigma.restrict({2, 3, 5, 7}), [
            (0, frozenset({2, 3})), (1, frozenset({5})),
            (RESIDUAL, frozenset({7}))])
        self.assertListEqual(sigma.restrict({7, 11}),
                             [(RESIDUAL, frozenset({7, 11}))])
        self.assertEqual(sigma.label_name(RESIDUAL), 'rest')

    def test_not_a_prime(self):
        with self.assertRaises(PartitionParseError) as cm:
            parse_partition('{2,4}')
        self.assertEqual(cm.exception.position, 3)

    def test_overlap(self):
        with self.assertRaises(OverlappingBlocks) as cm:
            parse_partition('{2}|{3,2}')
        self.assertEqual(cm.exception.prime, 2)
        self.assertEqual(cm.exception.position, 7)
        with self.assertRaises(OverlappingBlocks):
            PrimePartition([{2}, {2, 3}])

    def test_syntax_errors(self):
        for text, position in (('{}', 1), ('{2', 2), ('{2}|', 4),
                               ('rest|{2}', 4), ('{2}{3}', 3),
                               ('2,3', 0)):
            with self.assertRaises(PartitionParseError) as cm:
                parse_partition(text)
            self.assertEqual(cm.exception.position, position, text)
            self.assertIn('^', cm.exception.message)

    def test_constructor_errors(self):
        with self.assertRaises(PartitionParseError):
            PrimePartition([{4}])
        with self.assertRaises(PartitionParseError):
            PrimePartition([set()])
        with self.assertRaises(PartitionParseError):
            PrimePartition([{2}], finest=True)

    @given(st.lists(st.sampled_from(BLOCK_TEXTS), min_size=1, max_size=3,
                    unique=True))
    def test_render_parses_back(self, blocks):
        primes = [t.strip('{}').split(',') for t in blocks]
        flat = [p for block in primes for p in block]
        text = '|'.join(blocks)
        if len(flat) != len(set(flat)):
            with self.assertRaises(OverlappingBlocks):
                parse_partition(text)
            return
        sigma = parse_partition(text)
        self.assertEqual(parse_partition(sigma.render()), sigma)
