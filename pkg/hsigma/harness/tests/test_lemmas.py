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

from hsigma.core.exceptions import NotSigmaFull
from hsigma.core.group import (
    alternating_group, cyclic_group, dihedral_group, frobenius_group,
    symmetric_group)
from hsigma.core.partition import PrimePartition, parse_partition
from hsigma.core.sigma import complete_hall_sigma_sets
from hsigma.harness.checks import CHECKS, run_check, suite_report
from hsigma.harness.degeneration import DegenerationSuite, degeneration_suite
from hsigma.harness.lemmas import LemmaBudget, LemmaSuite, lemma_suite
from hsigma.harness.reports import ALL_HOLD
from hsigma.utils import faults
from hsigma.utils.loggable import Logger


FINEST = PrimePartition(finest=True)
SMALL = LemmaBudget(samples_per_clause=8)


class TestLemmaSuite(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True

    def test_no_violations(self):
        for g in (symmetric_group(3), symmetric_group(4),
                  alternating_group(4), frobenius_group(7, 3, 2)):
            for spec in ('finest', '{2}|rest', 'coarsest'):
                violations = lemma_suite(parse_partition(spec), g, SMALL)
                self.assertListEqual(
                    violations, [],
                    '%s %s %s' % (g, spec, [v.to_json() for v in violations]))

    def test_clauses_recorded(self):
        suite = LemmaSuite(FINEST, symmetric_group(3), SMALL)
        suite.run()
        for clause in ('2.9', 'witness-soundness', 'residual-oracle'):
            self.assertIn(clause, suite.instances)
        self.assertGreater(suite.instances['residual-oracle'], 0)
        self.assertGreater(suite.instances['2.9'], 0)

    def test_sigma_full_clauses_skipped(self):
        # A5 has no Hall {2,5}-subgroup
        suite = LemmaSuite(parse_partition('{2,5}'), alternating_group(5),
                           SMALL)
        self.assertListEqual(suite.run(), [])
        self.assertFalse(suite.full)
        self.assertFalse(any(clause.startswith('2.2')
                             for clause in suite.instances))

    def test_budget_bounds_samples(self):
        suite = LemmaSuite(FINEST, symmetric_group(4),
                           LemmaBudget(samples_per_clause=2))
        suite.run()
        self.assertLessEqual(suite.instances['witness-soundness'], 2 * 5)

    def test_basis_found_beyond_the_budget(self):
        # 49 complete Hall σ-sets, 7 of them σ-bases
        g = frobenius_group(7, 6, 3)
        self.assertEqual(len(complete_hall_sigma_sets(FINEST, g)), 49)
        for samples in (1, 2, 3):
            suite = LemmaSuite(FINEST, g,
                               LemmaBudget(samples_per_clause=samples))
            suite.run()
            self.assertTrue(suite.soluble)
            self.assertListEqual(suite.violations_of('2.6(i)'), [])
            self.assertGreaterEqual(suite.instances['2.6(i)'], 2)

    def test_deterministic(self):
        first = LemmaSuite(FINEST, symmetric_group(4),
                           LemmaBudget(samples_per_clause=3, seed=7))
        first.run()
        second = LemmaSuite(FINEST, symmetric_group(4),
                            LemmaBudget(samples_per_clause=3, seed=7))
        second.run()
        self.assertEqual(first.instances, second.instances)

    def test_injected_fault_is_caught(self):
        with faults.injected_fault('normal-core'):
            suite = LemmaSuite(FINEST, symmetric_group(3), SMALL)
            violations = suite.run()
        self.assertTrue(violations)
        self.assertTrue(suite.violations_of('witness-soundness'))
        # the fault does not outlive the context
        self.assertListEqual(lemma_suite(FINEST, symmetric_group(3), SMALL),
                             [])


class TestDegeneration(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True

    def test_no_violations(self):
        for g in (symmetric_group(3), symmetric_group(4), cyclic_group(12),
                  dihedral_group(8), frobenius_group(5, 4, 2)):
            violations = degeneration_suite(g)
            self.assertListEqual(violations, [],
                                 [v.to_json() for v in violations])

    def test_clauses(self):
        suite = DegenerationSuite(symmetric_group(3))
        suite.run()
        self.assertListEqual(list(suite.instances), [
            'normally-embedded', 's-permutable', 'subnormal', 'nilpotent',
            'residual', 'carter', 'coarsest'])
        # 6 subgroups and 3 flags at the coarsest partition
        self.assertEqual(suite.instances['coarsest'], 9)


class TestChecks(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True

    def test_dispatch(self):
        s3 = symmetric_group(3)
        for check in ('thm13', 'thm14', 'thm17', 'thm19'):
            reports = run_check(check, FINEST, s3, group_spec='s3')
            self.assertEqual(len(reports), 1)
            self.assertEqual(reports[0].group_spec, 's3')
            self.assertEqual(reports[0].theorem_id, '1.' + check[-1])
        reports = run_check('corollaries', FINEST, s3)
        self.assertEqual(len(reports), 4)
        reports = run_check('corollaries', FINEST, s3,
                            include_classical=False)
        self.assertEqual(len(reports), 1)

    def test_unknown_check(self):
        with self.assertRaises(ValueError):
            run_check('thm99', FINEST, symmetric_group(3))
        self.assertNotIn('thm99', CHECKS)

    def test_not_sigma_full(self):
        sigma = parse_partition('{2,5}')
        a5 = alternating_group(5)
        with self.assertRaises(NotSigmaFull):
            run_check('thm13', sigma, a5)
        reports = run_check('thm19', sigma, a5, skip_not_sigma_full=True)
        self.assertEqual(reports[0].skipped, 'not σ-full')
        self.assertFalse(reports[0].violated)
        self.assertEqual(reports[0].to_json()['skipped'], 'not σ-full')

    def test_lemmas(self):
        reports = run_check('lemmas', FINEST, symmetric_group(4),
                            budget=SMALL)
        report = reports[0]
        self.assertEqual(report.theorem_id, 'lemmas')
        self.assertEqual(report.mode, ALL_HOLD)
        self.assertFalse(report.violated)
        self.assertGreater(report.details['instances'], 0)

    def test_degeneration_is_finest(self):
        reports = run_check('degeneration', parse_partition('{2}|rest'),
                            symmetric_group(3))
        self.assertEqual(reports[0].sigma_spec, 'finest')

    def test_suite_report_violations(self):
        with faults.injected_fault('normal-core'):
            suite = LemmaSuite(FINEST, symmetric_group(3), SMALL)
            suite.run()
        report = suite_report('lemmas', suite, 's3', 'finest')
        self.assertTrue(report.violated)
        failing = [v for v in report.verdicts if not v.holds]
        self.assertIn('witness-soundness',
                      [v.condition_id for v in failing])
        for verdict in failing:
            self.assertTrue(verdict.counterexample)
            self.assertIn('instantiation', verdict.counterexample[0])
