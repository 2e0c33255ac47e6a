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

import multiprocessing
import unittest

from hsigma.core.bounds import Bounds
from hsigma.corpus.manifest import (
    EXPECTED, CorpusEntry, Expectation, corpus_manifest)
from hsigma.harness.lemmas import LemmaBudget
from hsigma.harness.sweep import (
    BUILT_CACHE_SIZE, SweepRunner, _build, build_tasks, run_task)
from hsigma.utils.loggable import Logger


def _s3_entry():
    return CorpusEntry(
        's3', 'sym(3)', sigma=['finest', '{2}|rest'],
        expected=[Expectation('nilpotent_residual_order', {}, 3)],
        checks=['thm13', 'corollaries', EXPECTED, 'degeneration'])


class TestBuildTasks(unittest.TestCase):
    def setUp(self):
        Bounds.reset()

    def tearDown(self):
        Bounds.reset()

    def test_expansion(self):
        tasks = build_tasks([_s3_entry()])
        self.assertListEqual(
            [(t.check, t.sigma) for t in tasks],
            [('thm13', 'finest'), ('thm13', '{2}|rest'),
             ('corollaries', 'finest'), ('corollaries', '{2}|rest'),
             (EXPECTED, None), ('degeneration', 'finest')])
        self.assertListEqual([t.index for t in tasks], list(range(6)))
        # the finest-partition corollaries run once per entry
        self.assertListEqual([t.include_classical for t in tasks
                              if t.check == 'corollaries'], [True, False])

    def test_check_filter(self):
        tasks = build_tasks([_s3_entry()], checks=['thm13'])
        self.assertListEqual([t.check for t in tasks], ['thm13', 'thm13'])

    def test_arithmetic_entry(self):
        entry = CorpusEntry('arith', expected=[
            Expectation('arithmetic_violations', {}, 0)])
        tasks = build_tasks([entry])
        self.assertEqual(len(tasks), 1)
        self.assertEqual(tasks[0].check, EXPECTED)

    def test_bounds_travel_with_tasks(self):
        Bounds.configure(lattice_bound=100)
        tasks = build_tasks([_s3_entry()], budget=LemmaBudget(3, 1))
        self.assertEqual(tasks[0].bounds[1], 100)
        self.assertEqual(tasks[0].budget.samples_per_clause, 3)


class TestRunTask(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True
        Bounds.reset()

    def tearDown(self):
        Bounds.reset()

    def test_results(self):
        results = SweepRunner(jobs=1).run(build_tasks([_s3_entry()]))
        self.assertEqual(len(results), 6)
        for result in results:
            self.assertIsNone(result.failure)
            self.assertFalse(result.violated)
            self.assertEqual(result.entry_name, 's3')
        self.assertEqual(len(results[2].reports), 4)
        self.assertEqual(len(results[3].reports), 1)
        self.assertEqual(results[4].reports[0]['theorem'], EXPECTED)

    def test_task_done(self):
        seen = []
        runner = SweepRunner(jobs=1)
        runner.task_done.connect(lambda res: seen.append(res.index))
        runner.run(build_tasks([_s3_entry()], checks=['thm13']))
        self.assertListEqual(seen, [0, 1])

    def test_pool_keeps_order(self):
        entries = [_s3_entry(),
                   CorpusEntry('c12', 'c12', sigma=['finest'],
                               checks=['thm14', 'thm17'])]
        tasks = build_tasks(entries, checks=['thm13', 'thm14', 'thm17'])
        serial = SweepRunner(jobs=1).run(tasks)
        pooled = SweepRunner(jobs=2).run(tasks)
        self.assertListEqual([r.index for r in pooled],
                             list(range(len(tasks))))
        self.assertListEqual([r.reports for r in pooled],
                             [r.reports for r in serial])

    def test_not_sigma_full_is_skipped(self):
        entry = CorpusEntry('a5', 'alt(5)', sigma=['{2,5}|rest'],
                            checks=['thm13'])
        result = run_task(build_tasks([entry])[0])
        self.assertIsNone(result.failure)
        self.assertEqual(result.reports[0]['skipped'], 'not σ-full')
        self.assertFalse(result.violated)

    def test_lattice_bound_is_skipped(self):
        Bounds.configure(lattice_bound=10)
        entry = CorpusEntry('s4', 'sym(4)', sigma=['finest'],
                            checks=['thm14'])
        result = run_task(build_tasks([entry])[0])
        self.assertIsNone(result.failure)
        self.assertIn('skipped', result.reports[0])

    def test_build_failure(self):
        entry = CorpusEntry('broken', 'cyclic(0)', sigma=['finest'],
                            checks=['thm14'])
        result = run_task(build_tasks([entry])[0])
        self.assertTrue(result.failure.startswith('Could not build'))
        self.assertListEqual(result.reports, [])

    def test_fault_entry_is_violated(self):
        entry = CorpusEntry('s3-fault', 'sym(3)', sigma=['finest'],
                            checks=['lemmas'], fault='normal-core')
        result = run_task(build_tasks([entry],
                                      budget=LemmaBudget(8))[0])
        self.assertTrue(result.violated)

    def test_failed_expectation(self):
        entry = CorpusEntry('s3-wrong', 'sym(3)', expected=[
            Expectation('order', {}, 7)], checks=[EXPECTED])
        result = run_task(build_tasks([entry])[0])
        self.assertTrue(result.violated)

    def test_crashing_check_does_not_stop_the_sweep(self):
        entries = [CorpusEntry('s3-bad', 'sym(3)', sigma=['finest'],
                               checks=['thm99']),
                   _s3_entry()]
        tasks = build_tasks(entries, checks=['thm99', 'thm13'])
        for jobs in (1, 2):
            results = SweepRunner(jobs=jobs).run(tasks)
            self.assertEqual(len(results), 3)
            crashed = results[0]
            self.assertIn('crashed', crashed.failure)
            self.assertIn('ValueError', crashed.trace)
            self.assertListEqual(crashed.reports, [])
            for result in results[1:]:
                self.assertIsNone(result.failure)
                self.assertEqual(len(result.reports), 1)

    def test_built_groups_are_bounded(self):
        entries = [CorpusEntry('c%d' % n, 'cyclic(%d)' % n,
                               sigma=['finest'], checks=['thm14'])
                   for n in range(2, 12)]
        for task in build_tasks(entries):
            self.assertIsNone(run_task(task).failure)
        self.assertLessEqual(_build.cache_info().currsize, BUILT_CACHE_SIZE)


class TestCorpusSweep(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        Logger.reset()
        Logger.silent = True
        Bounds.reset()
        tasks = build_tasks(corpus_manifest(),
                            checks=['thm17', 'thm19', 'lemmas'])
        cls.results = SweepRunner(
            jobs=multiprocessing.cpu_count()).run(tasks)

    def test_no_failures_or_violations(self):
        for result in self.results:
            self.assertIsNone(result.failure, result.failure)
            self.assertFalse(result.violated, result.reports)

    def test_normal_embedding_implies_permutable_embedding(self):
        first = {}
        for result in self.results:
            for report in result.reports:
                for condition in report['conditions']:
                    first[(result.entry_name, report['sigma'],
                           condition['id'])] = condition['holds']

        pairs = 0
        for (name, sigma, cid), holds in first.items():
            if cid != '1.7(i)' or not holds:
                continue
            permutable = first.get((name, sigma, '1.9(i)'))
            if permutable is None:
                # not σ-full
                continue
            pairs += 1
            self.assertTrue(permutable, '%s under %s' % (name, sigma))
        self.assertGreater(pairs, 0)

    def test_lemma_instantiations(self):
        total = sum(report['details']['instances']
                    for result in self.results if result.check == 'lemmas'
                    for report in result.reports
                    if 'skipped' not in report)
        self.assertGreaterEqual(total, 10000)
