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

import io
import json
import os
import shutil
import unittest

from contextlib import redirect_stdout

from hsigma.core.bounds import Bounds
from hsigma.harness.reports import Timings
from hsigma.run_hsigma import EXIT_FAILURE, EXIT_OK, EXIT_VIOLATION, run
from hsigma.utils.loggable import Logger
from hsigma.utils.setup_utils import VERSION


class TestHsigma(unittest.TestCase):
    def setUp(self):
        self._test_dir = os.path.join(os.path.dirname(__file__), 'tmptestdir')
        shutil.rmtree(self._test_dir, ignore_errors=True)
        os.mkdir(self._test_dir)
        self.__cwd = os.getcwd()
        os.chdir(self._test_dir)
        self.__out = os.path.join(self._test_dir, 'reports.jsonl')
        Logger.reset()
        Logger.silent = True
        Bounds.reset()
        Timings.enabled = False

    def tearDown(self):
        os.chdir(self.__cwd)
        shutil.rmtree(self._test_dir, ignore_errors=True)
        Bounds.reset()
        Timings.enabled = False

    def __write(self, name, contents):
        path = os.path.join(self._test_dir, name)
        with open(path, 'w', encoding='utf-8') as _:
            _.write(contents)
        return path

    def __reports(self):
        with open(self.__out, encoding='utf-8') as _:
            return [json.loads(line) for line in _ if line.strip()]

    def test_version(self):
        out = io.StringIO()
        with redirect_stdout(out):
            self.assertEqual(run(['--version']), EXIT_OK)
        self.assertEqual(out.getvalue().strip(), VERSION)

    def test_no_command(self):
        with redirect_stdout(io.StringIO()):
            self.assertEqual(run([]), EXIT_FAILURE)

    def test_analyze(self):
        res = run(['analyze', '--group', 's3', '--sigma', 'finest',
                   '--check', 'thm13,thm17', '--json', self.__out])
        self.assertEqual(res, EXIT_OK)
        reports = self.__reports()
        self.assertListEqual([r['theorem'] for r in reports],
                             ['1.3', '1.7', 'expected'])
        for report in reports:
            self.assertTrue(report['equivalent'])
            self.assertEqual(report['group'], 's3')
        self.assertEqual(reports[0]['sigma'], 'finest')
        self.assertEqual(reports[0]['conditions'][0]['elapsed_ms'], 0)

    def test_analyze_stdout(self):
        out = io.StringIO()
        with redirect_stdout(out):
            res = run(['analyze', '--group', 'cyclic(6)', '--check',
                       'thm19', '--sigma', 'finest', '--sigma', '{2}|rest'])
        self.assertEqual(res, EXIT_OK)
        lines = out.getvalue().splitlines()
        self.assertEqual(len(lines), 2)
        self.assertListEqual([json.loads(l)['sigma'] for l in lines],
                             ['finest', '{2}|rest'])

    def test_analyze_reproducible(self):
        args = ['analyze', '--group', 'sym(4)', '--check', 'thm14',
                '--json', self.__out]
        self.assertEqual(run(args), EXIT_OK)
        with open(self.__out, encoding='utf-8') as _:
            first = _.read()
        self.assertEqual(run(args), EXIT_OK)
        with open(self.__out, encoding='utf-8') as _:
            self.assertEqual(_.read(), first)

    def test_analyze_failures(self):
        for args in (['--group', 'cylic(3)'],
                     ['--group', 's3', '--sigma', '{2}|{2}'],
                     ['--group', 's3', '--check', 'thm99'],
                     ['--group', 'alt(5)', '--sigma', '{2,5}',
                      '--check', 'thm13'],
                     ['--group', 'sym(4)', '--lattice-bound', '10',
                      '--check', 'thm14'],
                     ['--check', 'thm13']):
            self.assertEqual(run(['analyze', '--json', self.__out] + args),
                             EXIT_FAILURE, args)

    def test_describe(self):
        res = run(['describe', '--group', 'sym(4)', '--sigma', '{2}|rest',
                   '--json', self.__out])
        self.assertEqual(res, EXIT_OK)
        with open(self.__out, encoding='utf-8') as _:
            text = _.read()
        self.assertTrue(text.lstrip().startswith('sym(4)'))
        self.assertIn('subgroups', text)
        self.assertIn('{2}|rest', text)
        self.assertIn('Hall subgroups per block', text)

    def test_sweep(self):
        manifest = self.__write('corpus.yaml', '\n'.join([
            '- name: s3',
            '  spec: sym(3)',
            '  sigma: [finest, "{2}|rest"]',
            '  checks: [expected, thm13, lemmas]',
            '  expected:',
            '    - op: nilpotent_residual_order',
            '      result: 3',
            '- name: c7c3',
            '  spec: c7c3',
            '  sigma: [finest]',
            '  checks: [thm17]',
        ]))
        res = run(['sweep', '--manifest', manifest, '--budget', '4',
                   '--json', self.__out])
        self.assertEqual(res, EXIT_OK)
        reports = self.__reports()
        self.assertListEqual([(r['group'], r['theorem'], r['sigma'])
                              for r in reports], [
                                  ('sym(3)', 'expected', None),
                                  ('sym(3)', '1.3', 'finest'),
                                  ('sym(3)', '1.3', '{2}|rest'),
                                  ('sym(3)', 'lemmas', 'finest'),
                                  ('sym(3)', 'lemmas', '{2}|rest'),
                                  ('c7c3', '1.7', 'finest')])

    def test_sweep_violation(self):
        manifest = self.__write('corpus.yaml', '\n'.join([
            '- name: s3-faulty',
            '  spec: sym(3)',
            '  sigma: [finest]',
            '  checks: [lemmas]',
            '  fault: normal-core',
        ]))
        res = run(['sweep', '--manifest', manifest, '--json', self.__out])
        self.assertEqual(res, EXIT_VIOLATION)
        self.assertFalse(self.__reports()[0]['equivalent'])

    def test_sweep_failure(self):
        manifest = self.__write('corpus.yaml', '\n'.join([
            '- name: broken',
            '  spec: cyclic(0)',
            '  sigma: [finest]',
            '  checks: [thm14]',
        ]))
        res = run(['sweep', '--manifest', manifest, '--json', self.__out])
        self.assertEqual(res, EXIT_FAILURE)
        self.assertListEqual(self.__reports(), [])

    def test_conf_file(self):
        self.__write('hsigma.json', json.dumps({
            'group': 'c12', 'check': 'thm17', 'sigma': 'finest'}))
        res = run(['analyze', '--json', self.__out])
        self.assertEqual(res, EXIT_OK)
        reports = self.__reports()
        self.assertEqual(reports[0]['group'], 'c12')
        self.assertEqual(reports[0]['theorem'], '1.7')
