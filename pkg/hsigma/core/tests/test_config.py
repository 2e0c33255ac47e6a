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

import json
import os
import shutil
import tempfile
import unittest

from hsigma.core.bounds import Bounds, DEFAULT_MAX_ORDER
from hsigma.core.config import Config, load_config_json
from hsigma.core.exceptions import ConfigError, LatticeBoundExceeded
from hsigma.utils.loggable import Logger


class TestConfig(unittest.TestCase):
    def setUp(self):
        Logger.reset()
        Logger.silent = True
        self.__priv_dir = tempfile.mkdtemp(prefix='hsigma-config-')

    def tearDown(self):
        shutil.rmtree(self.__priv_dir, ignore_errors=True)

    def __write_conf(self, contents):
        conf_file = os.path.join(self.__priv_dir, 'hsigma.json')
        with open(conf_file, 'w', encoding='utf-8') as _:
            if isinstance(contents, str):
                _.write(contents)
            else:
                json.dump(contents, _)
        return conf_file

    def test_precedence(self):
        conf_file = self.__write_conf({'jobs': 4, 'budget': 8})
        cfg = Config(command_line_args={'jobs': 2}, conf_file=conf_file,
                     defaults={'jobs': 1, 'budget': 24, 'seed': 0})
        self.assertEqual(cfg.get('jobs'), 2)
        self.assertEqual(cfg.get('budget'), 8)
        self.assertEqual(cfg.get('seed'), 0)
        self.assertIsNone(cfg.get('group'))
        self.assertEqual(cfg.get('group', 's3'), 's3')

    def test_paths(self):
        conf_file = self.__write_conf({'manifest': 'corpus.yaml',
                                       'json': '/tmp/out.json'})
        cfg = Config(conf_file=conf_file)
        self.assertEqual(cfg.get_path('manifest'),
                         os.path.join(os.path.realpath(self.__priv_dir),
                                      'corpus.yaml'))
        self.assertEqual(cfg.get_path('json'), os.path.realpath('/tmp/out.json'))
        self.assertIsNone(cfg.get_path('group'))

        cfg = Config(command_line_args={'manifest': 'corpus.yaml'})
        self.assertEqual(cfg.get_path('manifest'),
                         os.path.join(os.path.realpath(os.getcwd()),
                                      'corpus.yaml'))

    def test_get_list(self):
        cfg = Config(command_line_args={'check': 'thm13, thm14'})
        self.assertListEqual(cfg.get_list('check'), ['thm13', 'thm14'])
        conf_file = self.__write_conf({'check': ['lemmas', 'thm17,thm19']})
        cfg = Config(conf_file=conf_file)
        self.assertListEqual(cfg.get_list('check'),
                             ['lemmas', 'thm17', 'thm19'])
        self.assertListEqual(cfg.get_list('sigma'), [])

    def test_missing_file(self):
        cfg = Config(conf_file=os.path.join(self.__priv_dir, 'nope.json'))
        self.assertIsNone(cfg.get('jobs'))

    def test_invalid_json(self):
        conf_file = self.__write_conf('{"jobs": ')
        with self.assertRaises(ConfigError):
            Config(conf_file=conf_file)

    def test_schema(self):
        conf_file = self.__write_conf({'jobs': 0})
        with self.assertRaises(ConfigError):
            load_config_json(conf_file)
        conf_file = self.__write_conf({'sigma': ['{2}', '{3}'],
                                       'timings': True,
                                       'unrelated': {'anything': 1}})
        self.assertTrue(load_config_json(conf_file)['timings'])


class TestBounds(unittest.TestCase):
    def setUp(self):
        Bounds.reset()

    def tearDown(self):
        Bounds.reset()

    def test_configure(self):
        Bounds.configure(max_order=100)
        self.assertEqual(Bounds.snapshot()[0], 100)
        Bounds.configure(lattice_bound=10)
        self.assertEqual(Bounds.snapshot(), (100, 10))
        with self.assertRaises(LatticeBoundExceeded) as cm:
            Bounds.check_lattice(11)
        self.assertEqual(cm.exception.order, 11)
        Bounds.check_lattice(10)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            Bounds.configure(max_order=0)
        with self.assertRaises(ValueError):
            Bounds.configure(lattice_bound=-3)

    def test_parse_config(self):
        Bounds.parse_config(Config(command_line_args={'max_order': 64}))
        self.assertEqual(Bounds.max_order, 64)
        Bounds.reset()
        self.assertEqual(Bounds.max_order, DEFAULT_MAX_ORDER)
