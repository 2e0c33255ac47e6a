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
High-level configuration: command line over conf file over defaults.
"""
import os
import json

from schema import Schema, SchemaError, And, Optional, Or

from hsigma.utils.loggable import error


def _positive(value):
    return isinstance(value, int) and not isinstance(value, bool) \
        and value > 0


CONF_SCHEMA = Schema({
    Optional('group'): str,
    Optional('sigma'): Or(str, [str]),
    Optional('manifest'): str,
    Optional('check'): Or(str, [str]),
    Optional('max_order'): And(int, _positive),
    Optional('lattice_bound'): And(int, _positive),
    Optional('jobs'): And(int, _positive),
    Optional('budget'): And(int, _positive),
    Optional('seed'): int,
    Optional('json'): str,
    Optional('timings'): bool,
    Optional('verbose'): And(int, lambda n: n >= 0),
    Optional(str): object,
})


def load_config_json(conf_file):
    """Load and validate @conf_file, a JSON object of option values"""
    try:
        with open(conf_file, encoding='utf-8') as _:
            try:
                json_conf = json.load(_)
            except ValueError as ze_error:
                error('invalid-config',
                      'The provided configuration file %s is not valid json.\n'
                      'The exact error was %s.' % (conf_file, str(ze_error)))
    except FileNotFoundError:
        json_conf = {}
    except IOError as _err:
        error('setup-issue',
              'Passed config file %s could not be opened (%s)' %
              (conf_file, _err))

    try:
        CONF_SCHEMA.validate(json_conf)
    except SchemaError as err:
        error('invalid-config',
              'Invalid configuration file %s: %s' % (conf_file, err))

    return json_conf


class Config:
    """
    Lookup of option values.

    Command-line values win over values from the JSON configuration
    file, which win over the argument parser defaults. Paths given on
    the command line resolve against the invocation directory, paths
    from the file against the file's directory.
    """

    def __init__(self, command_line_args=None, conf_file=None, defaults=None,
                 json_conf=None):
        self.conf_file = None
        self.__conf_dir = None
        self.__config = {}

        if conf_file:
            self.conf_file = os.path.abspath(conf_file)
            self.__conf_dir = os.path.dirname(self.conf_file)

            if not json_conf:
                self.__config = load_config_json(self.conf_file)
            else:
                self.__config = json_conf

        self.__invoke_dir = os.getcwd()
        self.__cli = command_line_args or {}
        self.__defaults = defaults or {}

    def __abspath(self, path, from_conf):
        if path is None:
            return None

        if os.path.isabs(path):
            return os.path.realpath(path)
        if path.startswith('~'):
            return os.path.realpath(os.path.expanduser(path))
        if from_conf:
            return os.path.realpath(os.path.join(self.__conf_dir, path))

        return os.path.realpath(os.path.join(self.__invoke_dir, path))

    def get_invoke_dir(self):
        """The directory the command was run from"""
        return self.__invoke_dir

    def get(self, key, default=None):
        """
        Get the value for `key`.

        Gives priority to command-line overrides.

        Args:
            key: str, the key to get the value for.

        Returns:
            object: The value for `key`
        """
        if key in self.__cli:
            return self.__cli[key]
        if key in self.__config:
            return self.__config.get(key)
        if key in self.__defaults:
            return self.__defaults.get(key)
        return default

    def get_list(self, key):
        """
        Same as `Config.get`, always returning a list.

        Comma-separated strings are split, so `--check thm13,thm14`
        and `"check": ["thm13", "thm14"]` mean the same.
        """
        value = self.get(key)
        if value is None:
            return []
        if isinstance(value, str):
            value = [value]

        res = []
        for item in value:
            res.extend(part.strip() for part in item.split(',')
                       if part.strip())
        return res

    def get_path(self, key, rel_to_cwd=False):
        """
        Retrieve a path from the config, resolving it against
        the invocation directory or the configuration file directory,
        depending on whether it was passed through the command-line
        or the configuration file.

        Args:
            key: str, the key to lookup the path with

        Returns:
            str: The path, or `None`
        """
        if key in self.__cli:
            path = self.__cli[key]
            from_conf = False
        else:
            path = self.__config.get(key)
            from_conf = True

        if not isinstance(path, str):
            return None

        res = self.__abspath(path, from_conf)

        if rel_to_cwd:
            return os.path.relpath(res, self.__invoke_dir)

        return res
