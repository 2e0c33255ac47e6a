#!/usr/bin/python
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

"""The main hsigma application
"""

import argparse
import os
import sys
import traceback

from wheezy.template.engine import Engine
from wheezy.template.ext.core import CoreExtension
from wheezy.template.ext.code import CodeExtension
from wheezy.template.loader import FileLoader

from hsigma.core.bounds import Bounds
from hsigma.core.config import Config, load_config_json
from hsigma.core.exceptions import (
    HsigmaException, LatticeBoundExceeded, NotSigmaFull)
from hsigma.core.lattice import (
    all_subgroups, is_dedekind, is_nilpotent, nilpotent_residual)
from hsigma.core.partition import parse_partition
from hsigma.core.sigma import (
    hall_block_subgroups, is_sigma_full, is_sigma_nilpotent,
    is_sigma_primary, is_sigma_soluble, pi, sigma_of)
from hsigma.core.embedding import sigma_nilpotent_residual
from hsigma.corpus.catalog import (
    CATALOG, CatalogEntry, build_entry, resolve_group)
from hsigma.corpus.manifest import (
    EXPECTED, corpus_manifest, expectations_report, load_manifest)
from hsigma.harness.checks import CHECKS, run_check
from hsigma.harness.lemmas import LemmaBudget
from hsigma.harness.reports import Timings, dumps_json
from hsigma.harness.sweep import SweepRunner, build_tasks
from hsigma.utils.configurable import Configurable
from hsigma.utils.loggable import Logger, debug, error, info, warn
from hsigma.utils.setup_utils import VERSION
from hsigma.utils.utils import all_subclasses

Logger.register_error_code('build-failure', HsigmaException, domain='cli')
Logger.register_error_code('not-sigma-full', NotSigmaFull, domain='cli')
Logger.register_warning_code('check-violated', HsigmaException,
                             domain='sweep')

HERE = os.path.dirname(__file__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_VIOLATION = 2

# Orders above which a full-lattice check is announced as slow
SLOW_ORDER = 720


class Application(Configurable):
    """
    Runs one of the analyze, sweep and describe commands and writes
    its reports, one JSON document per line.
    """
    # pylint: disable=too-many-instance-attributes

    def __init__(self):
        self.config = None
        self.command = None
        self.group_spec = None
        self.sigma_specs = []
        self.manifest = None
        self.checks = []
        self.json_out = None
        self.jobs = 1
        self.budget = LemmaBudget()
        self.verbose = False
        self.__out = None
        self.__violations = 0
        self.__failures = 0

    @staticmethod
    def add_arguments(parser):
        group = parser.add_argument_group('Application', 'what to check')
        group.add_argument('--group', dest='group',
                           help='Group expression or catalog name')
        group.add_argument('--sigma', dest='sigma', action='append',
                           help='Partition of the primes, may be repeated')
        group.add_argument('--manifest', dest='manifest',
                           help='Corpus manifest for sweep (JSON or YAML), '
                           'the built-in corpus by default')
        group.add_argument('--check', dest='check', action='append',
                           help='Checks to run, comma-separated, among %s' %
                           ', '.join(CHECKS))
        group.add_argument('--json', dest='json',
                           help='Write the reports there instead of stdout')
        group.add_argument('--jobs', dest='jobs', type=int, default=1,
                           help='Worker processes for sweep')
        group.add_argument('--budget', dest='budget', type=int, default=24,
                           help='Lemma instantiations sampled per clause')
        group.add_argument('--seed', dest='seed', type=int, default=0,
                           help='Seed of the lemma sampler')

    def parse_config(self, config):
        self.config = config
        self.command = config.get('command')
        self.group_spec = config.get('group')

        sigma = config.get('sigma')
        if isinstance(sigma, str):
            sigma = [sigma]
        self.sigma_specs = list(sigma or [])

        self.manifest = config.get_path('manifest')
        self.json_out = config.get_path('json')
        self.verbose = bool(config.get('verbose'))

        allowed = CHECKS + ((EXPECTED,) if self.command == 'sweep' else ())
        self.checks = config.get_list('check')
        unknown = [c for c in self.checks if c not in allowed]
        if unknown:
            error('invalid-config', 'Unknown checks %s, known checks: %s' %
                  (', '.join(unknown), ', '.join(allowed)))

        self.jobs = config.get('jobs') or 1
        budget = config.get('budget') or 24
        if self.jobs < 1 or budget < 1:
            error('invalid-config', '--jobs and --budget must be positive')
        self.budget = LemmaBudget(budget, config.get('seed') or 0)

    def run(self):
        """
        Returns:
            int: the exit code
        """
        if self.json_out:
            with open(self.json_out, 'w', encoding='utf-8') as out:
                return self.__run(out)
        return self.__run(sys.stdout)

    def __run(self, out):
        self.__out = out
        if self.command == 'analyze':
            return self.analyze()
        if self.command == 'sweep':
            return self.sweep()
        return self.describe()

    def __emit(self, report):
        self.__out.write(report.dumps() + '\n')
        if report.violated:
            self.__violations += 1

    def __emit_line(self, line):
        self.__out.write(line + '\n')

    def __build_group(self):
        if not self.group_spec:
            error('invalid-config', 'This command needs --group')
        try:
            return resolve_group(self.group_spec,
                                 base_dir=self.config.get_invoke_dir())
        except HsigmaException as err:
            error('build-failure', 'Could not build %s: %s' %
                  (self.group_spec, err.message))
        return None

    def __partitions(self):
        specs = self.sigma_specs or ['finest']
        try:
            return [parse_partition(spec) for spec in specs]
        except HsigmaException as err:
            error('invalid-config', 'Invalid partition: %s' % err.message)
        return None

    def analyze(self):
        """Run the requested checks on one group"""
        group = self.__build_group()
        partitions = self.__partitions()
        checks = self.checks or list(CHECKS)

        if group.order > SLOW_ORDER:
            warn('slow-operation', 'Checks on %s need the subgroup lattice '
                 'of a group of order %d' % (self.group_spec, group.order))

        for check in checks:
            if check == 'degeneration':
                sigmas = partitions[:1]
            else:
                sigmas = partitions
            for position, sigma in enumerate(sigmas):
                try:
                    reports = run_check(
                        check, sigma, group, budget=self.budget,
                        group_spec=self.group_spec, verbose=self.verbose,
                        include_classical=position == 0)
                except NotSigmaFull as err:
                    error('not-sigma-full', err.message)
                except LatticeBoundExceeded as err:
                    error('build-failure', err.message)
                for report in reports:
                    self.__emit(report)

        self.__check_expectations(group)
        return EXIT_VIOLATION if self.__violations else EXIT_OK

    def __check_expectations(self, group):
        for entry in corpus_manifest():
            if self.group_spec not in (entry.name, entry.spec):
                continue
            if not entry.expected or entry.spec is None:
                return
            if entry.spec in CATALOG:
                built = build_entry(entry.spec)
            else:
                built = CatalogEntry(entry.name, entry.spec, group)
            report = expectations_report(entry, built)
            report.group_spec = self.group_spec
            self.__emit(report)
            return

    def sweep(self):
        """Run every task of the manifest"""
        if self.manifest:
            entries = load_manifest(self.manifest)
            base_dir = os.path.dirname(self.manifest)
        else:
            entries = corpus_manifest()
            base_dir = self.config.get_invoke_dir()

        tasks = build_tasks(entries, checks=self.checks, base_dir=base_dir,
                            budget=self.budget, verbose=self.verbose)
        info('Sweeping %d entries, %d tasks, %d jobs' %
             (len(entries), len(tasks), self.jobs), 'sweep')

        runner = SweepRunner(self.jobs)
        runner.task_done.connect(self.__task_done_cb)
        runner.run(tasks)

        info('%d violated reports, %d failures' %
             (self.__violations, self.__failures), 'sweep')
        if self.__violations:
            return EXIT_VIOLATION
        if self.__failures:
            return EXIT_FAILURE
        return EXIT_OK

    def __task_done_cb(self, result):
        if result.failure is not None:
            self.__failures += 1
            if result.trace:
                debug(result.trace, 'sweep')
            try:
                error('build-failure', '%s: %s' % (result.entry_name,
                                                  result.failure))
            except HsigmaException:
                pass
            return

        for report in result.reports:
            self.__emit_line(dumps_json(report))
            if report['equivalent'] is False:
                self.__violations += 1
                warn('check-violated', '%s violated on %s under %s' %
                     (report['theorem'], result.entry_name,
                      report['sigma']))

    def describe(self):
        """Print the invariants of one group under one partition"""
        group = self.__build_group()
        sigma = self.__partitions()[0]

        if group.order <= Bounds.lattice_bound:
            subgroups = str(len(all_subgroups(group)))
        else:
            subgroups = 'above the lattice bound %d' % Bounds.lattice_bound

        facts = [
            ('order', group.order),
            ('π(G)', '{%s}' % ', '.join(str(p) for p in sorted(pi(
                group.order)))),
            ('σ', sigma.render()),
            ('σ(G)', '{%s}' % ', '.join(sigma.label_name(l)
                                        for l in sigma_of(sigma, group))),
            ('subgroups', subgroups),
            ('σ-nilpotent residual',
             sigma_nilpotent_residual(sigma, group).order),
            ('nilpotent residual', nilpotent_residual(group).order),
            ('σ-full', is_sigma_full(sigma, group)),
            ('σ-primary', is_sigma_primary(sigma, group)),
            ('σ-nilpotent', is_sigma_nilpotent(sigma, group)),
            ('σ-soluble', is_sigma_soluble(sigma, group)),
            ('nilpotent', is_nilpotent(group)),
            ('Dedekind', is_dedekind(group)),
        ]
        width = max(len(key) for key, _ in facts)
        lines = ['%s  %s' % (key.ljust(width), value) for key, value in facts]
        blocks = ['%s  %d' % (sigma.label_name(label),
                              len(hall_block_subgroups(sigma, group, label)))
                  for label in sigma_of(sigma, group)]

        engine = Engine(loader=FileLoader([os.path.join(HERE, 'templates')],
                                          encoding='UTF-8'),
                        extensions=[CoreExtension(), CodeExtension()])
        template = engine.get_template('describe.txt')
        self.__out.write(template.render({'name': self.group_spec,
                                          'lines': lines,
                                          'blocks': blocks}))
        return EXIT_OK


def execute_command(parser, config):
    """
    Banana banana
    """
    cmd = config.get('command')

    if cmd is None:
        if config.get('version'):
            print(VERSION)
            return EXIT_OK
        parser.print_usage()
        return EXIT_FAILURE

    if cmd == 'help':
        parser.print_help()
        return EXIT_OK

    app = Application()
    try:
        Bounds.parse_config(config)
        Timings.parse_config(config)
        app.parse_config(config)
        res = app.run()
    except HsigmaException:
        return EXIT_FAILURE
    except ValueError as err:
        print('Invalid option: %s' % err, file=sys.stderr)
        return EXIT_FAILURE
    except Exception:  # pylint: disable=broad-except
        print("An unknown error happened and hsigma cannot recover from "
              "it. Please report a bug with this error message and the "
              "command line that triggered it", file=sys.stderr)
        traceback.print_exc()
        return EXIT_FAILURE

    if res == EXIT_OK and Logger.n_fatal_warnings:
        return EXIT_FAILURE
    return res


def run(args):
    """
    Banana banana
    """
    parser = argparse.ArgumentParser(
        prog='hsigma',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        add_help=False)
    parser.add_argument('--conf-file', help='Path to the config file',
                        dest='conf_file')
    tmpargs, _args = parser.parse_known_args(args)

    json_conf = None
    if tmpargs.conf_file:
        try:
            json_conf = load_config_json(tmpargs.conf_file)
        except HsigmaException:
            return EXIT_FAILURE

    parser.add_argument('command', action='store',
                        choices=('analyze', 'sweep', 'describe', 'help'),
                        nargs='?')
    parser.add_argument('--version', help='Print version and exit',
                        action='store_true')

    add_args_methods = set()
    for klass in all_subclasses(Configurable):
        if klass.add_arguments not in add_args_methods:
            klass.add_arguments(parser)
            add_args_methods.add(klass.add_arguments)

    known_args, _ = parser.parse_known_args(args)

    defaults = {}
    actual_args = {}
    for key, value in list(dict(vars(known_args)).items()):
        if value != parser.get_default(key):
            actual_args[key] = value
        if parser.get_default(key) is not None:
            defaults[key] = value

    conf_file = actual_args.get('conf_file')
    if conf_file is None and os.path.exists('hsigma.json'):
        conf_file = 'hsigma.json'

    try:
        config = Config(command_line_args=actual_args,
                        conf_file=conf_file,
                        defaults=defaults,
                        json_conf=json_conf)
    except HsigmaException:
        return EXIT_FAILURE

    Logger.parse_config(config)

    return execute_command(parser, config)


def main():
    """Banana banana"""
    return run(sys.argv[1:])


if __name__ == '__main__':
    sys.exit(main())
