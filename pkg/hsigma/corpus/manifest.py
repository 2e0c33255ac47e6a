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
The corpus manifest: which groups are swept, under which partitions,
with which expected verdicts.
"""

import json
import os
from collections import OrderedDict
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional

import yaml
from schema import And, Or, Schema, SchemaError
from schema import Optional as Maybe

from hsigma.core.exceptions import ManifestError
from hsigma.core.lattice import (
    all_subgroups, center, is_dedekind, is_nilpotent, nilpotent_residual)
from hsigma.core.partition import parse_partition
from hsigma.core.sigma import (
    is_sigma_full, is_sigma_hall, is_sigma_nilpotent, is_sigma_soluble, pi)
from hsigma.core.embedding import (
    is_h_sigma_embedded, is_hsigmaE, is_sigma_permutable,
    is_sigma_subnormal, sigma_carter_subgroups, sigma_nilpotent_residual)
from hsigma.corpus.catalog import CATALOG, CatalogEntry, build_entry, \
    resolve_group
from hsigma.corpus.witnesses import arithmetic_witness_checks
from hsigma.harness.checks import CHECKS
from hsigma.harness.lemmas import Violation
from hsigma.harness.reports import ALL_HOLD, ConditionVerdict, TheoremReport
from hsigma.utils import faults
from hsigma.utils.loggable import Logger, debug, error

Logger.register_error_code('invalid-manifest', ManifestError,
                           domain='corpus')

EXPECTED = 'expected'
UNVERIFIED = 'UNVERIFIED'

EXPECTATION_SCHEMA = Schema({
    'op': And(str, len),
    Maybe('args', default={}): {str: Or(str, int, bool)},
    'result': object,
    Maybe('provenance', default='DERIVED'): And(str, len),
})

ENTRY_SCHEMA = Schema({
    'name': And(str, len),
    Maybe('spec'): And(str, len),
    Maybe('sigma', default=[]): [And(str, len)],
    Maybe('expected', default=[]): [EXPECTATION_SCHEMA],
    Maybe('checks'): [And(str, lambda c: c in CHECKS + (EXPECTED,))],
    Maybe('fault'): And(str, lambda f: f in faults.KNOWN_FAULTS),
})

MANIFEST_SCHEMA = Schema([ENTRY_SCHEMA])


@dataclass(frozen=True)
class Expectation:
    """One expected verdict, evaluated through `OPERATIONS`"""
    op: str
    args: dict
    result: object
    provenance: str = 'DERIVED'


@dataclass
class CorpusEntry:
    """
    A group of the sweep.

    Entries without a spec only carry arithmetic expectations. `checks`
    None means every check plus the expectations.
    """
    name: str
    spec: Optional[str] = None
    sigma: list = field(default_factory=list)
    expected: list = field(default_factory=list)
    checks: Optional[list] = None
    fault: Optional[str] = None

    def tasks(self):
        """The checks this entry runs, `EXPECTED` included"""
        if self.checks is not None:
            return list(self.checks)
        if self.spec is None:
            return [EXPECTED]
        return [EXPECTED] + list(CHECKS)

    def to_json(self):
        """Banana banana"""
        res = OrderedDict([('name', self.name)])
        if self.spec is not None:
            res['spec'] = self.spec
        res['sigma'] = list(self.sigma)
        res['expected'] = [{'op': e.op, 'args': e.args, 'result': e.result,
                            'provenance': e.provenance}
                           for e in self.expected]
        if self.checks is not None:
            res['checks'] = list(self.checks)
        if self.fault is not None:
            res['fault'] = self.fault
        return res


def _entry_from_json(data):
    return CorpusEntry(
        name=data['name'], spec=data.get('spec'), sigma=data['sigma'],
        expected=[Expectation(e['op'], e['args'], e['result'],
                              e['provenance']) for e in data['expected']],
        checks=data.get('checks'), fault=data.get('fault'))


def partition_samples(order):
    """
    finest, coarsest, `{A}|rest` for every proper non-empty A ⊂ π(order)
    and `{7}|rest` when 7 divides @order.
    """
    primes = sorted(pi(order))
    samples = ['finest', 'coarsest']
    if len(primes) > 1:
        for size in range(1, len(primes)):
            for block in combinations(primes, size):
                samples.append('{%s}|rest' % ','.join(str(p) for p in block))
    if 7 in primes and '{7}|rest' not in samples:
        samples.append('{7}|rest')
    return samples


def load_manifest(path):
    """
    Read a manifest, YAML when the extension says so, JSON otherwise.

    Raises:
        ManifestError
    """
    try:
        with open(path, 'r', encoding='utf-8') as _:
            if os.path.splitext(path)[1] in ('.yaml', '.yml'):
                data = yaml.safe_load(_)
            else:
                data = json.load(_)
    except (OSError, ValueError, yaml.YAMLError) as err:
        error('invalid-manifest', 'Could not read manifest %s: %s' %
              (path, err))

    if data is None:
        data = []
    try:
        data = MANIFEST_SCHEMA.validate(data)
    except SchemaError as err:
        error('invalid-manifest', 'Invalid manifest %s: %s' % (path, err))

    entries = [_entry_from_json(d) for d in data]
    names = [e.name for e in entries]
    duplicates = sorted({n for n in names if names.count(n) > 1})
    if duplicates:
        error('invalid-manifest', 'Duplicate entries in %s: %s' %
              (path, ', '.join(duplicates)))
    debug('Loaded %d entries from %s' % (len(entries), path), 'corpus')
    return entries


def build_corpus_entry(entry, base_dir=None):
    """
    The group of @entry with its labeled subgroups.

    Returns:
        CatalogEntry, or None for arithmetic-only entries
    """
    if entry.spec is None:
        return None
    if entry.spec in CATALOG:
        return build_entry(entry.spec)
    return CatalogEntry(entry.name, entry.spec,
                        resolve_group(entry.spec, base_dir=base_dir))


def _subgroup(built, name):
    if name == 'whole':
        return built.table.whole()
    if name == 'trivial':
        return built.table.trivial()
    if name not in built.subgroups:
        raise ManifestError('%s has no subgroup named %s' %
                            (built.name, name))
    return built.subgroups[name]


def _sigma(args):
    return parse_partition(args['sigma'])


def _embedded(built, args):
    return is_h_sigma_embedded(_sigma(args), built.table,
                               _subgroup(built, args['subgroup']),
                               args['kind']) is not None


OPERATIONS = {
    'order': lambda b, a: b.table.order,
    'subgroup_order': lambda b, a: _subgroup(b, a['subgroup']).order,
    'subgroup_count': lambda b, a: len(all_subgroups(b.table)),
    'center_order': lambda b, a: center(b.table).order,
    'is_nilpotent': lambda b, a: is_nilpotent(b.table),
    'is_dedekind': lambda b, a: is_dedekind(b.table),
    'nilpotent_residual_order':
        lambda b, a: nilpotent_residual(b.table).order,
    'is_sigma_full': lambda b, a: is_sigma_full(_sigma(a), b.table),
    'is_sigma_nilpotent': lambda b, a: is_sigma_nilpotent(_sigma(a), b.table),
    'is_sigma_soluble': lambda b, a: is_sigma_soluble(_sigma(a), b.table),
    'sigma_residual_order':
        lambda b, a: sigma_nilpotent_residual(_sigma(a), b.table).order,
    'sigma_carter_count':
        lambda b, a: len(sigma_carter_subgroups(_sigma(a), b.table)),
    'is_hsigmaE':
        lambda b, a: is_hsigmaE(_sigma(a), b.table).is_hsigmaE,
    'is_sigma_hall': lambda b, a: is_sigma_hall(
        _sigma(a), b.table, _subgroup(b, a['subgroup'])),
    'is_sigma_subnormal': lambda b, a: is_sigma_subnormal(
        _sigma(a), b.table, _subgroup(b, a['subgroup'])) is not None,
    'is_sigma_permutable': lambda b, a: is_sigma_permutable(
        _sigma(a), b.table, _subgroup(b, a['subgroup'])) is not None,
    'is_h_sigma_embedded': _embedded,
}
OPERATIONS['is_sigma_quasinormal'] = OPERATIONS['is_sigma_permutable']

ARITHMETIC_OPERATIONS = {
    'arithmetic_violations':
        lambda name, a: len(arithmetic_witness_checks(name)),
}


def _normalize(value):
    return json.loads(json.dumps(value))


def evaluate_expectations(entry, built):
    """
    Compare every expected verdict of @entry with the implementation.

    Returns:
        list: of `Violation`
    """
    violations = []
    for expectation in entry.expected:
        if expectation.provenance == UNVERIFIED:
            debug('%s: %s recorded but not verified' %
                  (entry.name, expectation.op), 'corpus')
            continue

        clause = '%s:%s' % (EXPECTED, expectation.op)
        inst = {'entry': entry.name, 'args': expectation.args,
                'expected': expectation.result,
                'provenance': expectation.provenance}

        if expectation.op in ARITHMETIC_OPERATIONS:
            actual = ARITHMETIC_OPERATIONS[expectation.op](
                entry.name, expectation.args)
        elif expectation.op in OPERATIONS and built is not None:
            actual = OPERATIONS[expectation.op](built, expectation.args)
        else:
            violations.append(Violation(
                clause, 'no operation %s for this entry' % expectation.op,
                inst))
            continue

        if _normalize(actual) != _normalize(expectation.result):
            inst['actual'] = _normalize(actual)
            violations.append(Violation(clause, 'expected verdict differs',
                                        inst))
    return violations


def expectations_report(entry, built):
    """
    The expectations of @entry as a single-condition report.

    Returns:
        TheoremReport
    """
    violations = evaluate_expectations(entry, built)
    report = TheoremReport(EXPECTED, entry.spec or entry.name, None,
                           mode=ALL_HOLD)
    if violations:
        report.verdicts.append(ConditionVerdict(
            EXPECTED, False,
            counterexample=[v.to_json() for v in violations]))
    else:
        report.verdicts.append(ConditionVerdict(
            EXPECTED, True, witness={'expectations': len(entry.expected)}))
    return report


_SMALL_GROUPS = [
    ('c1', 'cyclic(1)', 1),
    ('v4', 'direct(cyclic(2), cyclic(2))', 4),
    ('s3', 'sym(3)', 6),
    ('c2^3', 'direct(cyclic(2), cyclic(2), cyclic(2))', 8),
    ('c2c4', 'direct(cyclic(2), cyclic(4))', 8),
    ('q8', 'quaternion(8)', 8),
    ('c3^2', 'direct(cyclic(3), cyclic(3))', 9),
    ('a4', 'alt(4)', 12),
    ('c2c6', 'direct(cyclic(2), cyclic(6))', 12),
    ('c3c4', 'semidirect(cyclic(3), cyclic(4), 2)', 12),
    ('s3c2', 'direct(sym(3), cyclic(2))', 12),
    ('c2c8', 'direct(cyclic(2), cyclic(8))', 16),
    ('c4^2', 'direct(cyclic(4), cyclic(4))', 16),
    ('c2q8', 'direct(cyclic(2), quaternion(8))', 16),
    ('c2d8', 'direct(cyclic(2), dihedral(8))', 16),
    ('c3s3', 'direct(cyclic(3), sym(3))', 18),
    ('c3^2c2', 'semidirect(direct(cyclic(3), cyclic(3)), cyclic(2), 2)', 18),
    ('c5c4', 'frobenius(5,4,2)', 20),
    ('c2c10', 'direct(cyclic(2), cyclic(10))', 20),
    ('c7c3', 'frobenius(7,3,2)', 21),
    ('s4', 'sym(4)', 24),
    ('c2a4', 'direct(cyclic(2), alt(4))', 24),
    ('c3q8', 'direct(cyclic(3), quaternion(8))', 24),
    ('c4s3', 'direct(cyclic(4), sym(3))', 24),
    ('c3d8', 'direct(cyclic(3), dihedral(8))', 24),
    ('c3c8', 'semidirect(cyclic(3), cyclic(8), 2)', 24),
    ('v4s3', 'direct(sym(3), cyclic(2), cyclic(2))', 24),
    ('c2c12', 'direct(cyclic(2), cyclic(12))', 24),
    ('c2c3c4', 'direct(cyclic(2), semidirect(cyclic(3), cyclic(4), 2))', 24),
]
_SMALL_GROUPS += [('c%d' % n, 'cyclic(%d)' % n, n) for n in range(2, 25)]
_SMALL_GROUPS += [('d%d' % n, 'dihedral(%d)' % n, n)
                  for n in range(8, 25, 2)]

_LARGER_GROUPS = [
    ('s3^2', 'direct(sym(3), sym(3))', 36),
    ('c13c3', 'frobenius(13,3,3)', 39),
    ('c7c6', 'frobenius(7,6,3)', 42),
    ('s4c2', 'direct(sym(4), cyclic(2))', 48),
    ('c11c5', 'frobenius(11,5,3)', 55),
    ('a5', 'alt(5)', 60),
    ('s5', 'sym(5)', 120),
]


def _expect(op, result, provenance='DERIVED', **args):
    return Expectation(op, args, result, provenance)


_EXPECTATIONS = {
    's3': [_expect('nilpotent_residual_order', 3),
           _expect('sigma_residual_order', 3, sigma='finest')],
    's4': [_expect('subgroup_count', 30),
           _expect('sigma_residual_order', 12, sigma='finest'),
           _expect('sigma_carter_count', 3, sigma='finest'),
           _expect('is_sigma_nilpotent', True, sigma='coarsest')],
    'q8': [_expect('is_dedekind', True)],
    'c5c4': [_expect('center_order', 1)],
    'c7c6': [_expect('center_order', 1)],
    's4c2': [_expect('center_order', 2)],
    's5': [_expect('subgroup_count', 156),
           _expect('center_order', 1),
           _expect('is_sigma_soluble', False, sigma='finest')],
    'a5': [_expect('subgroup_count', 59),
           _expect('is_sigma_full', False, sigma='{2,5}|rest'),
           _expect('is_sigma_soluble', True, sigma='{2,3,5}|rest')],
}


def _ex_1_2_i():
    sigma = '{7}|rest'
    return CorpusEntry(
        name='ex1.2i', spec='ex1.2i', sigma=[sigma],
        expected=[
            _expect('order', 1260, 'PUBLISHED'),
            _expect('subgroup_order', 84, 'PUBLISHED', subgroup='H'),
            _expect('subgroup_order', 12, 'PUBLISHED', subgroup='C3A'),
            _expect('subgroup_order', 180, 'PUBLISHED', subgroup='C3A5'),
            _expect('is_sigma_subnormal', True, 'PUBLISHED', subgroup='H',
                    sigma=sigma),
            _expect('is_sigma_hall', True, 'PUBLISHED', subgroup='C3A5',
                    sigma=sigma),
            _expect('is_sigma_subnormal', False, 'PUBLISHED', subgroup='C3A',
                    sigma=sigma),
            _expect('is_h_sigma_embedded', False, 'PUBLISHED', subgroup='C3A',
                    sigma=sigma, kind='normal'),
            _expect('is_h_sigma_embedded', True, 'PUBLISHED', subgroup='C3A5',
                    sigma=sigma, kind='subnormal'),
        ],
        checks=[EXPECTED, 'lemmas'])


def corpus_manifest():
    """
    The default corpus: small groups up to order 24, the larger samples
    and the ex1.2 constructions, each with its partition samples.

    Returns:
        list: of `CorpusEntry`
    """
    entries = []
    for name, spec, order in _SMALL_GROUPS + _LARGER_GROUPS:
        entries.append(CorpusEntry(name=name, spec=spec,
                                   sigma=partition_samples(order),
                                   expected=_EXPECTATIONS.get(name, [])))

    entries.append(_ex_1_2_i())
    entries.append(CorpusEntry(
        name='ex1.2ii',
        expected=[_expect('arithmetic_violations', 0, 'PUBLISHED'),
                  _expect('no_s_permutable_hall_container', True,
                          UNVERIFIED)]))
    entries.append(CorpusEntry(
        name='ex1.2iii',
        expected=[_expect('arithmetic_violations', 0, 'PUBLISHED')]))
    return entries