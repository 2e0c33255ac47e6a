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
Verdict and report records produced by the harness.
"""

import json
import time
from dataclasses import dataclass, field
from typing import Any, Optional

from hsigma.utils.configurable import Configurable

EQUIVALENCE = 'equivalence'
ALL_HOLD = 'all-hold'


class Timings(Configurable):
    """Whether conditions measure their wall-clock time"""

    enabled = False

    @staticmethod
    def add_arguments(parser):
        parser.add_argument('--timings', action='store_true',
                            dest='timings', default=False,
                            help='Record elapsed_ms for every condition '
                            '(reports are no longer byte-identical)')

    @staticmethod
    def parse_config(config):
        Timings.enabled = bool(config.get('timings'))


@dataclass
class ConditionVerdict:
    """The outcome of one theorem condition or lemma clause"""
    condition_id: str
    holds: bool
    witness: Any = None
    counterexample: Any = None
    elapsed_ms: int = 0

    def to_json(self):
        """Banana banana"""
        res = {'id': self.condition_id, 'holds': self.holds}
        if self.witness is not None:
            res['witness'] = self.witness
        if self.counterexample is not None:
            res['counterexample'] = self.counterexample
        res['elapsed_ms'] = self.elapsed_ms
        return res


@dataclass
class TheoremReport:
    """
    The verdicts of one check on one (group, σ) pair.

    In `EQUIVALENCE` mode the report is sound when all verdicts agree,
    in `ALL_HOLD` mode (lemma suites) when every verdict holds. Skipped
    reports are always sound.
    """
    theorem_id: str
    group_spec: str
    sigma_spec: Optional[str]
    verdicts: list = field(default_factory=list)
    mode: str = EQUIVALENCE
    skipped: Optional[str] = None
    details: dict = field(default_factory=dict)

    @property
    def equivalent(self):
        if self.skipped is not None:
            return True
        if self.mode == ALL_HOLD:
            return all(v.holds for v in self.verdicts)
        return len({v.holds for v in self.verdicts}) <= 1

    @property
    def violated(self):
        return not self.equivalent

    def to_json(self):
        """The report as a JSON-ready dict"""
        res = {'group': self.group_spec,
               'sigma': self.sigma_spec,
               'theorem': self.theorem_id,
               'conditions': [v.to_json() for v in self.verdicts],
               'equivalent': self.equivalent}
        if self.skipped is not None:
            res['skipped'] = self.skipped
        if self.details:
            res['details'] = self.details
        return res

    def dumps(self):
        """One line of newline-delimited JSON"""
        return dumps_json(self.to_json())


def dumps_json(data):
    """Canonical one-line JSON of a report dict"""
    return json.dumps(data, sort_keys=True, ensure_ascii=False)


def evaluate(condition_id, predicate):
    """
    Run @predicate, which returns (holds, evidence), into a verdict.

    The evidence becomes the witness when the condition holds and the
    counterexample otherwise.
    """
    start = time.perf_counter()
    holds, evidence = predicate()
    elapsed = 0
    if Timings.enabled:
        elapsed = int((time.perf_counter() - start) * 1000)
    if holds:
        return ConditionVerdict(condition_id, True, witness=evidence,
                                elapsed_ms=elapsed)
    return ConditionVerdict(condition_id, False, counterexample=evidence,
                            elapsed_ms=elapsed)
