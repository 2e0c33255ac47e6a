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
Dispatch of a named check onto one (group, σ) pair.
"""

from hsigma.core.exceptions import NotSigmaFull
from hsigma.core.sigma import is_sigma_full
from hsigma.harness.degeneration import DegenerationSuite
from hsigma.harness.lemmas import LemmaSuite
from hsigma.harness.reports import (
    ALL_HOLD, ConditionVerdict, TheoremReport)
from hsigma.harness.theorems import (
    check_corollaries, check_theorem_1_3, check_theorem_1_4,
    check_theorem_1_7, check_theorem_1_9)

THEOREM_CHECKS = {
    'thm13': check_theorem_1_3,
    'thm14': check_theorem_1_4,
    'thm17': check_theorem_1_7,
    'thm19': check_theorem_1_9,
}

CHECKS = ('thm13', 'thm14', 'thm17', 'thm19', 'corollaries', 'lemmas',
          'degeneration')

SIGMA_FULL_CHECKS = ('thm13', 'thm19')


def suite_report(theorem_id, suite, group_spec, sigma_spec):
    """
    One condition per clause, holding when the clause has no violation.
    """
    report = TheoremReport(theorem_id, group_spec, sigma_spec,
                           mode=ALL_HOLD)
    for clause, count in suite.instances.items():
        violations = suite.violations_of(clause)
        if violations:
            report.verdicts.append(ConditionVerdict(
                clause, False,
                counterexample=[v.to_json() for v in violations]))
        else:
            report.verdicts.append(ConditionVerdict(
                clause, True, witness={'instances': count}))
    report.details['instances'] = sum(suite.instances.values())
    return report


def run_check(check, sigma, g, budget=None, group_spec=None, verbose=False,
              skip_not_sigma_full=False, include_classical=True):
    """
    Run @check on (@g, @sigma).

    Args:
        check: str, one of `CHECKS`.
        budget: LemmaBudget, for the lemma suite.
        group_spec: str, the text @g was built from, echoed in reports.
        verbose: bool, ask the theorem checks for extra details.
        skip_not_sigma_full: bool, return a skipped report instead of
            raising when a check needs a σ-full group.
        include_classical: bool, whether the corollaries include the
            finest-partition ones.

    Returns:
        list: of `TheoremReport`

    Raises:
        ValueError: for an unknown check
        NotSigmaFull
    """
    if check not in CHECKS:
        raise ValueError('Unknown check %s' % check)

    spec = group_spec if group_spec is not None else (g.name or '?')
    sigma_spec = sigma.render()

    if check in SIGMA_FULL_CHECKS and not is_sigma_full(sigma, g):
        if not skip_not_sigma_full:
            raise NotSigmaFull('%s has no complete Hall σ-set for %s' %
                               (spec, sigma_spec))
        return [TheoremReport(check, spec, sigma_spec,
                              skipped='not σ-full')]

    if check in THEOREM_CHECKS:
        return [THEOREM_CHECKS[check](sigma, g, group_spec=spec,
                                      verbose=verbose)]

    if check == 'corollaries':
        return check_corollaries(g, sigma,
                                 include_classical=include_classical,
                                 group_spec=spec)

    if check == 'lemmas':
        suite = LemmaSuite(sigma, g, budget)
        suite.run()
        return [suite_report('lemmas', suite, spec, sigma_spec)]

    suite = DegenerationSuite(g)
    suite.run()
    return [suite_report('degeneration', suite, spec, 'finest')]
