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
Classical degenerations: at the finest partition the σ-notions collapse
to their classical counterparts, at the coarsest every group is
σ-primary. Each side is computed by its own code path.
"""

from hsigma.core.lattice import (
    all_subgroups, is_carter_subgroup, is_nilpotent, is_soluble,
    is_subnormal, nilpotent_residual, normal_subgroups, quotient)
from hsigma.core.partition import PrimePartition
from hsigma.core.sigma import (
    is_sigma_nilpotent, is_sigma_primary, is_sigma_soluble)
from hsigma.core.embedding import (
    is_h_sigma_embedded, is_hall_normally_embedded, is_s_permutable,
    is_sigma_permutable, is_sigma_subnormal, sigma_carter_subgroups,
    sigma_nilpotent_residual)
from hsigma.harness.lemmas import PropertySuite
from hsigma.utils.loggable import debug

FINEST = PrimePartition(finest=True)
COARSEST = PrimePartition()


class DegenerationSuite(PropertySuite):
    """Compares σ-predicates at the extreme partitions with their
    classical readings on one group"""

    def __init__(self, g):
        super().__init__()
        self.g = g

    def run(self):
        """Banana banana"""
        g = self.g
        for clause in ('normally-embedded', 's-permutable', 'subnormal',
                       'nilpotent', 'residual', 'carter', 'coarsest'):
            self._open(clause)

        for sub in all_subgroups(g):
            sigma_side = is_h_sigma_embedded(FINEST, g, sub,
                                             'normal') is not None
            self._check('normally-embedded',
                        sigma_side == is_hall_normally_embedded(g, sub),
                        'H_σ-normally embedded disagrees with Hall '
                        'normally embedded', A=sub)

            sigma_side = is_sigma_permutable(FINEST, g, sub) is not None
            self._check('s-permutable', sigma_side == is_s_permutable(g, sub),
                        'σ-permutable disagrees with S-permutable', A=sub)

            sigma_side = is_sigma_subnormal(FINEST, g, sub) is not None
            self._check('subnormal', sigma_side == is_subnormal(g, sub),
                        'σ-subnormal disagrees with subnormal', A=sub)

            self._check('coarsest',
                        is_sigma_subnormal(COARSEST, g, sub) is not None,
                        'not σ-subnormal at the coarsest partition', A=sub)

        for n in normal_subgroups(g):
            target = quotient(g, n).target
            self._check('nilpotent',
                        is_sigma_nilpotent(FINEST, target) ==
                        is_nilpotent(target),
                        'σ-nilpotent disagrees with nilpotent', N=n)

        self._check('residual',
                    sigma_nilpotent_residual(FINEST, g) ==
                    nilpotent_residual(g),
                    'σ-nilpotent residual differs from the nilpotent '
                    'residual', D=nilpotent_residual(g))

        if is_soluble(g):
            classical = {h.bits for h in all_subgroups(g)
                         if is_carter_subgroup(g, h)}
            found = {h.bits for h in sigma_carter_subgroups(FINEST, g)}
            self._check('carter', classical == found,
                        'σ-Carter subgroups differ from Carter subgroups',
                        classical=len(classical), sigma=len(found))

        for flag, test in (('σ-primary', is_sigma_primary),
                           ('σ-nilpotent', is_sigma_nilpotent),
                           ('σ-soluble', is_sigma_soluble)):
            self._check('coarsest', test(COARSEST, g),
                        'not %s at the coarsest partition' % flag)

        debug('%r: %d degeneration checks, %d violations' % (
            g, sum(self.instances.values()), len(self.violations)),
            'harness')
        return self.violations


def degeneration_suite(g):
    """
    Run the degeneration comparisons on @g.

    Returns:
        list: of `Violation`, empty on success
    """
    return DegenerationSuite(g).run()
