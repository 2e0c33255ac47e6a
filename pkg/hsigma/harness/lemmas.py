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
Property suites for the auxiliary facts about σ-subnormal, σ-permutable
and H_σ-subnormally embedded subgroups, σ-soluble groups, σ-bases and
primitive quotients.

Every clause samples instantiations within a `LemmaBudget`, checks those
whose hypotheses hold and records a `Violation` for each failure.
Violations are data: nothing in here raises on a failed clause.
"""

import itertools
from collections import OrderedDict
from dataclasses import dataclass

import numpy as np
from sympy import isprime, primefactors

from hsigma.core.group import SubgroupRef, cyclic_group, direct_product, generate
from hsigma.core.lattice import (
    all_subgroups, chief_series, commutator, conjugates, frattini_subgroup,
    is_nilpotent, is_normal, maximal_subgroups, normal_core,
    normal_subgroups, normalizer, overgroups, permutes, product_set,
    quotient, sylow_subgroups)
from hsigma.core.sigma import (
    complete_hall_sigma_sets, hall_pi_subgroups, is_sigma_full,
    is_sigma_hall, is_sigma_nilpotent, is_sigma_number, is_sigma_soluble,
    sigma_basis, sigma_of, sigma_of_int, sigma_part)
from hsigma.core.embedding import (
    is_h_sigma_embedded, is_sigma_permutable, is_sigma_subnormal,
    block_residual, sigma_nilpotent_residual, sigma_subnormal_subgroups,
    validate_chain, validate_embedding, validate_hall_set)
from hsigma.utils.loggable import debug

DIRECT_PRODUCT_BOUND = 240
ISOMORPHISM_BOUND = 120


@dataclass(frozen=True)
class LemmaBudget:
    """How many instantiations each clause samples, and from which seed"""
    samples_per_clause: int = 24
    seed: int = 0


@dataclass(frozen=True)
class Violation:
    """A clause that failed on a concrete instantiation"""
    clause: str
    message: str
    instantiation: dict

    def to_json(self):
        """Banana banana"""
        return {'clause': self.clause, 'message': self.message,
                'instantiation': self.instantiation}


def _describe(**named):
    res = {}
    for name, value in named.items():
        if isinstance(value, SubgroupRef):
            res[name] = value.describe()
        elif isinstance(value, (set, frozenset)):
            res[name] = sorted(value, key=str)
        else:
            res[name] = value
    return res


class _Sampler:
    def __init__(self, seed):
        self.rng = np.random.default_rng(seed)

    def sample(self, pool, count):
        pool = list(pool)
        if len(pool) <= count:
            return pool
        picked = self.rng.choice(len(pool), size=count, replace=False)
        return [pool[i] for i in sorted(picked)]

    def pairs(self, left, right, count):
        left, right = list(left), list(right)
        total = len(left) * len(right)
        if total <= count:
            return list(itertools.product(left, right))
        picked = self.rng.choice(total, size=count, replace=False)
        return [(left[i // len(right)], right[i % len(right)])
                for i in sorted(picked)]


def _local(g, container, sub):
    inclusion = g.restrict(container)
    return inclusion.table, inclusion.to_local(sub)


class PropertySuite:
    """
    Bookkeeping shared by the property suites.

    Attributes:
        instances: OrderedDict, clause id → checked instantiations.
        violations: list of `Violation`.
    """

    def __init__(self):
        self.instances = OrderedDict()
        self.violations = []

    def _check(self, clause, holds, message, **named):
        self.instances[clause] = self.instances.get(clause, 0) + 1
        if not holds:
            self.violations.append(Violation(clause, message,
                                             _describe(**named)))

    def _open(self, clause):
        self.instances.setdefault(clause, 0)

    def violations_of(self, clause):
        """Banana banana"""
        return [v for v in self.violations if v.clause == clause]


class LemmaSuite(PropertySuite):
    """Runs every clause on one (σ, group) pair"""

    def __init__(self, sigma, g, budget=None):
        super().__init__()
        self.sigma = sigma
        self.g = g
        self.budget = budget or LemmaBudget()
        self.__sampler = _Sampler(self.budget.seed)

    @property
    def samples(self):
        return self.budget.samples_per_clause

    def _sample(self, pool):
        return self.__sampler.sample(pool, self.samples)

    def _pairs(self, left, right):
        return self.__sampler.pairs(left, right, self.samples)

    def run(self):
        """
        Run every clause whose global hypotheses hold.

        Returns:
            list: the violations, empty on success
        """
        g, sigma = self.g, self.sigma
        self.subgroups = all_subgroups(g)
        self.normals = normal_subgroups(g)
        self.subnormal = sigma_subnormal_subgroups(sigma, g)
        self.subnormal_bits = {s.bits for s in self.subnormal}
        self.labels = list(sigma_of(sigma, g))
        self.full = is_sigma_full(sigma, g)
        self.soluble = is_sigma_soluble(sigma, g)

        self.lemma_2_1()
        if self.full:
            self.lemma_2_2()
        self.lemma_2_3()
        self.lemma_2_4()
        self.lemma_2_5()
        if self.soluble:
            self.lemma_2_6()
        self.lemma_2_7()
        if self.soluble:
            self.lemma_2_8()
        self.lemma_2_9()
        self.witness_soundness()
        self.residual_oracle()

        debug('%r under %s: %d instantiations, %d violations' % (
            g, sigma.render(), sum(self.instances.values()),
            len(self.violations)), 'harness')
        return self.violations

    def _label_sets(self):
        sets = []
        for size in range(1, len(self.labels) + 1):
            sets.extend(frozenset(c)
                        for c in itertools.combinations(self.labels, size))
        return self._sample(sets)

    def _is_subnormal_in(self, container, sub):
        table, local = _local(self.g, container, sub)
        return is_sigma_subnormal(self.sigma, table, local) is not None

    def _is_permutable(self, table, sub):
        return is_sigma_permutable(self.sigma, table, sub) is not None

    def _is_embedded(self, table, sub):
        return is_h_sigma_embedded(self.sigma, table, sub,
                                   'subnormal') is not None

    # σ-subnormal subgroups

    def lemma_2_1(self):
        g, sigma = self.g, self.sigma
        for clause in ('2.1(1)', '2.1(2)', '2.1(3)', '2.1(4)', '2.1(5)',
                       '2.1(6)', '2.1(7)'):
            self._open(clause)

        for a, k in self._pairs(self.subnormal, self.subgroups):
            self._check('2.1(1)', self._is_subnormal_in(k, a & k),
                        'A∩K is not σ-subnormal in K', A=a, K=k)

        for a, k in self._pairs(self.subnormal, self.subnormal):
            meet = a & k
            join = generate(g, k.generators, base=a)
            self._check('2.1(2)', meet.bits in self.subnormal_bits,
                        'A∩K is not σ-subnormal in G', A=a, K=k)
            self._check('2.1(2)', join.bits in self.subnormal_bits,
                        '⟨A, K⟩ is not σ-subnormal in G', A=a, K=k)

        for a, n in self._pairs(self.subnormal, self.normals):
            q = quotient(g, n)
            self._check('2.1(3)',
                        is_sigma_subnormal(sigma, q.target, q.image(a))
                        is not None,
                        'AN/N is not σ-subnormal in G/N', A=a, N=n)

        for a, labels in self._pairs(self.subnormal, self._label_sets()):
            if labels.isdisjoint(sigma_of_int(sigma, a.order).labels):
                continue
            for h in hall_pi_subgroups(sigma, g, labels)[:2]:
                if h.is_trivial():
                    continue
                meet = a & h
                self._check(
                    '2.1(4)',
                    not meet.is_trivial() and
                    meet.order == sigma_part(sigma, a.order, labels),
                    'A∩H is not a nontrivial Hall Π-subgroup of A',
                    A=a, H=h, Pi=[sigma.label_name(l) for l in labels])

        for a in self._sample(self.subnormal):
            for label in self.labels:
                if not is_sigma_number(sigma, a.index, {label}):
                    continue
                inclusion = g.restrict(a)
                inner = inclusion.to_parent(
                    block_residual(sigma, inclusion.table, label))
                self._check('2.1(5)', inner == block_residual(sigma, g, label),
                            'O^σi(A) differs from O^σi(G)', A=a,
                            block=sigma.label_name(label))

        for n in self._sample(self.normals):
            q = quotient(g, n)
            for vbar in self._sample(sigma_subnormal_subgroups(sigma,
                                                               q.target)):
                v = q.preimage(vbar)
                self._check('2.1(6)', v.bits in self.subnormal_bits,
                            'preimage of a σ-subnormal V/N is not '
                            'σ-subnormal', N=n, V=v)

        for a in self._sample(self.subnormal):
            inclusion = g.restrict(a)
            inner = sigma_subnormal_subgroups(sigma, inclusion.table)
            for local in self._sample(inner):
                k = inclusion.to_parent(local)
                self._check('2.1(7)', k.bits in self.subnormal_bits,
                            'σ-subnormal in a σ-subnormal A but not in G',
                            A=a, K=k)

    # σ-permutable subgroups

    def lemma_2_2(self):
        g, sigma = self.g, self.sigma
        for clause in ('2.2(1)', '2.2(4)'):
            self._open(clause)
        if self.soluble:
            for clause in ('2.2(2)', '2.2(3)', '2.2(5)'):
                self._open(clause)

        permutable = [a for a in self._sample(self.subgroups)
                      if self._is_permutable(g, a)]

        for a in permutable:
            self._check('2.2(4)', a.bits in self.subnormal_bits,
                        'σ-permutable but not σ-subnormal', A=a)

        for a, n in self._pairs(permutable, self.normals):
            q = quotient(g, n)
            self._check('2.2(1)', self._is_permutable(q.target, q.image(a)),
                        'AN/N is not σ-permutable in G/N', A=a, N=n)

        if not self.soluble:
            return

        for a, k in self._pairs(permutable, self.subgroups):
            table, local = _local(g, k, a & k)
            self._check('2.2(2)', self._is_permutable(table, local),
                        'A∩K is not σ-permutable in K', A=a, K=k)

        for n in self._sample(self.normals):
            q = quotient(g, n)
            for kbar in self._sample(all_subgroups(q.target)):
                if not self._is_permutable(q.target, kbar):
                    continue
                k = q.preimage(kbar)
                self._check('2.2(3)', self._is_permutable(g, k),
                            'K/N σ-permutable in G/N but K is not', N=n, K=k)

        for a, k in self._pairs(permutable, permutable):
            self._check('2.2(5)', self._is_permutable(g, a & k),
                        'K∩A is not σ-permutable', A=a, K=k)

    # Frattini argument

    def lemma_2_3(self):
        g, sigma = self.g, self.sigma
        self._open('2.3')
        frattini = frattini_subgroup(g)
        for h in self._sample(self.normals):
            inclusion = g.restrict(h)
            local_phi = inclusion.to_local(h & frattini)
            factor_order = h.order // local_phi.order

            for labels in self._label_sets():
                if not is_sigma_number(sigma, factor_order, labels):
                    continue
                halls = [inclusion.to_parent(e) for e in
                         hall_pi_subgroups(sigma, inclusion.table, labels)]
                self._check('2.3', bool(halls) and
                            all(is_normal(g, e) for e in halls),
                            'H has no Hall Π-subgroup normal in G', H=h,
                            Pi=[sigma.label_name(l) for l in labels])

            q = quotient(inclusion.table, local_phi)
            if is_sigma_nilpotent(sigma, q.target):
                self._check('2.3', is_sigma_nilpotent(sigma, inclusion.table),
                            'H/H∩Φ(G) σ-nilpotent but H is not', H=h)

    def lemma_2_4(self):
        g, sigma = self.g, self.sigma
        self._open('2.4')
        d = sigma_nilpotent_residual(sigma, g)
        below = [f for f in chief_series(g, through=d) if f.top <= d]
        if all(isprime(f.factor_order) for f in below):
            self._check('2.4', is_nilpotent(g.restrict(d).table),
                        'chief factors below D cyclic but D not nilpotent',
                        D=d)

    def lemma_2_5(self):
        g, sigma = self.g, self.sigma
        self._open('2.5')
        for n in self._sample(self.normals):
            inner = is_sigma_soluble(sigma, g.restrict(n).table)
            outer = is_sigma_soluble(sigma, quotient(g, n).target)
            if inner and outer:
                self._check('2.5', self.soluble,
                            'extension of σ-soluble groups not σ-soluble',
                            N=n)
            if self.soluble:
                self._check('2.5', outer,
                            'quotient of a σ-soluble group not σ-soluble',
                            N=n)

        if not self.soluble:
            return
        for a in self._sample(self.subgroups):
            self._check('2.5', is_sigma_soluble(sigma, g.restrict(a).table),
                        'subgroup of a σ-soluble group not σ-soluble', A=a)
        if 2 * g.order <= DIRECT_PRODUCT_BOUND:
            product = direct_product(g, cyclic_group(2))
            self._check('2.5', is_sigma_soluble(sigma, product),
                        'G × C2 is not σ-soluble', order=product.order)

    # σ-bases and Hall Π-subgroups of σ-soluble groups

    def _g_permutes(self, a, b):
        return any(permutes(self.g, a, c) for c in conjugates(self.g, b))

    def _member_sylows(self, member):
        inclusion = self.g.restrict(member)
        return [inclusion.to_parent(s)
                for p in primefactors(member.order)
                for s in sylow_subgroups(inclusion.table, p)]

    def _is_basis(self, hall_set):
        return all(permutes(self.g, a, b)
                   for a, b in itertools.combinations(list(hall_set), 2))

    def _sylows_g_permute(self, hall_set):
        return all(self._g_permutes(p, q)
                   for a, b in itertools.permutations(list(hall_set), 2)
                   for p in self._member_sylows(a)
                   for q in self._member_sylows(b))

    def lemma_2_6(self):
        g, sigma = self.g, self.sigma
        self._open('2.6(i)')
        self._open('2.6(ii)')

        # existence is decided over every complete Hall σ-set
        self._check('2.6(i)', sigma_basis(sigma, g) is not None,
                    'G has no σ-basis')
        bases = [s for s in complete_hall_sigma_sets(sigma, g)
                 if self._is_basis(s)]
        self._check('2.6(i)', any(self._sylows_g_permute(s) for s in bases),
                    'no σ-basis whose Sylow subgroups G-permute')

        for basis in self._sample(bases):
            for a, b in itertools.combinations(list(basis), 2):
                join = generate(g, b.generators, base=a)
                self._check('2.6(i)', join.order == a.order * b.order,
                            'two members of a σ-basis do not multiply to a '
                            'Hall subgroup', A=a, B=b)

        for labels in self._label_sets():
            halls = hall_pi_subgroups(sigma, g, labels)
            names = [sigma.label_name(l) for l in labels]
            self._check('2.6(ii)', bool(halls), 'no Hall Π-subgroup',
                        Pi=names)
            if not halls:
                continue
            e = halls[0]
            for sub in self._sample(self.subgroups):
                if not is_sigma_number(sigma, sub.order, labels):
                    continue
                self._check('2.6(ii)',
                            any(sub <= c for c in conjugates(g, e)),
                            'Π-subgroup in no conjugate of E', A=sub, E=e,
                            Pi=names)
            for p in primefactors(g.order):
                for s in self._sample(sylow_subgroups(g, p)):
                    self._check('2.6(ii)', self._g_permutes(e, s),
                                'E does not G-permute with a Sylow subgroup',
                                E=e, P=s, Pi=names)

    # H_σ-subnormally embedded subgroups

    def lemma_2_7(self):
        g, sigma = self.g, self.sigma
        for clause in ('2.7(1)', '2.7(2)', '2.7(3)', '2.7(4)'):
            self._open(clause)

        embedded = [h for h in self._sample(self.subgroups)
                    if self._is_embedded(g, h)]

        for h in embedded:
            for e in self._sample(overgroups(g, h)):
                table, local = _local(g, e, h)
                self._check('2.7(1)', self._is_embedded(table, local),
                            'not H_σ-subnormally embedded in E ≥ H',
                            H=h, E=e)

        for h, r in self._pairs(embedded, self.normals):
            q = quotient(g, r)
            self._check('2.7(2)', self._is_embedded(q.target, q.image(h)),
                        'HR/R not H_σ-subnormally embedded in G/R',
                        H=h, R=r)

        for h, s in self._pairs(embedded, self.subnormal):
            self._check('2.7(3)', self._is_embedded(g, h & s),
                        'H∩S not H_σ-subnormally embedded', H=h, S=s)

        for h in embedded:
            if len(sigma_of_int(sigma, h.index)) <= 1:
                self._check('2.7(4)', is_sigma_hall(sigma, g, h) or
                            h.bits in self.subnormal_bits,
                            'σ-primary index but neither σ-Hall nor '
                            'σ-subnormal', H=h)

    def lemma_2_8(self):
        g, sigma = self.g, self.sigma
        self._open('2.8')
        whole = g.whole().bits
        for h in self._sample(self.subnormal):
            signature = sigma_of_int(sigma, h.index)
            if len(signature) != 1:
                continue
            label = next(iter(signature))
            others = set(sigma_of_int(sigma, h.order)) - {label}
            inclusion = g.restrict(h)
            for local in self._sample(
                    hall_pi_subgroups(sigma, inclusion.table, others)):
                b = inclusion.to_parent(local)
                self._check('2.8',
                            product_set(g, h, normalizer(g, b)) == whole,
                            'G ≠ H·N_G(B)', H=h, B=b,
                            block=sigma.label_name(label))

    # primitive quotients

    def lemma_2_9(self):
        g = self.g
        self._open('2.9')
        whole = g.whole().bits
        for factor in chief_series(g):
            top, bottom = factor.top, factor.bottom
            if not commutator(g, top, top) <= bottom:
                continue
            for v in maximal_subgroups(g):
                if not bottom <= v or product_set(g, top, v) != whole:
                    continue
                core = normal_core(g, v)
                index = g.order // factor.centralizer.order
                inst = dict(H=top, K=bottom, V=v)
                self._check('2.9', g.order // core.order ==
                            factor.factor_order * index,
                            '|G/V_G| ≠ |H/K|·|G/C_G(H/K)|', **inst)
                self._check('2.9', top & core == bottom, 'H∩V_G ≠ K', **inst)
                self._check('2.9', generate(g, top.generators, base=core) ==
                            factor.centralizer, 'C_G(H/K) ≠ H·V_G', **inst)
                if g.order <= ISOMORPHISM_BOUND:
                    self._check('2.9', _primitive_isomorphism(
                                    g, top, bottom, v, core,
                                    factor.centralizer),
                                'hv ↦ (hK, vC) is not an isomorphism '
                                'from G/V_G', **inst)

    # searcher/validator agreement and the residual oracle

    def witness_soundness(self):
        g, sigma = self.g, self.sigma
        self._open('witness-soundness')
        for a in self._sample(self.subgroups):
            chain = is_sigma_subnormal(sigma, g, a)
            if chain is not None:
                self._check('witness-soundness',
                            validate_chain(sigma, g, chain, a),
                            'σ-subnormal chain fails validation', A=a)
            kinds = ['subnormal', 'normal']
            if self.full:
                kinds.append('permutable')
            for kind in kinds:
                witness = is_h_sigma_embedded(sigma, g, a, kind)
                if witness is not None:
                    self._check('witness-soundness',
                                validate_embedding(sigma, g, a, witness),
                                '%s embedding fails validation' % kind, A=a)
            if self.full and a.order <= g.order // 2:
                hall_set = is_sigma_permutable(sigma, g, a)
                if hall_set is not None:
                    self._check('witness-soundness',
                                validate_hall_set(sigma, g, a, hall_set),
                                'Hall σ-set fails validation', A=a)

    def residual_oracle(self):
        g, sigma = self.g, self.sigma
        self._open('residual-oracle')
        bits = g.whole().bits
        for n in self.normals:
            if is_sigma_nilpotent(sigma, quotient(g, n).target):
                bits &= n.bits
        residual = sigma_nilpotent_residual(sigma, g)
        self._check('residual-oracle', residual.bits == bits,
                    'residual differs from the intersection of normal '
                    'subgroups with σ-nilpotent quotient', D=residual)
        self._check('residual-oracle',
                    is_sigma_nilpotent(sigma, quotient(g, residual).target),
                    'G/D is not σ-nilpotent', D=residual)


def _primitive_isomorphism(g, top, bottom, v, core, centralizer):
    """
    Check that hv ↦ (hK, vC) is a homomorphism from G onto
    (H/K) ⋊ (G/C) with kernel V_G.
    """
    qk = quotient(g, bottom)
    qc = quotient(g, centralizer)
    everything = g.elements

    h_of = np.full(g.order, -1, dtype=np.intp)
    v_of = np.full(g.order, -1, dtype=np.intp)
    for h in top.elements:
        rest = g.mul[g.inv[h], everything]
        hit = (h_of < 0) & v.mask[rest]
        h_of[hit] = h
        v_of[hit] = rest[hit]
    if (h_of < 0).any():
        return False

    first = qk.element_map[h_of]
    second = qc.element_map[v_of]

    a, b = np.meshgrid(everything, everything, indexing='ij')
    acting = qc.representatives[second[a]]
    moved = qk.representatives[first[b]]
    conj = g.mul[g.mul[acting, moved], g.inv[acting]]
    expected_first = qk.target.mul[first[a], qk.element_map[conj]]
    expected_second = qc.target.mul[second[a], second[b]]
    prod = g.mul[a, b]
    if not (first[prod] == expected_first).all():
        return False
    if not (second[prod] == expected_second).all():
        return False

    kernel = (first == 0) & (second == 0)
    if not np.array_equal(kernel, core.mask):
        return False
    image = {(int(x), int(y)) for x, y in zip(first, second)}
    return len(image) == (top.order // bottom.order) * \
        (g.order // centralizer.order)


def lemma_suite(sigma, g, budget=None):
    """
    Run every lemma clause on (@sigma, @g).

    Returns:
        list: of `Violation`, empty on success
    """
    return LemmaSuite(sigma, g, budget).run()
