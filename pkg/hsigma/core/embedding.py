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
σ-embedding decision procedures.

Every search returns a witness that can be re-checked by the matching
`validate_*` function. Validators recompute everything elementwise and
share no code with the searches beyond the group tables themselves.
"""

import threading
from dataclasses import dataclass, field
from typing import Any, Optional

import networkx as nx
import numpy as np
from sympy import primefactors

from hsigma.core.exceptions import NotSigmaFull
from hsigma.core.group import SubgroupRef, generate
from hsigma.core.lattice import (
    all_subgroups, chief_series, complements, conjugates, frattini_subgroup,
    is_invariant, is_normal, is_subnormal, normal_closure, normal_core,
    normal_subgroups, overgroups, permutes, product_set, quotient,
    sort_subgroups, sylow_subgroups)
from hsigma.core.sigma import (
    complete_hall_sigma_sets, is_sigma_full, is_sigma_hall,
    is_sigma_nilpotent, pi, sigma_of_int)
from hsigma.utils import faults
from hsigma.utils.loggable import debug


NORMAL_STEP = 'normal'
PRIMARY_CORE_STEP = 'primary-core'

EMBEDDING_KINDS = ('subnormal', 'permutable', 'normal')

CENTRAL = 'central'
ECCENTRIC = 'eccentric'

RESIDUAL_NOT_HALL = 'residual-not-hall'
SIGMA_PI_MISMATCH = 'sigma-pi-mismatch'
NO_COMPLEMENT = 'no-complement'
NO_SYLOW_TOWER = 'no-sylow-tower'
CENTRAL_FACTOR_BELOW_D = 'central-factor-below-D'
COMPLEMENT_CONDITION = 'complement-condition'
REDUCIBLE_SYLOW_ACTION = 'reducible-sylow-action'


@dataclass(frozen=True)
class ChainStep:
    """How A_{i-1} sits in A_i"""
    kind: str
    block: Any = None


@dataclass(frozen=True)
class SubnormalChainWitness:
    """A = chain[0] ≤ ... ≤ chain[-1] = G with one step per link"""
    chain: tuple
    steps: tuple

    def describe(self, sigma):
        """JSON-friendly form: orders, generators and step tags"""
        links = [dict(self.chain[0].describe())]
        for sub, step in zip(self.chain[1:], self.steps):
            link = dict(sub.describe())
            link['step'] = step.kind
            if step.kind == PRIMARY_CORE_STEP:
                link['block'] = sigma.label_name(step.block)
            links.append(link)
        return links


@dataclass(frozen=True)
class EmbeddingWitness:
    """@container is the σ-subnormal, σ-permutable or normal subgroup in
    which the embedded subgroup is σ-Hall"""
    container: SubgroupRef
    kind: str
    evidence: Any = None

    def describe(self, sigma):
        """Banana banana"""
        evidence = None
        if self.evidence is not None:
            evidence = self.evidence.describe(sigma)
        return {'container': self.container.describe(),
                'kind': self.kind,
                'evidence': evidence}


@dataclass
class HsigmaEReport:
    """Outcome of the HσE recognition"""
    is_hsigmaE: bool
    residual: SubgroupRef
    complement: Optional[SubgroupRef] = None
    failed_clause: Optional[str] = None
    details: dict = field(default_factory=dict)

    def describe(self):
        """Banana banana"""
        desc = {'hsigmaE': self.is_hsigmaE,
                'residual': self.residual.describe()}
        if self.complement is not None:
            desc['complement'] = self.complement.describe()
        if self.failed_clause is not None:
            desc['failed_clause'] = self.failed_clause
        desc.update(self.details)
        return desc


def step_kind(sigma, g, lower, upper):
    """
    The `ChainStep` joining @lower to @upper, or None when neither
    @lower ⊴ @upper nor @upper/core(@lower) is σ-primary.
    """
    if is_normal(g, lower, within=upper):
        return ChainStep(NORMAL_STEP)
    core = normal_core(g, lower, within=upper)
    signature = sigma_of_int(sigma, upper.order // core.order)
    if len(signature) <= 1:
        return ChainStep(PRIMARY_CORE_STEP, next(iter(signature)))
    return None


class _SubnormalSearch:
    """
    Depth-first search for σ-subnormal chains, shared by every query on
    one (table, σ, faults) triple.

    Successful steps are recorded as edges of a reachability graph whose
    nodes are subgroup bitsets, failures in `verdicts`.
    """

    def __init__(self, sigma, g):
        self.sigma = sigma
        self.g = g
        self.graph = nx.DiGraph()
        self.verdicts = {}
        self.lock = threading.RLock()

    def reaches_top(self, a):
        with self.lock:
            return self.__reaches(a)

    def __reaches(self, a):
        if a.is_whole():
            self.graph.add_node(a.bits, subgroup=a)
            return True
        try:
            return self.verdicts[a.bits]
        except KeyError:
            pass

        result = False
        for upper in overgroups(self.g, a):
            if upper == a:
                continue
            step = step_kind(self.sigma, self.g, a, upper)
            if step is None or not self.__reaches(upper):
                continue
            self.graph.add_node(a.bits, subgroup=a)
            self.graph.add_edge(a.bits, upper.bits, step=step)
            result = True
            break

        self.verdicts[a.bits] = result
        return result

    def witness(self, a):
        with self.lock:
            top = self.g.whole()
            path = nx.shortest_path(self.graph, a.bits, top.bits)
            chain = tuple(self.graph.nodes[bits]['subgroup'] for bits in path)
            steps = tuple(self.graph.edges[low, high]['step']
                          for low, high in zip(path, path[1:]))
            return SubnormalChainWitness(chain, steps)


def _subnormal_search(sigma, g):
    return g.memoize(('sigma-subnormal', sigma.key, faults.signature()),
                     lambda: _SubnormalSearch(sigma, g))


def is_sigma_subnormal(sigma, g, a):
    """
    A witness chain from @a up to @g, or None when @a is not
    σ-subnormal.
    """
    search = _subnormal_search(sigma, g)
    if not search.reaches_top(a):
        return None
    return search.witness(a)


def sigma_subnormal_subgroups(sigma, g):
    """Every σ-subnormal subgroup, sorted"""
    search = _subnormal_search(sigma, g)
    subgroups = all_subgroups(g)
    found = [s for s in reversed(subgroups) if search.reaches_top(s)]
    return sort_subgroups(found)


def _elementwise_conjugates(g, a, elements):
    elements = np.asarray(elements, dtype=np.intp)
    return g.mul[g.mul[elements[:, None], a.elements[None, :]],
                 g.inv[elements][:, None]]


def validate_chain(sigma, g, witness, a=None):
    """Re-check a `SubnormalChainWitness` by brute force"""
    chain = witness.chain
    if not chain or len(witness.steps) != len(chain) - 1:
        return False
    if a is not None and chain[0].bits != a.bits:
        return False
    if chain[-1].order != g.order:
        return False

    for lower, upper, step in zip(chain, chain[1:], witness.steps):
        if lower.bits & ~upper.bits:
            return False
        images = _elementwise_conjugates(g, lower, upper.elements)
        if step.kind == NORMAL_STEP:
            if not lower.mask[images].all():
                return False
        elif step.kind == PRIMARY_CORE_STEP:
            core = np.ones(g.order, dtype=bool)
            for row in images:
                conj = np.zeros(g.order, dtype=bool)
                conj[row] = True
                core &= conj
            signature = sigma_of_int(sigma,
                                     upper.order // int(core.sum()))
            if len(signature) > 1:
                return False
            if len(signature) == 1 and step.block not in signature:
                return False
        else:
            return False
    return True


def _permutes_with_class(g, a, member):
    def build():
        return all(permutes(g, a, conj) for conj in conjugates(g, member))
    return g.memoize(('permutes-class', a.bits, member.bits), build)


def is_sigma_permutable(sigma, g, a):
    """
    The first complete Hall σ-set every conjugate of whose members
    permutes with @a, or None.

    Raises:
        NotSigmaFull
    """
    hall_sets = complete_hall_sigma_sets(sigma, g)
    if not hall_sets:
        raise NotSigmaFull('%r has no complete Hall σ-set for %s' %
                           (g, sigma.render()))
    if a.is_whole() or is_normal(g, a):
        return hall_sets[0]
    for hall_set in hall_sets:
        if all(_permutes_with_class(g, a, member) for member in hall_set):
            return hall_set
    return None


def validate_hall_set(sigma, g, a, hall_set):
    """Re-check that @hall_set is complete and permutes with @a"""
    blocks = set(sigma_of_int(sigma, g.order))
    if set(hall_set.labels()) != blocks:
        return False
    for label, member in hall_set.items():
        primes = sigma.block_primes(label, pi(g.order))
        expected = 1
        for p in primes:
            while (g.order // expected) % p == 0:
                expected *= p
        if member.order != expected:
            return False
        for x in range(g.order):
            conj = g.mul[g.mul[x, member.elements], g.inv[x]]
            left = np.unique(g.mul[np.ix_(a.elements, conj)])
            right = np.unique(g.mul[np.ix_(conj, a.elements)])
            if not np.array_equal(left, right):
                return False
    return True


def is_s_permutable(g, a):
    """@a permutes with every Sylow subgroup"""
    return all(permutes(g, a, s)
               for p in primefactors(g.order)
               for s in sylow_subgroups(g, p))


def is_sigma_quasinormal(sigma, g, a):
    """Alias of `is_sigma_permutable`"""
    return is_sigma_permutable(sigma, g, a)


def is_h_sigma_embedded(sigma, g, a, kind):
    """
    An `EmbeddingWitness` whose container V ⊇ @a is σ-subnormal,
    σ-permutable or normal (after @kind) with @a σ-Hall in V, or None.

    Containers are tried by increasing (order, bitset).

    Raises:
        NotSigmaFull: for the permutable kind on a non σ-full group
        ValueError: for an unknown kind
    """
    if kind not in EMBEDDING_KINDS:
        raise ValueError('Unknown embedding kind %s' % kind)
    if kind == 'permutable' and not is_sigma_full(sigma, g):
        raise NotSigmaFull('%r has no complete Hall σ-set for %s' %
                           (g, sigma.render()))

    key = ('embedded', kind, sigma.key, a.bits, faults.signature())
    return g.memoize(key, lambda: _find_embedding(sigma, g, a, kind))


def _find_embedding(sigma, g, a, kind):
    if kind == 'normal':
        pool = [n for n in normal_subgroups(g) if a <= n]
    else:
        pool = overgroups(g, a)

    for container in pool:
        if not is_sigma_hall(sigma, container, a):
            continue
        if kind == 'normal':
            return EmbeddingWitness(container, kind)
        if kind == 'subnormal':
            evidence = is_sigma_subnormal(sigma, g, container)
        else:
            evidence = is_sigma_permutable(sigma, g, container)
        if evidence is not None:
            return EmbeddingWitness(container, kind, evidence)
    return None


def validate_embedding(sigma, g, a, witness):
    """Re-check an `EmbeddingWitness` for @a"""
    container = witness.container
    if a.bits & ~container.bits:
        return False
    if not sigma_of_int(sigma, a.order).isdisjoint(
            sigma_of_int(sigma, container.order // a.order)):
        return False
    if witness.kind == 'normal':
        images = _elementwise_conjugates(g, container, g.elements)
        return bool(container.mask[images].all())
    if witness.kind == 'subnormal':
        return validate_chain(sigma, g, witness.evidence, container)
    if witness.kind == 'permutable':
        return validate_hall_set(sigma, g, container, witness.evidence)
    return False


def is_hall_normally_embedded(g, a):
    """Hall subgroup of its normal closure"""
    closure = normal_closure(g, a)
    return _coprime(a.order, closure.order // a.order)


def is_hall_s_quasinormally_embedded(g, a):
    """Hall subgroup of some S-permutable subgroup"""
    return any(_coprime(a.order, v.order // a.order) and is_s_permutable(g, v)
               for v in overgroups(g, a))


def is_hall_subnormally_embedded(g, a):
    """Hall subgroup of some subnormal subgroup"""
    return any(_coprime(a.order, v.order // a.order) and is_subnormal(g, v)
               for v in overgroups(g, a))


def _coprime(a, b):
    return not (pi(a) & pi(b))


def sigma_nilpotent_residual(sigma, g):
    """
    G^{N_σ}: the smallest normal subgroup with σ-nilpotent quotient.

    The class of such normal subgroups is closed under intersection, so
    the first qualifying one by increasing order is the residual.
    """
    def build():
        for n in normal_subgroups(g):
            if is_sigma_nilpotent(sigma, quotient(g, n).target):
                return n
        raise AssertionError('G/G is σ-nilpotent')
    return g.memoize(('sigma-residual', sigma.key), build)


def residual_of_subgroup(sigma, g, e):
    """E^{N_σ} for a subgroup @e, as a subgroup of @g"""
    def build():
        inclusion = g.restrict(e)
        return inclusion.to_parent(
            sigma_nilpotent_residual(sigma, inclusion.table))
    return g.memoize(('sigma-residual-of', sigma.key, e.bits), build)


def block_residual(sigma, g, label):
    """O^{σ_i}(G), generated by the σ_i'-elements"""
    orders = g.element_orders()
    elements = [x for x in range(1, g.order)
                if all(sigma.label_of(p) != label
                       for p in primefactors(int(orders[x])))]
    return generate(g, elements)


def _is_sigma_nilpotent_subgroup(sigma, g, h):
    return is_sigma_nilpotent(sigma, g.restrict(h).table)


def _covers(sigma, g, h):
    ups = overgroups(g, h)
    # whole group first
    for e in [ups[-1]] + ups[:-1]:
        residual = residual_of_subgroup(sigma, g, e)
        if product_set(g, residual, h) != e.bits:
            return False
    return True


def sigma_carter_subgroups(sigma, g):
    """σ-nilpotent subgroups H with E = E^{N_σ}·H for every E ≥ H"""
    def build():
        return [h for h in all_subgroups(g)
                if _is_sigma_nilpotent_subgroup(sigma, g, h) and
                _covers(sigma, g, h)]
    return g.memoize(('sigma-carter', sigma.key), build)


def has_sylow_tower(g):
    """
    Whether a series of normal subgroups of @g climbs from 1 to @g with
    every factor of full Sylow order.
    """
    def build():
        normals = normal_subgroups(g)
        failed = set()

        def climb(current):
            if current.is_whole():
                return True
            if current.bits in failed:
                return False
            for p in primefactors(g.order // current.order):
                step = g.order
                while step % p == 0:
                    step //= p
                target = current.order * (g.order // step)
                for n in normals:
                    if n.order == target and current <= n and climb(n):
                        return True
            failed.add(current.bits)
            return False

        return climb(g.trivial())
    return g.memoize('sylow-tower', build)


def classify_chief_factor(sigma, g, factor):
    """`CENTRAL` when (H/K) ⋊ (G/C_G(H/K)) is σ-primary by order"""
    signature = sigma_of_int(sigma, factor.factor_order) | sigma_of_int(
        sigma, g.order // factor.centralizer.order)
    return CENTRAL if len(signature) <= 1 else ECCENTRIC


def _sylows_of(g, d):
    inclusion = g.restrict(d)
    for p in primefactors(d.order):
        for local in sylow_subgroups(inclusion.table, p):
            yield inclusion.to_parent(local)


def _action_verdicts(g, d, m):
    """(subgroup-level, module-level) irreducibility of @m on the
    @m-invariant Sylow subgroups of @d"""
    acting = m.generators
    group_level = module_level = True
    for sylow in _sylows_of(g, d):
        if not is_invariant(g, sylow, acting):
            continue
        inclusion = g.restrict(sylow)
        frattini = inclusion.to_parent(frattini_subgroup(inclusion.table))
        for local in all_subgroups(inclusion.table):
            u = inclusion.to_parent(local)
            if u.is_trivial() or u == sylow or not is_invariant(g, u, acting):
                continue
            group_level = False
            if frattini < u:
                module_level = False
    return group_level, module_level


def is_hsigmaE(sigma, g, complement_filter=None, verbose=False):
    """
    Decide whether @g is an HσE-group.

    Clauses are evaluated in order and the first failing one is named in
    the report. Complement-dependent clauses hold when SOME complement M
    of D passes @complement_filter (if any) and acts irreducibly.

    Returns:
        HsigmaEReport
    """
    if complement_filter is None and not verbose:
        key = ('hsigmaE', sigma.key, faults.signature())
        return g.memoize(key, lambda: _hsigmaE(sigma, g, None, False))
    return _hsigmaE(sigma, g, complement_filter, verbose)


def _hsigmaE(sigma, g, complement_filter, verbose):
    d = sigma_nilpotent_residual(sigma, g)

    def failed(clause, **details):
        return HsigmaEReport(False, d, failed_clause=clause, details=details)

    if not is_sigma_hall(sigma, g, d):
        return failed(RESIDUAL_NOT_HALL)
    if len(sigma_of_int(sigma, d.order)) != len(pi(d.order)):
        return failed(SIGMA_PI_MISMATCH)

    candidates = complements(g, d)
    if not candidates:
        return failed(NO_COMPLEMENT)
    if not has_sylow_tower(g.restrict(d).table):
        return failed(NO_SYLOW_TOWER)

    for factor in chief_series(g, through=d):
        if factor.top <= d and \
                classify_chief_factor(sigma, g, factor) == CENTRAL:
            return failed(CENTRAL_FACTOR_BELOW_D,
                          factor={'top': factor.top.order,
                                  'bottom': factor.bottom.order})

    if complement_filter is not None:
        candidates = [m for m in candidates if complement_filter(m)]
        if not candidates:
            return failed(COMPLEMENT_CONDITION)

    disagreements = []
    for m in candidates:
        group_level, module_level = _action_verdicts(g, d, m)
        if group_level != module_level:
            disagreements.append({'complement': m.describe(),
                                  'subgroup_reading': group_level,
                                  'module_reading': module_level})
        if group_level:
            details = {}
            if verbose and disagreements:
                details['readings'] = disagreements
            return HsigmaEReport(True, d, complement=m, details=details)

    debug('%r: no complement of D acts irreducibly' % g, 'embedding')
    details = {'readings': disagreements} if verbose and disagreements \
        else {}
    return failed(REDUCIBLE_SYLOW_ACTION, **details)
