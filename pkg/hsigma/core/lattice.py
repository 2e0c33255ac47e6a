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
Subgroup lattice and classical structure queries.

Functions here take a `GroupTable` first and return `SubgroupRef`s of
that table. Anything expensive is memoized on the table, keyed by the
bitsets involved.
"""

import math
from collections import deque
from dataclasses import dataclass

import numpy as np
from sympy import factorint, primefactors

from hsigma.core.bounds import Bounds
from hsigma.core.exceptions import NotNormal, TrivialGroup
from hsigma.core.group import (
    GroupTable, QuotientMap, SubgroupRef, generate, indices_to_bits,
    mask_to_bits)
from hsigma.utils import faults
from hsigma.utils.loggable import debug


@dataclass(frozen=True)
class ChiefFactor:
    """A chief factor top/bottom of the parent group"""
    top: SubgroupRef
    bottom: SubgroupRef
    centralizer: SubgroupRef
    factor_order: int


def sort_subgroups(subgroups):
    """Deterministic (order, bitset) ordering"""
    return sorted(subgroups, key=SubgroupRef.sort_key)


def subgroup_generated(g, elements):
    """Smallest subgroup of @g containing @elements"""
    return generate(g, elements)


def cyclic_subgroup(g, element):
    """Banana banana"""
    return generate(g, [element])


def subgroup_table(g, a):
    """@a as a group of its own, see `GroupTable.restrict`"""
    return g.restrict(a)


def prime_part(n, p):
    """Largest power of @p dividing @n"""
    part = 1
    while n % p == 0:
        n //= p
        part *= p
    return part


def is_squarefree(n):
    """Banana banana"""
    return all(e == 1 for e in factorint(n).values())


def conjugate(g, a, x):
    """x·a·x⁻¹"""
    xi = g.inv[x]
    images = g.mul[g.mul[x, a.elements], xi]
    gens = tuple(sorted({int(i) for i in
                         g.mul[g.mul[x, list(a.generators)], xi]}))
    return SubgroupRef(g, indices_to_bits(images, g.order), gens)


def _orbit(g, a, acting):
    seen = {a.bits: a}
    queue = [a]
    for sub in queue:
        for x in acting:
            conj = conjugate(g, sub, x)
            if conj.bits not in seen:
                seen[conj.bits] = conj
                queue.append(conj)
    return sort_subgroups(seen.values())


def conjugates(g, a):
    """The distinct conjugates of @a, sorted"""
    return g.memoize(('conjugates', a.bits),
                     lambda: _orbit(g, a, g.generators()))


def _conjugation_images(g, acting, elements):
    acting = np.asarray(acting, dtype=np.intp)
    elements = np.asarray(elements, dtype=np.intp)
    return g.mul[g.mul[acting[:, None], elements[None, :]],
                 g.inv[acting][:, None]]


def is_normal(g, a, within=None):
    """
    Whether @a is normal in @g, or in the subgroup @within when given
    (which must then contain @a).
    """
    acting = within.generators if within is not None else g.generators()
    return is_invariant(g, a, acting)


def normal_closure(g, a, within=None):
    """Smallest subgroup normal in @g (or @within) containing @a"""
    acting = within.generators if within is not None else g.generators()
    current = a
    while True:
        gens = current.generators
        if not gens or not acting:
            return current
        images = np.unique(_conjugation_images(g, acting, gens))
        new = images[~current.mask[images]]
        if not new.size:
            return current
        current = generate(g, new, base=current)


def normal_core(g, a, within=None):
    """Largest subgroup of @a normal in @g (or @within)"""
    if faults.is_active('normal-core'):
        return a
    if within is None:
        orbit = conjugates(g, a)
    else:
        orbit = _orbit(g, a, within.generators)
    bits = a.bits
    for conj in orbit:
        bits &= conj.bits
    return SubgroupRef(g, bits)


def normalizer(g, a, within=None):
    """N_G(a), or N_within(a)"""
    candidates = within.elements if within is not None else g.elements
    keep = np.ones(len(candidates), dtype=bool)
    for h in a.generators:
        images = g.mul[g.mul[candidates, h], g.inv[candidates]]
        keep &= a.mask[images]
    return SubgroupRef(g, indices_to_bits(candidates[keep], g.order))


def centralizer(g, elements):
    """Elements of @g commuting with every element of @elements"""
    candidates = g.elements
    keep = np.ones(g.order, dtype=bool)
    for e in elements:
        keep &= g.mul[candidates, e] == g.mul[e, candidates]
    return SubgroupRef(g, mask_to_bits(keep))


def center(g):
    """Banana banana"""
    return g.memoize('center', lambda: centralizer(g, g.generators()))


def centralizer_of_factor(g, top, bottom):
    """
    C_G(top/bottom) = {x : [x, h] ∈ bottom for all h ∈ top}

    Raises:
        NotNormal: if a subgroup is not normal or bottom ⊄ top
    """
    for sub in (top, bottom):
        if not is_normal(g, sub):
            raise NotNormal('%r is not normal' % sub)
    if not bottom <= top:
        raise NotNormal('%r is not contained in %r' % (bottom, top))

    x = g.elements
    keep = np.ones(g.order, dtype=bool)
    for h in top.generators:
        comm = g.mul[g.mul[g.mul[g.inv[x], g.inv[h]], x], h]
        keep &= bottom.mask[comm]
    return SubgroupRef(g, mask_to_bits(keep))


def quotient(g, n):
    """
    The natural map @g → @g/@n.

    Raises:
        NotNormal
    """
    if not is_normal(g, n):
        raise NotNormal('Cannot divide by the non-normal %r' % n)
    return g.memoize(('quotient', n.bits), lambda: _build_quotient(g, n))


def _build_quotient(g, n):
    members = n.elements
    coset_of = np.full(g.order, -1, dtype=np.intp)
    representatives = []
    for x in range(g.order):
        if coset_of[x] >= 0:
            continue
        coset_of[g.mul[x, members]] = len(representatives)
        representatives.append(x)

    reps = np.array(representatives, dtype=np.intp)
    mul = coset_of[g.mul[np.ix_(reps, reps)]]
    labels = None
    if g.labels is not None:
        labels = [g.labels[r] + 'N' for r in reps]
    name = None
    if g.name:
        name = '%s/%d' % (g.name, n.order)
    target = GroupTable(mul, labels=labels, name=name, validate=False)
    return QuotientMap(g, n, target, coset_of, reps)


def element_orders(g):
    """Banana banana"""
    return g.element_orders()


def conjugacy_classes(g):
    """Conjugacy classes as sorted index arrays, ordered by first member"""
    def build():
        seen = np.zeros(g.order, dtype=bool)
        classes = []
        x_all = g.elements
        for x in range(g.order):
            if seen[x]:
                continue
            cls = np.unique(g.mul[g.mul[x_all, x], g.inv])
            seen[cls] = True
            classes.append(cls)
        return classes
    return g.memoize('conjugacy-classes', build)


def normal_subgroups(g):
    """
    All normal subgroups, sorted.

    Built from the normal closures of conjugacy class representatives,
    closed under joins. No lattice enumeration needed.
    """
    def build():
        basic = {}
        for cls in conjugacy_classes(g)[1:]:
            closure = normal_closure(g, cyclic_subgroup(g, int(cls[0])))
            basic.setdefault(closure.bits, closure)

        trivial = g.trivial()
        found = {trivial.bits: trivial}
        found.update(basic)
        queue = deque(found.values())
        while queue:
            current = queue.popleft()
            for piece in basic.values():
                if piece <= current:
                    continue
                join = generate(g, piece.generators, base=current)
                if join.bits not in found:
                    found[join.bits] = join
                    queue.append(join)
        return sort_subgroups(found.values())
    return g.memoize('normal-subgroups', build)


def minimal_normal_subgroups(g):
    """
    Minimal nontrivial normal subgroups

    Raises:
        TrivialGroup
    """
    if g.order == 1:
        raise TrivialGroup('The trivial group has no minimal normal subgroup')
    nontrivial = [n for n in normal_subgroups(g) if not n.is_trivial()]
    return [n for n in nontrivial if not any(m < n for m in nontrivial)]


def _prime_power_elements(g):
    orders = g.element_orders()
    return [x for x in range(1, g.order)
            if len(primefactors(int(orders[x]))) == 1]


def _cyclic_powers(g, x):
    order = int(g.element_orders()[x])
    powers = []
    current = x
    for k in range(1, order):
        if math.gcd(k, order) == 1:
            powers.append(current)
        current = int(g.mul[current, x])
    return np.array(powers, dtype=np.intp)


def _extension_cover(g, sub, x, acting):
    """
    Every y with ⟨sub, y⟩ conjugate to ⟨sub, x⟩ under ⟨@acting⟩, where
    @acting normalizes @sub: the elements s·x^k·t (s, t in sub, k prime
    to the order of x) and their images under @acting.
    """
    members = sub.elements
    left = g.mul[np.ix_(members, _cyclic_powers(g, x))].ravel()
    covered = np.unique(g.mul[np.ix_(left, members)])
    mask = np.zeros(g.order, dtype=bool)
    mask[covered] = True
    if len(acting):
        frontier = covered
        while frontier.size:
            images = np.unique(_conjugation_images(g, acting, frontier))
            frontier = images[~mask[images]]
            mask[frontier] = True
    return mask


def all_subgroups(g):
    """
    Every subgroup of @g exactly once, sorted by (order, bitset).

    Subgroups are grown one conjugacy class at a time: each class
    representative is extended by prime-power-order elements, skipping
    elements that provably give an already seen extension.

    Raises:
        LatticeBoundExceeded
    """
    Bounds.check_lattice(g.order)
    return g.memoize('lattice', lambda: _enumerate_lattice(g))


def _enumerate_lattice(g):
    candidates = _prime_power_elements(g)
    trivial = g.trivial()
    found = {trivial.bits: trivial}
    queue = deque([trivial])
    while queue:
        rep = queue.popleft()
        if rep.is_whole():
            continue
        acting = normalizer(g, rep).generators
        covered = rep.mask.copy()
        for x in candidates:
            if covered[x]:
                continue
            extension = generate(g, [x], base=rep)
            covered |= _extension_cover(g, rep, x, acting)
            if extension.bits in found:
                continue
            for conj in conjugates(g, extension):
                found[conj.bits] = conj
            queue.append(extension)

    debug('%r has %d subgroups' % (g, len(found)), 'lattice')
    return sort_subgroups(found.values())


def overgroups(g, a):
    """
    Every subgroup containing @a, sorted.

    Filters the lattice when it is already known, otherwise closes ⟨a, x⟩
    upwards without building the lattice.
    """
    def build():
        if g.has_memo('lattice'):
            return [s for s in all_subgroups(g) if a <= s]

        candidates = _prime_power_elements(g)
        found = {a.bits: a}
        queue = deque([a])
        while queue:
            sub = queue.popleft()
            if sub.is_whole():
                continue
            covered = sub.mask.copy()
            for x in candidates:
                if covered[x]:
                    continue
                extension = generate(g, [x], base=sub)
                covered |= _extension_cover(g, sub, x, ())
                if extension.bits not in found:
                    found[extension.bits] = extension
                    queue.append(extension)
        return sort_subgroups(found.values())
    return g.memoize(('overgroups', a.bits), build)


def maximal_subgroups(g):
    """Banana banana"""
    def build():
        proper = [s for s in all_subgroups(g) if not s.is_whole()]
        maximal = []
        for s in proper:
            if not any(t.order > s.order and s < t for t in proper):
                maximal.append(s)
        return maximal
    return g.memoize('maximal-subgroups', build)


def frattini_subgroup(g):
    """
    Intersection of the maximal subgroups

    Raises:
        LatticeBoundExceeded
    """
    if g.order == 1:
        return g.trivial()
    bits = g.whole().bits
    for m in maximal_subgroups(g):
        bits &= m.bits
    return SubgroupRef(g, bits)


def sylow_subgroups(g, p):
    """
    All Sylow @p-subgroups, sorted; the trivial subgroup when p ∤ |g|.

    One Sylow subgroup is grown inside successive normalizers, the rest
    are its conjugates.
    """
    target = prime_part(g.order, p)
    if target == 1:
        return [g.trivial()]

    def build():
        orders = g.element_orders()
        p_elements = [x for x in range(1, g.order)
                      if prime_part(int(orders[x]), p) == int(orders[x])]
        current = g.trivial()
        while current.order < target:
            norm = normalizer(g, current)
            for x in p_elements:
                if x in norm and x not in current:
                    candidate = generate(g, [x], base=current)
                    if prime_part(candidate.order, p) == candidate.order:
                        current = candidate
                        break
            else:
                raise AssertionError('Could not grow a Sylow %d-subgroup' % p)

        result = conjugates(g, current)
        assert len(result) % p == 1 % p, 'Sylow count not 1 mod p'
        return result
    return g.memoize(('sylow', p), build)


def hall_subgroups(g, primes):
    """
    All Hall subgroups for the prime set @primes (possibly none), sorted
    """
    primes = frozenset(primes) & frozenset(primefactors(g.order))
    target = 1
    for p in primes:
        target *= prime_part(g.order, p)

    if target == 1:
        return [g.trivial()]
    if target == g.order:
        return [g.whole()]
    if len(primes) == 1:
        return sylow_subgroups(g, next(iter(primes)))
    return g.memoize(
        ('hall', primes),
        lambda: [s for s in all_subgroups(g) if s.order == target])


def complements(g, n):
    """
    Subgroups M with M ∩ n = 1 and |M|·|n| = |g|

    Raises:
        NotNormal
    """
    if not is_normal(g, n):
        raise NotNormal('%r is not normal' % n)
    target = g.order // n.order
    if target == 1:
        return [g.trivial()]
    if n.is_trivial():
        return [g.whole()]
    return [s for s in all_subgroups(g)
            if s.order == target and s.bits & n.bits == 1]


def commutator(g, a, b):
    """[a, b]"""
    seeds = set()
    for x in a.generators:
        for y in b.generators:
            seeds.add(int(g.mul[g.mul[g.inv[x], g.inv[y]], g.mul[x, y]]))
    seeds.discard(0)
    joined = generate(g, list(a.generators) + list(b.generators))
    return normal_closure(g, generate(g, seeds), within=joined)


def derived_series(g):
    """Banana banana"""
    series = [g.whole()]
    while True:
        nxt = commutator(g, series[-1], series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)


def lower_central_series(g):
    """G = γ1 ≥ γ2 = [γ1, G] ≥ ... down to the first repeated term"""
    whole = g.whole()
    series = [whole]
    while True:
        nxt = commutator(g, series[-1], whole)
        if nxt == series[-1]:
            return series
        series.append(nxt)


def nilpotent_residual(g):
    """G^N, the limit of the lower central series"""
    return g.memoize('nilpotent-residual',
                     lambda: lower_central_series(g)[-1])


def is_soluble(g):
    """Banana banana"""
    return derived_series(g)[-1].is_trivial()


def is_nilpotent(g):
    """Every Sylow subgroup is normal"""
    return all(is_normal(g, sylow_subgroups(g, p)[0])
               for p in primefactors(g.order))


def is_cyclic(g):
    """Banana banana"""
    return bool((g.element_orders() == g.order).any())


def is_cyclic_squarefree(g):
    """Cyclic of square-free order"""
    return is_squarefree(g.order) and is_cyclic(g)


def is_dedekind(g):
    """Every subgroup is normal, checked on cyclic subgroups"""
    for cls in conjugacy_classes(g):
        cyclic = cyclic_subgroup(g, int(cls[0]))
        if not cyclic.mask[cls].all():
            return False
    return True


def product_set(g, a, b):
    """The bitset of a·b"""
    products = np.unique(g.mul[np.ix_(a.elements, b.elements)])
    return indices_to_bits(products, g.order)


def permutes(g, a, b):
    """Whether a·b = b·a"""
    if a <= b or b <= a:
        return True
    return product_set(g, a, b) == product_set(g, b, a)


def is_hall(g, a):
    """Order and index coprime"""
    return math.gcd(a.order, a.index) == 1


def is_subnormal(g, a):
    """
    Classical subnormality: the series G ≥ a^G ≥ (a^G)-closure ... must
    reach @a.
    """
    current = g.whole()
    while current != a:
        nxt = normal_closure(g, a, within=current)
        if nxt == current:
            return False
        current = nxt
    return True


def is_carter_subgroup(g, a):
    """Nilpotent and self-normalizing"""
    return is_nilpotent(g.restrict(a).table) and normalizer(g, a) == a


def chief_series(g, through=None):
    """
    A chief series of @g, as a list of `ChiefFactor`s from the bottom.

    At every step the smallest normal subgroup (by order, then bitset)
    strictly above the current term is chosen. When @through is given
    the series passes through it.
    """
    key = ('chief-series', through.bits if through is not None else None)
    return g.memoize(key, lambda: _build_chief_series(g, through))


def _build_chief_series(g, through):
    normals = normal_subgroups(g)
    if through is not None and not is_normal(g, through):
        raise NotNormal('%r is not normal' % through)

    factors = []
    current = g.trivial()
    targets = [through, g.whole()] if through is not None else [g.whole()]
    for target in targets:
        while current != target:
            above = [n for n in normals if current < n and n <= target]
            nxt = above[0]
            factors.append(ChiefFactor(
                top=nxt, bottom=current,
                centralizer=centralizer_of_factor(g, nxt, current),
                factor_order=nxt.order // current.order))
            current = nxt
    return factors


def is_invariant(g, a, elements):
    """Whether conjugation by every element of @elements maps @a into
    itself"""
    gens = a.generators
    if not gens or not len(elements):
        return True
    return bool(a.mask[_conjugation_images(g, elements, gens)].all())
