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
Dense finite groups.

A `GroupTable` holds the full Cayley table of a group of order n whose
elements are the indices 0..n-1, 0 being the identity. A `SubgroupRef`
stores the members of a subgroup as a Python integer used as a bitset
over those indices. Everything else in hsigma is set algebra over these
two types.
"""

import threading

import numpy as np
from sympy.combinatorics import Permutation
from sympy.combinatorics.named_groups import (
    AlternatingGroup, DihedralGroup, SymmetricGroup)

from hsigma.core.bounds import Bounds
from hsigma.core.exceptions import (
    GroupSpecError, InvalidGroupTable, InvalidPermutation, NotAHomomorphism,
    NotAnAutomorphism, OrderBoundExceeded)


ASSOCIATIVITY_SAMPLES = 256
EXHAUSTIVE_ASSOCIATIVITY_ORDER = 64

# Regular representation of Q8: i = (0 1 3 6)(2 5 7 4), j = (0 2 3 7)(1 4 6 5)
_QUATERNION_GENERATORS = (
    [[0, 1, 3, 6], [2, 5, 7, 4]],
    [[0, 2, 3, 7], [1, 4, 6, 5]],
)


def mask_to_bits(mask):
    """Pack a boolean array into an integer bitset"""
    packed = np.packbits(np.asarray(mask, dtype=bool), bitorder='little')
    return int.from_bytes(packed.tobytes(), 'little')


def bits_to_mask(bits, size):
    """Unpack an integer bitset into a boolean array of length @size"""
    raw = bits.to_bytes((size + 7) // 8, 'little')
    unpacked = np.unpackbits(np.frombuffer(raw, dtype=np.uint8),
                             bitorder='little')
    return unpacked[:size].astype(bool)


def indices_to_bits(indices, size):
    """Bitset with exactly @indices set"""
    mask = np.zeros(size, dtype=bool)
    mask[np.asarray(indices, dtype=np.intp)] = True
    return mask_to_bits(mask)


def validate_table(mul):
    """
    Check the group axioms on a square table whose identity is 0.

    Every row and column must be a permutation of 0..n-1 and row and
    column 0 the identity map. Associativity is checked on every triple
    up to order 64 and on a fixed pseudo-random sample above that.

    Raises:
        InvalidGroupTable
    """
    mul = np.asarray(mul)
    size = mul.shape[0]
    ref = np.arange(size)

    if mul.min() < 0 or mul.max() >= size:
        raise InvalidGroupTable('Table entries must lie in 0..%d' % (size - 1))

    if not (np.sort(mul, axis=1) == ref).all():
        raise InvalidGroupTable('Some row is not a permutation')
    if not (np.sort(mul, axis=0) == ref[:, None]).all():
        raise InvalidGroupTable('Some column is not a permutation')
    if not (mul[0] == ref).all() or not (mul[:, 0] == ref).all():
        raise InvalidGroupTable('Element 0 is not the identity')

    if size <= EXHAUSTIVE_ASSOCIATIVITY_ORDER:
        left = mul[mul]
        right = mul[ref[:, None, None], mul[None, :, :]]
        bad = np.argwhere(left != right)
    else:
        rng = np.random.default_rng(0)
        triples = rng.integers(0, size, size=(ASSOCIATIVITY_SAMPLES, 3))
        a, b, c = triples.T
        bad = triples[mul[mul[a, b], c] != mul[a, mul[b, c]]]

    if len(bad):
        raise InvalidGroupTable('Multiplication is not associative on %s' %
                                (tuple(int(i) for i in bad[0]),))


class GroupTable:
    """
    A finite group as a Cayley table.

    Attributes:
        order: int, the number of elements.
        mul: numpy array, mul[a, b] is the index of a·b.
        inv: numpy array, inv[a] is the index of a⁻¹.
        labels: list of str or None, human-readable element names.
        name: str or None, the expression the group was built from.

    Instances are immutable. Derived data (lattice, normal subgroups,
    quotients, σ-searches...) is memoized per table through `memoize`,
    which builds each value once under a lock.
    """

    def __init__(self, mul, labels=None, name=None, validate=True):
        mul = np.array(mul, dtype=np.intp)
        if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or not mul.size:
            raise InvalidGroupTable(
                'The multiplication table must be a non-empty square')

        Bounds.check_order(mul.shape[0])
        if validate:
            validate_table(mul)

        self.order = mul.shape[0]
        self.mul = mul
        self.mul.setflags(write=False)
        self.inv = np.argmax(mul == 0, axis=1)
        self.inv.setflags(write=False)
        self.labels = list(labels) if labels is not None else None
        self.name = name
        self._lock = threading.RLock()
        self._memo = {}

    def __getstate__(self):
        state = self.__dict__.copy()
        del state['_lock']
        state['_memo'] = {}
        return state

    def __setstate__(self, state):
        self.__dict__.update(state)
        self._lock = threading.RLock()

    def __repr__(self):
        return '<GroupTable %s of order %d>' % (self.name or '?', self.order)

    def memoize(self, key, builder):
        """
        Return the value cached under @key, building it with @builder the
        first time.
        """
        with self._lock:
            try:
                return self._memo[key]
            except KeyError:
                pass
            value = builder()
            self._memo[key] = value
            return value

    def has_memo(self, key):
        """Whether @key was already built"""
        with self._lock:
            return key in self._memo

    def label(self, element):
        """Printable name of @element"""
        if self.labels is not None:
            return self.labels[element]
        return str(int(element))

    @property
    def elements(self):
        """All element indices"""
        return np.arange(self.order)

    def trivial(self):
        """The trivial subgroup"""
        return self.memoize('trivial', lambda: SubgroupRef(self, 1, ()))

    def whole(self):
        """The group as a subgroup of itself"""
        return self.memoize(
            'whole', lambda: SubgroupRef(self, (1 << self.order) - 1,
                                         self.generators()))

    def generators(self):
        """A small generating set, chosen greedily by index"""
        return self.memoize(
            'generators',
            lambda: _greedy_generators(self, np.arange(self.order)))

    def element_orders(self):
        """Array of element orders"""
        return self.memoize('element-orders', self.__compute_orders)

    def __compute_orders(self):
        orders = np.zeros(self.order, dtype=np.intp)
        base = np.arange(self.order)
        power = base.copy()
        for k in range(1, self.order + 1):
            hit = (orders == 0) & (power == 0)
            orders[hit] = k
            if orders.all():
                break
            power = self.mul[power, base]
        orders.setflags(write=False)
        return orders

    def exponent(self):
        """Least common multiple of the element orders"""
        return int(np.lcm.reduce(self.element_orders()))

    def power_map(self, exponent):
        """Array sending every x to x^exponent"""
        exponent %= self.exponent()
        result = np.zeros(self.order, dtype=np.intp)
        base = np.arange(self.order)
        while exponent:
            if exponent & 1:
                result = self.mul[result, base]
            base = self.mul[base, base]
            exponent >>= 1
        return result

    def restrict(self, sub):
        """
        The subgroup @sub as a standalone group.

        Returns:
            Inclusion: the subgroup's own table plus the index embedding.
        """
        return self.memoize(('inclusion', sub.bits),
                            lambda: Inclusion(self, sub))


class SubgroupRef:
    """
    A subgroup of a `GroupTable`.

    Members are stored as an integer bitset; the element array, the
    boolean mask and, when not supplied, a generating set are derived
    lazily. Equality is identity of parent plus equality of members.
    """

    __slots__ = ('parent', 'bits', '_generators', '_elements', '_mask')

    def __init__(self, parent, bits, generators=None):
        self.parent = parent
        self.bits = bits
        self._generators = tuple(generators) \
            if generators is not None else None
        self._elements = None
        self._mask = None

    @property
    def order(self):
        """Number of members"""
        return self.bits.bit_count()

    @property
    def index(self):
        """|G:A|"""
        return self.parent.order // self.order

    @property
    def elements(self):
        """Sorted numpy array of member indices"""
        if self._elements is None:
            self._elements = np.flatnonzero(self.mask)
        return self._elements

    @property
    def mask(self):
        """Boolean membership array over the parent's elements"""
        if self._mask is None:
            self._mask = bits_to_mask(self.bits, self.parent.order)
            self._mask.setflags(write=False)
        return self._mask

    @property
    def generators(self):
        """Element indices generating exactly the members"""
        if self._generators is None:
            self._generators = _greedy_generators(self.parent, self.elements)
        return self._generators

    def sort_key(self):
        """Deterministic order: by order, then by bitset"""
        return (self.order, self.bits)

    def is_trivial(self):
        """Banana banana"""
        return self.bits == 1

    def is_whole(self):
        """Banana banana"""
        return self.order == self.parent.order

    def __contains__(self, element):
        return (self.bits >> int(element)) & 1 == 1

    def __le__(self, other):
        return self.bits & ~other.bits == 0

    def __lt__(self, other):
        return self.bits != other.bits and self <= other

    def __ge__(self, other):
        return other <= self

    def __gt__(self, other):
        return other < self

    def __and__(self, other):
        return SubgroupRef(self.parent, self.bits & other.bits)

    def __eq__(self, other):
        if not isinstance(other, SubgroupRef):
            return NotImplemented
        return self.parent is other.parent and self.bits == other.bits

    def __hash__(self):
        return hash(self.bits)

    def __repr__(self):
        return '<SubgroupRef order %d of %r>' % (self.order, self.parent)

    def describe(self):
        """JSON-friendly summary: order and generator words"""
        return {'order': self.order,
                'generators': [self.parent.label(g) for g in self.generators]}


class Inclusion:
    """
    A subgroup turned into a group of its own.

    Local index i stands for the parent element `elements[i]`; since
    the members are sorted and contain 0, the identity stays at 0.
    """

    def __init__(self, parent, subgroup):
        self.parent = parent
        self.subgroup = subgroup
        self.elements = subgroup.elements
        local = np.searchsorted(
            self.elements, parent.mul[np.ix_(self.elements, self.elements)])
        labels = None
        if parent.labels is not None:
            labels = [parent.labels[i] for i in self.elements]
        self.table = GroupTable(local, labels=labels, validate=False)

    def to_parent(self, local):
        """Image in the parent of a subgroup of the local table"""
        gens = None
        if local._generators is not None:
            gens = tuple(int(self.elements[g]) for g in local._generators)
        return SubgroupRef(
            self.parent,
            indices_to_bits(self.elements[local.elements], self.parent.order),
            gens)

    def to_local(self, sub):
        """A parent subgroup contained in this one, in local indices"""
        if not sub <= self.subgroup:
            raise ValueError('%r is not contained in %r' %
                             (sub, self.subgroup))
        local = np.searchsorted(self.elements, sub.elements)
        return SubgroupRef(self.table, indices_to_bits(local, self.table.order))


class QuotientMap:
    """
    The natural map from `source` onto `target` = source / kernel.

    Cosets are numbered by their smallest member index, so that the
    identity coset is 0 and numbering is deterministic.
    """

    def __init__(self, source, kernel, target, element_map, representatives):
        self.source = source
        self.kernel = kernel
        self.target = target
        self.element_map = element_map
        self.representatives = representatives

    def image(self, sub):
        """AN/N for a subgroup A of the source"""
        images = np.unique(self.element_map[sub.elements])
        return SubgroupRef(self.target,
                           indices_to_bits(images, self.target.order))

    def preimage(self, sub):
        """The full preimage of a subgroup of the target"""
        mask = sub.mask[self.element_map]
        gens = list(self.kernel.generators) + [
            int(self.representatives[g]) for g in sub.generators]
        return SubgroupRef(self.source, mask_to_bits(mask), gens)


def generate(table, elements, base=None):
    """
    Smallest subgroup of @table containing @elements (and @base).

    Breadth-first closure under right multiplication by the generators.
    """
    gens = {int(e) for e in elements}
    if base is not None:
        gens.update(base.generators)
        mask = base.mask.copy()
        frontier = base.elements
    else:
        mask = np.zeros(table.order, dtype=bool)
        mask[0] = True
        frontier = np.array([0], dtype=np.intp)

    gens.discard(0)
    gens = tuple(sorted(gens))
    if not gens:
        return SubgroupRef(table, mask_to_bits(mask), ())

    gen_array = np.array(gens, dtype=np.intp)
    while frontier.size:
        products = np.unique(table.mul[np.ix_(frontier, gen_array)])
        new = products[~mask[products]]
        mask[new] = True
        frontier = new

    return SubgroupRef(table, mask_to_bits(mask), gens)


def _greedy_generators(table, elements):
    gens = []
    current = None
    for element in elements:
        element = int(element)
        if element == 0 or (current is not None and element in current):
            continue
        gens.append(element)
        current = generate(table, [element], base=current)
    return tuple(gens)


def as_permutation(obj, degree=None):
    """
    Coerce @obj into a sympy `Permutation`.

    Args:
        obj: a `Permutation` or a sequence of images.
        degree: int, optional size to extend to.

    Raises:
        InvalidPermutation: if the images are not a bijection on 0..d-1
    """
    if isinstance(obj, Permutation):
        perm = obj
    else:
        try:
            images = [int(i) for i in obj]
        except (TypeError, ValueError) as err:
            raise InvalidPermutation('Bad image array %r (%s)' % (obj, err))
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(
                '%s is not a bijection on 0..%d' % (images, len(images) - 1))
        perm = Permutation(images)

    if degree is not None and perm.size < degree:
        perm = Permutation(perm.array_form, size=degree)
    return perm


def _cycle_label(images):
    cycles = Permutation(list(images)).cyclic_form
    if not cycles:
        return '()'
    return ''.join('(%s)' % ' '.join(str(i) for i in c) for c in cycles)


def group_from_generators(gens, max_order=None, name=None):
    """
    Cayley table of the permutation group generated by @gens.

    Elements are discovered breadth-first from the identity, which
    therefore gets index 0. The product a·b applies a first, as sympy
    does.

    Raises:
        InvalidPermutation, OrderBoundExceeded
    """
    if not gens:
        raise InvalidPermutation('At least one generator is required')

    bound = Bounds.max_order if max_order is None else max_order
    degree = max(as_permutation(g).size for g in gens)
    arrays = [np.array(as_permutation(g, degree).array_form, dtype=np.intp)
              for g in gens]

    identity = np.arange(degree)
    elements = [identity]
    seen = {identity.tobytes(): 0}
    frontier = [identity]
    while frontier:
        discovered = []
        for elem in frontier:
            for gen in arrays:
                prod = gen[elem]
                key = prod.tobytes()
                if key in seen:
                    continue
                seen[key] = len(elements)
                elements.append(prod)
                discovered.append(prod)
                if len(elements) > bound:
                    raise OrderBoundExceeded(
                        'Closure of %d generators exceeds %d elements' %
                        (len(gens), bound), order=len(elements), bound=bound)
        frontier = discovered

    images = np.array(elements)
    mul = np.empty((len(elements), len(elements)), dtype=np.intp)
    for i, elem in enumerate(elements):
        mul[i] = [seen[row.tobytes()] for row in images[:, elem]]

    labels = [_cycle_label(e) for e in elements]
    return GroupTable(mul, labels=labels, name=name, validate=False)


def cyclic_group(order):
    """C_n, the element k standing for the k-th power of a generator"""
    if order < 1:
        raise GroupSpecError('cyclic(n) needs n >= 1, got %d' % order)
    Bounds.check_order(order)
    ref = np.arange(order)
    return GroupTable(np.add.outer(ref, ref) % order,
                      name='cyclic(%d)' % order, validate=False)


def symmetric_group(degree):
    """Banana banana"""
    if degree < 1:
        raise GroupSpecError('sym(n) needs n >= 1, got %d' % degree)
    name = 'sym(%d)' % degree
    if degree < 2:
        return GroupTable([[0]], name=name, validate=False)
    return group_from_generators(SymmetricGroup(degree).generators,
                                 name=name)


def alternating_group(degree):
    """Banana banana"""
    if degree < 1:
        raise GroupSpecError('alt(n) needs n >= 1, got %d' % degree)
    name = 'alt(%d)' % degree
    if degree < 3:
        return GroupTable([[0]], name=name, validate=False)
    return group_from_generators(AlternatingGroup(degree).generators,
                                 name=name)


def dihedral_group(order):
    """The dihedral group with @order elements"""
    if order < 2 or order % 2:
        raise GroupSpecError('dihedral(2n) needs an even order, got %d' %
                             order)
    return group_from_generators(DihedralGroup(order // 2).generators,
                                 name='dihedral(%d)' % order)


def quaternion_group(order=8):
    """Q8 in its regular permutation representation"""
    if order != 8:
        raise GroupSpecError('Only quaternion(8) is available, got %d' %
                             order)
    gens = [Permutation(cycles, size=8) for cycles in _QUATERNION_GENERATORS]
    return group_from_generators(gens, name='quaternion(8)')


def direct_product(left, right):
    """
    Componentwise product of two tables.

    The pair (a, b) gets index a·|right| + b. The returned table carries
    `factor_maps`, the index arrays embedding @left and @right.
    """
    order = left.order * right.order
    Bounds.check_order(order)

    mul = (left.mul[:, None, :, None] * right.order +
           right.mul[None, :, None, :]).reshape(order, order)

    labels = None
    if left.labels is not None or right.labels is not None:
        labels = ['(%s, %s)' % (left.label(a), right.label(b))
                  for a in range(left.order) for b in range(right.order)]

    name = None
    if left.name and right.name:
        name = 'direct(%s, %s)' % (left.name, right.name)

    table = GroupTable(mul, labels=labels, name=name, validate=False)
    table.factor_maps = (np.arange(left.order) * right.order,
                         np.arange(right.order))
    return table


def semidirect_product(normal, acting, action, name=None):
    """
    The table of @normal ⋊ @acting.

    Args:
        action: array of shape (acting.order, normal.order); row x is the
            automorphism of @normal by which x acts.

    The pair (a, x) gets index a + |normal|·x and multiplies as
    (a, x)(b, y) = (a·x(b), xy).

    Raises:
        NotAnAutomorphism, NotAHomomorphism
    """
    act = np.asarray(action, dtype=np.intp)
    if act.shape != (acting.order, normal.order):
        raise NotAHomomorphism(
            'The action needs one automorphism per acting element, got '
            'shape %s' % (act.shape,))

    ref = np.arange(normal.order)
    for x in range(acting.order):
        img = act[x]
        if not (np.sort(img) == ref).all():
            raise NotAnAutomorphism(
                'The image of acting element %d is not a bijection' % x,
                witness=(x,))
        bad = np.argwhere(img[normal.mul] != normal.mul[np.ix_(img, img)])
        if len(bad):
            a, b = (int(i) for i in bad[0])
            raise NotAnAutomorphism(
                'Acting element %d does not preserve %d·%d' % (x, a, b),
                witness=(x, a, b))

    for x in range(acting.order):
        bad = np.argwhere(act[x][act] != act[acting.mul[x]])
        if len(bad):
            y, b = (int(i) for i in bad[0])
            raise NotAHomomorphism(
                'Acting by %d then %d differs from acting by their product '
                'on %d' % (y, x, b), witness=(x, y, b))

    order = normal.order * acting.order
    Bounds.check_order(order)
    idx = np.arange(order)
    first = idx % normal.order
    second = idx // normal.order
    mul = normal.mul[first[:, None], act[second[:, None], first[None, :]]] + \
        normal.order * acting.mul[second[:, None], second[None, :]]

    return GroupTable(mul, name=name, validate=False)


def power_action(normal, acting, exponent):
    """
    Action of the cyclic group @acting on @normal in which a generator
    acts by x → x^@exponent.

    Raises:
        NotAHomomorphism: if @acting is not cyclic
    """
    orders = acting.element_orders()
    generators = np.flatnonzero(orders == acting.order)
    if not generators.size:
        raise NotAHomomorphism('Power actions need a cyclic acting group')
    gen = int(generators[0])

    exp = normal.exponent()
    action = np.empty((acting.order, normal.order), dtype=np.intp)
    element, power = 0, 1
    for _ in range(acting.order):
        action[element] = normal.power_map(power)
        element = int(acting.mul[element, gen])
        power = (power * exponent) % exp
    return action


def frobenius_group(p, q, k):
    """
    C_p ⋊ C_q, a generator of C_q acting by x → kx mod p.

    p and q need not be prime; k must have multiplicative order dividing
    q modulo p.

    Raises:
        GroupSpecError
    """
    for value in (p, q):
        if value < 1:
            raise GroupSpecError('frobenius(p,q,k) needs positive p and q')
    normal, acting = cyclic_group(p), cyclic_group(q)
    try:
        return semidirect_product(normal, acting,
                                  power_action(normal, acting, k),
                                  name='frobenius(%d,%d,%d)' % (p, q, k))
    except (NotAnAutomorphism, NotAHomomorphism) as err:
        raise GroupSpecError(
            'frobenius(%d,%d,%d): %d does not act on C_%d with order '
            'dividing %d (%s)' % (p, q, k, k, p, q, err.message))


def table_group(mul, name=None):
    """
    Group from an explicit Cayley table whose identity can sit anywhere.

    Elements are relabeled so that the identity becomes 0.

    Raises:
        InvalidGroupTable
    """
    mul = np.array(mul, dtype=np.intp)
    if mul.ndim != 2 or mul.shape[0] != mul.shape[1] or not mul.size:
        raise InvalidGroupTable('Expected a non-empty square table')
    size = mul.shape[0]
    ref = np.arange(size)
    if mul.min() < 0 or mul.max() >= size:
        raise InvalidGroupTable('Table entries must lie in 0..%d' % (size - 1))

    identities = [e for e in range(size)
                  if (mul[e] == ref).all() and (mul[:, e] == ref).all()]
    if not identities:
        raise InvalidGroupTable('The table has no identity element')

    ident = identities[0]
    perm = ref.copy()
    perm[0], perm[ident] = ident, 0
    # perm is an involution: new index i is old element perm[i]
    relabeled = perm[mul[np.ix_(perm, perm)]]
    return GroupTable(relabeled, name=name, validate=True)
