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
Prime partitions.

A `PrimePartition` lists finitely many explicit blocks of primes; every
other prime lives in one implicit residual block. The `finest` partition
instead puts each prime in its own block.

Block labels are the explicit block index, the prime's position in the
sequence of primes for the finest partition, and None for the residual
block (rendered `rest`).
"""

import re
from dataclasses import dataclass

from sympy import isprime, prime, primepi

from hsigma.core.exceptions import OverlappingBlocks, PartitionParseError

RESIDUAL = None

_NUMBER_RE = re.compile(r'\s*(\d+)\s*')


def label_sort_key(label):
    """Orders labels with the residual block last"""
    return (label is RESIDUAL, label if label is not RESIDUAL else 0)


class PrimePartition:
    """
    A partition of all primes into blocks.

    Args:
        blocks: iterable of disjoint nonempty prime sets.
        finest: bool, every prime its own block (then @blocks is empty).
    """

    def __init__(self, blocks=(), finest=False):
        self.blocks = tuple(frozenset(int(p) for p in b) for b in blocks)
        self.finest = finest
        if finest and self.blocks:
            raise PartitionParseError(
                'The finest partition takes no explicit blocks')

        self.__block_of = {}
        for index, block in enumerate(self.blocks):
            if not block:
                raise PartitionParseError('Empty block')
            for p in sorted(block):
                if not isprime(p):
                    raise PartitionParseError('%d is not a prime' % p)
                if p in self.__block_of:
                    raise OverlappingBlocks(
                        'Prime %d appears in two blocks' % p, prime=p)
                self.__block_of[p] = index

    @property
    def key(self):
        """Hashable identity of the partition"""
        if self.finest:
            return ('finest',)
        return tuple(tuple(sorted(b)) for b in self.blocks)

    def __eq__(self, other):
        if not isinstance(other, PrimePartition):
            return NotImplemented
        return self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return '<PrimePartition %s>' % self.render()

    def label_of(self, p):
        """The label of the block containing the prime @p"""
        if p in self.__block_of:
            return self.__block_of[p]
        if self.finest:
            return int(primepi(p)) - 1
        return RESIDUAL

    def labels_of(self, primes):
        """Banana banana"""
        return {self.label_of(p) for p in primes}

    def block_primes(self, label, primes):
        """The primes among @primes that belong to the block @label"""
        return frozenset(p for p in primes if self.label_of(p) == label)

    def label_name(self, label):
        """`{p,..}` for a finite block, `rest` for the residual one"""
        if label is RESIDUAL:
            return 'rest'
        if self.finest:
            return '{%d}' % prime(label + 1)
        return '{%s}' % ','.join(str(p) for p in sorted(self.blocks[label]))

    def restrict(self, primes):
        """
        The partition induced on the finite set @primes.

        Returns:
            list: (label, primes) pairs, nonempty blocks only, ordered by
            label with the residual block last.
        """
        blocks = {}
        for p in sorted(primes):
            blocks.setdefault(self.label_of(p), set()).add(p)
        return [(label, frozenset(blocks[label]))
                for label in sorted(blocks, key=label_sort_key)]

    def render(self):
        """Canonical text form, parseable by `parse_partition`"""
        if self.finest:
            return 'finest'
        if not self.blocks:
            return 'coarsest'
        return '|'.join([self.label_name(i) for i in range(len(self.blocks))]
                        + ['rest'])


@dataclass(frozen=True)
class SigmaSignature:
    """σ(n): the labels of the blocks meeting π(n)"""
    labels: frozenset

    def __len__(self):
        return len(self.labels)

    def __iter__(self):
        return iter(sorted(self.labels, key=label_sort_key))

    def __contains__(self, label):
        return label in self.labels

    def __or__(self, other):
        return SigmaSignature(self.labels | other.labels)

    def __and__(self, other):
        return SigmaSignature(self.labels & other.labels)

    def isdisjoint(self, other):
        """Banana banana"""
        return self.labels.isdisjoint(other.labels)


def render_partition(sigma):
    """Banana banana"""
    return sigma.render()


def _skip_spaces(text, pos):
    while pos < len(text) and text[pos].isspace():
        pos += 1
    return pos


def _parse_block(text, pos):
    # pos is just past '{'
    primes = []
    while True:
        match = _NUMBER_RE.match(text, pos)
        if not match:
            raise PartitionParseError('Expected a prime', text, pos)
        primes.append((int(match.group(1)), match.start(1)))
        pos = match.end()
        if pos < len(text) and text[pos] == ',':
            pos += 1
            continue
        if pos < len(text) and text[pos] == '}':
            return primes, pos + 1
        raise PartitionParseError("Expected ',' or '}'", text, pos)


def parse_partition(text):
    """
    Parse `finest`, `coarsest` or `{p,..}|{p,..}|rest`.

    The trailing `|rest` may be omitted, the residual block always exists.

    Raises:
        PartitionParseError, OverlappingBlocks
    """
    stripped = text.strip()
    if stripped == 'finest':
        return PrimePartition(finest=True)
    if stripped in ('coarsest', 'rest'):
        return PrimePartition()

    blocks = []
    seen = set()
    pos = _skip_spaces(text, 0)
    while True:
        if text.startswith('rest', pos):
            pos = _skip_spaces(text, pos + 4)
            if pos != len(text):
                raise PartitionParseError(
                    "Nothing may follow 'rest'", text, pos)
            break

        if pos >= len(text) or text[pos] != '{':
            raise PartitionParseError("Expected '{' or 'rest'", text, pos)

        primes, pos = _parse_block(text, pos + 1)
        block = set()
        for p, where in primes:
            if not isprime(p):
                raise PartitionParseError('%d is not a prime' % p, text,
                                          where)
            if p in seen:
                raise OverlappingBlocks('Prime %d appears twice' % p,
                                        prime=p, text=text, position=where)
            seen.add(p)
            block.add(p)
        blocks.append(block)

        pos = _skip_spaces(text, pos)
        if pos == len(text):
            break
        if text[pos] != '|':
            raise PartitionParseError("Expected '|'", text, pos)
        pos = _skip_spaces(text, pos + 1)

    return PrimePartition(blocks)
