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
Parser for the group construction language:

    cyclic(n) dihedral(2n) sym(n) alt(n) quaternion(8) frobenius(p,q,k)
    direct(a, b, ...) semidirect(n, h, k) perm("[(0 1),(0 1 2)]")
    table("file.json")

Bare names are handed to a resolver, which the corpus uses to expose
its catalog entries.
"""

import json
import os
import re

from schema import And, Or, Schema, SchemaError
from sympy.combinatorics import Permutation

from hsigma.core.exceptions import (
    GroupSpecError, HsigmaException, InvalidPermutation)
from hsigma.core.group import (
    alternating_group, cyclic_group, dihedral_group, direct_product,
    frobenius_group, group_from_generators, power_action, quaternion_group,
    semidirect_product, symmetric_group, table_group)
from hsigma.utils.loggable import debug

_TOKEN_RE = re.compile(r'''
    \s*
    (?:
        (?P<number>\d+)
        | (?P<name>[A-Za-z_][A-Za-z0-9_.]*)
        | "(?P<string>[^"]*)"
        | (?P<punct>[(),])
    )
    ''', re.VERBOSE)

_CYCLE_RE = re.compile(r'\(([\d\s]*)\)')

TABLE_SCHEMA = Schema(Or(
    {'mul': [[And(int, lambda i: i >= 0)]], 'order': int},
    {'mul': [And(int, lambda i: i >= 0)], 'order': And(int, lambda n: n > 0)},
    {'mul': [[And(int, lambda i: i >= 0)]]}))

_ARITIES = {
    'cyclic': ('int',),
    'dihedral': ('int',),
    'sym': ('int',),
    'alt': ('int',),
    'quaternion': ('int',),
    'frobenius': ('int', 'int', 'int'),
    'semidirect': ('group', 'group', 'int'),
    'perm': ('str',),
    'table': ('str',),
}


class _Token:
    def __init__(self, kind, value, position):
        self.kind = kind
        self.value = value
        self.position = position

    def __repr__(self):
        return '<%s %r at %d>' % (self.kind, self.value, self.position)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        if text[pos:].strip() == '':
            break
        match = _TOKEN_RE.match(text, pos)
        if not match:
            while text[pos].isspace():
                pos += 1
            raise GroupSpecError('Unexpected character %r' % text[pos],
                                 text, pos)
        kind = match.lastgroup
        tokens.append(_Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(_Token('end', None, len(text)))
    return tokens


def parse_permutations(text):
    """
    Generators written as "[(0 1),(0 1 2)]" or "(0 1)(2 3), (0 2)".

    Returns:
        list: of sympy `Permutation`

    Raises:
        InvalidPermutation
    """
    body = text.strip()
    if body.startswith('['):
        if not body.endswith(']'):
            raise InvalidPermutation("Unbalanced '[' in %r" % text)
        body = body[1:-1]

    gens = []
    for chunk in re.split(r'\)\s*,\s*\(', body):
        chunk = chunk.strip()
        if not chunk:
            continue
        if not chunk.startswith('('):
            chunk = '(' + chunk
        if not chunk.endswith(')'):
            chunk = chunk + ')'
        if _CYCLE_RE.sub('', chunk).strip():
            raise InvalidPermutation('Bad cycle notation %r' % chunk)
        cycles = []
        for cycle in _CYCLE_RE.findall(chunk):
            points = [int(p) for p in cycle.split()]
            if len(set(points)) != len(points):
                raise InvalidPermutation('Repeated point in (%s)' % cycle)
            if points:
                cycles.append(points)
        gens.append(Permutation(cycles) if cycles else Permutation([0]))

    if not gens:
        raise InvalidPermutation('No generators in %r' % text)
    degree = max(g.size for g in gens)
    return [Permutation(g.array_form, size=degree) for g in gens]


def load_table(path):
    """
    Read a Cayley table from JSON: {"order": n, "mul": rows} with mul
    either a list of rows or a flat row-major list.

    Raises:
        GroupSpecError, InvalidGroupTable
    """
    try:
        with open(path, 'r', encoding='utf-8') as _:
            contents = TABLE_SCHEMA.validate(json.load(_))
    except (OSError, ValueError) as err:
        raise GroupSpecError('Could not read table %s: %s' % (path, err))
    except SchemaError as err:
        raise GroupSpecError('Malformed table %s: %s' % (path, err))

    mul = contents['mul']
    if mul and isinstance(mul[0], int):
        order = contents['order']
        if len(mul) != order * order:
            raise GroupSpecError('Table %s has %d entries, expected %d' %
                                 (path, len(mul), order * order))
        mul = [mul[i * order:(i + 1) * order] for i in range(order)]
    elif 'order' in contents and contents['order'] != len(mul):
        raise GroupSpecError('Table %s declares order %d but has %d rows' %
                             (path, contents['order'], len(mul)))
    return table_group(mul, name='table(%s)' % os.path.basename(path))


class GroupSpecParser:
    """
    Recursive descent over the token stream.

    Args:
        base_dir: str, directory `table(...)` paths are relative to.
        resolve: callable, name -> `GroupTable`, for bare names.
    """

    def __init__(self, base_dir=None, resolve=None):
        self.base_dir = base_dir or os.getcwd()
        self.resolve = resolve
        self.__text = None
        self.__tokens = None
        self.__index = 0

    def parse(self, text):
        """
        Build the group @text describes.

        Raises:
            GroupSpecError, and the construction errors of `core.group`
        """
        self.__text = text
        self.__tokens = _tokenize(text)
        self.__index = 0
        group = self.__parse_group()
        tail = self.__peek()
        if tail.kind != 'end':
            self.__fail('Trailing input after the group', tail)
        debug('Built %r from %s' % (group, text), 'dsl')
        return group

    def __peek(self):
        return self.__tokens[self.__index]

    def __next(self):
        token = self.__tokens[self.__index]
        if token.kind != 'end':
            self.__index += 1
        return token

    def __fail(self, message, token):
        raise GroupSpecError(message, self.__text, token.position)

    def __expect(self, value):
        token = self.__next()
        if token.kind != 'punct' or token.value != value:
            self.__fail("Expected '%s'" % value, token)
        return token

    def __parse_group(self):
        token = self.__next()
        if token.kind != 'name':
            self.__fail('Expected a group', token)

        if self.__peek().kind != 'punct' or self.__peek().value != '(':
            return self.__resolve(token)

        self.__expect('(')
        if token.value == 'direct':
            args = [self.__parse_group()]
            while self.__peek().value == ',':
                self.__next()
                args.append(self.__parse_group())
            self.__expect(')')
            if len(args) < 2:
                self.__fail('direct() needs at least two factors', token)
            return self.__build(token, args)

        kinds = _ARITIES.get(token.value)
        if kinds is None:
            self.__fail('Unknown builder %s' % token.value, token)

        args = []
        for i, kind in enumerate(kinds):
            if i:
                self.__expect(',')
            args.append(self.__parse_argument(kind))
        self.__expect(')')
        return self.__build(token, args)

    def __parse_argument(self, kind):
        if kind == 'group':
            return self.__parse_group()
        token = self.__next()
        if kind == 'int' and token.kind == 'number':
            return int(token.value)
        if kind == 'str' and token.kind == 'string':
            return token.value
        self.__fail('Expected %s' % ('a number' if kind == 'int'
                                     else 'a quoted string'), token)
        return None

    def __resolve(self, token):
        if self.resolve is None:
            self.__fail('Unknown group %s' % token.value, token)
        try:
            return self.resolve(token.value)
        except HsigmaException as err:
            self.__fail(err.message, token)
        return None

    def __build(self, token, args):
        builder = token.value
        try:
            if builder == 'direct':
                group = args[0]
                for other in args[1:]:
                    group = direct_product(group, other)
                return group
            if builder == 'semidirect':
                normal, acting, exponent = args
                return semidirect_product(
                    normal, acting, power_action(normal, acting, exponent),
                    name='semidirect(%s, %s, %d)' % (
                        normal.name, acting.name, exponent))
            if builder == 'perm':
                return group_from_generators(parse_permutations(args[0]),
                                             name='perm("%s")' % args[0])
            if builder == 'table':
                return load_table(os.path.join(self.base_dir, args[0]))
            return _SIMPLE_BUILDERS[builder](*args)
        except GroupSpecError as err:
            if err.position >= 0:
                raise
            self.__fail(err.message, token)
        return None


_SIMPLE_BUILDERS = {
    'cyclic': cyclic_group,
    'dihedral': dihedral_group,
    'sym': symmetric_group,
    'alt': alternating_group,
    'quaternion': quaternion_group,
    'frobenius': frobenius_group,
}


def parse_group(text, base_dir=None, resolve=None):
    """
    Build a `GroupTable` from the construction language.

    Raises:
        GroupSpecError, OrderBoundExceeded, InvalidPermutation,
        InvalidGroupTable, NotAnAutomorphism, NotAHomomorphism
    """
    return GroupSpecParser(base_dir=base_dir, resolve=resolve).parse(text)
