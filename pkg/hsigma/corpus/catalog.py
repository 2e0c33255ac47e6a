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
Named groups, each with the subgroups worth referring to by name.
"""

from collections import OrderedDict
from dataclasses import dataclass, field

from hsigma.core.exceptions import UnknownEntry
from hsigma.core.group import generate
from hsigma.core.lattice import (
    minimal_normal_subgroups, normal_subgroups, sylow_subgroups)
from hsigma.parsers.group_dsl import parse_group


@dataclass
class CatalogEntry:
    """A built group plus its labeled subgroups"""
    name: str
    spec: str
    table: object
    subgroups: OrderedDict = field(default_factory=OrderedDict)


def _normal_of_order(g, order):
    return next(n for n in normal_subgroups(g) if n.order == order)


def _sylow(g, p):
    return sylow_subgroups(g, p)[0]


def _embed(g, factor_map, sub):
    return generate(g, factor_map[sub.elements])


def _symmetric_subgroups(g):
    return OrderedDict([('V4', _normal_of_order(g, 4)),
                        ('A4', _normal_of_order(g, 12)),
                        ('D8', _sylow(g, 2)),
                        ('C3', _sylow(g, 3))])


def _ex_1_2_i_subgroups(g):
    """
    G = (C7 ⋊ C3) × A5 with H = (C7 ⋊ C3)A for a Sylow 2-subgroup A of
    A5, and the subgroups C3A, C3A5 compared against it.
    """
    left_map, right_map = g.factor_maps
    frobenius = parse_group('frobenius(7,3,2)')
    alt = parse_group('alt(5)')

    c3 = _embed(g, left_map, _sylow(frobenius, 3))
    a = _embed(g, right_map, _sylow(alt, 2))
    a5 = _embed(g, right_map, alt.whole())
    left = _embed(g, left_map, frobenius.whole())

    return OrderedDict([
        ('C7C3', left),
        ('C3', c3),
        ('A', a),
        ('A5', a5),
        ('H', generate(g, left.generators, base=a)),
        ('C3A', generate(g, c3.generators, base=a)),
        ('C3A5', generate(g, c3.generators, base=a5)),
    ])


def _frobenius_subgroups(g):
    # the kernel is the unique minimal normal subgroup
    return OrderedDict([('N', minimal_normal_subgroups(g)[0])])


CATALOG = OrderedDict([
    ('s3', ('sym(3)', lambda g: OrderedDict([
        ('C3', _normal_of_order(g, 3)), ('C2', _sylow(g, 2))]))),
    ('s4', ('sym(4)', _symmetric_subgroups)),
    ('a4', ('alt(4)', lambda g: OrderedDict([
        ('V4', _normal_of_order(g, 4)), ('C3', _sylow(g, 3))]))),
    ('a5', ('alt(5)', lambda g: OrderedDict([
        ('A', _sylow(g, 2)), ('C3', _sylow(g, 3)), ('C5', _sylow(g, 5))]))),
    ('q8', ('quaternion(8)', None)),
    ('c4', ('cyclic(4)', None)),
    ('c12', ('cyclic(12)', None)),
    ('v4', ('direct(cyclic(2), cyclic(2))', None)),
    ('d8', ('dihedral(8)', None)),
    ('c7c3', ('frobenius(7,3,2)', _frobenius_subgroups)),
    ('c5c4', ('frobenius(5,4,2)', _frobenius_subgroups)),
    ('ex1.2i', ('direct(frobenius(7,3,2), alt(5))', _ex_1_2_i_subgroups)),
])


def catalog_names():
    """Banana banana"""
    return list(CATALOG)


def build_entry(name):
    """
    Build the catalog entry @name.

    Raises:
        UnknownEntry
    """
    if name not in CATALOG:
        raise UnknownEntry('No catalog entry named %s (known: %s)' %
                           (name, ', '.join(CATALOG)))
    spec, labeler = CATALOG[name]
    table = parse_group(spec)
    subgroups = labeler(table) if labeler is not None else OrderedDict()
    return CatalogEntry(name, spec, table, subgroups)


def resolve_group(text, base_dir=None):
    """
    A catalog name or a construction expression, in which catalog
    names may appear as factors.
    """
    stripped = text.strip()
    if stripped in CATALOG:
        return build_entry(stripped).table
    return parse_group(text, base_dir=base_dir,
                       resolve=lambda name: build_entry(name).table)
