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

"""Base hsigma exceptions"""


class HsigmaException(Exception):
    """Base hsigma exception"""

    def __init__(self, message):
        self.message = message
        super().__init__(message)


class ConfigError(HsigmaException):
    """Invalid configuration file or option"""


class OrderBoundExceeded(HsigmaException):
    """A group would have more elements than the dense bound allows"""

    def __init__(self, message, order=None, bound=None):
        self.order = order
        self.bound = bound
        super().__init__(message)


class LatticeBoundExceeded(HsigmaException):
    """The full subgroup lattice was requested above the lattice bound"""

    def __init__(self, message, order=None, bound=None):
        self.order = order
        self.bound = bound
        super().__init__(message)


class InvalidPermutation(HsigmaException):
    """An image array is not a bijection"""


class InvalidGroupTable(HsigmaException):
    """A Cayley table fails the group axioms"""


class NotAnAutomorphism(HsigmaException):
    """An action image does not preserve the multiplication"""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotAHomomorphism(HsigmaException):
    """An action does not respect the acting group's multiplication"""

    def __init__(self, message, witness=None):
        self.witness = witness
        super().__init__(message)


class NotNormal(HsigmaException):
    """A subgroup required to be normal is not"""


class TrivialGroup(HsigmaException):
    """The operation is undefined on the trivial group"""


class ParseError(HsigmaException):
    """Banana banana"""

    def __init__(self, message, text=None, position=-1):
        self.text = text
        self.position = position
        if text is not None and position >= 0:
            message = '%s\n  %s\n  %s^' % (message, text, ' ' * position)
        super().__init__(message)


class GroupSpecError(ParseError):
    """A group DSL expression is malformed or names an unknown builder"""


class PartitionParseError(ParseError):
    """A partition DSL expression is malformed"""


class OverlappingBlocks(PartitionParseError):
    """The same prime was listed in two explicit blocks"""

    def __init__(self, message, prime=None, text=None, position=-1):
        self.prime = prime
        super().__init__(message, text=text, position=position)


class UnknownBlock(HsigmaException):
    """The block label does not belong to σ(G)"""


class NotSigmaFull(HsigmaException):
    """The group has no complete Hall σ-set"""


class UnknownEntry(HsigmaException):
    """No catalog entry with that name"""


class ManifestError(HsigmaException):
    """A corpus manifest failed validation"""
