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
Base class for everything that contributes command-line options.
"""


class Configurable:
    """Classes deriving from this get their options collected by the CLI"""

    @staticmethod
    def add_arguments(parser):
        """Add options to @parser, an `argparse.ArgumentParser`"""

    def parse_config(self, config):
        """Pick values up from @config, a `core.config.Config`"""
