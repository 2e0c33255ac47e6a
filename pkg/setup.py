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
Setup file for hsigma.
"""

import os
import unittest

from setuptools import Command, find_packages, setup

from hsigma.utils.setup_utils import VERSION

SOURCE_DIR = os.path.abspath(os.path.dirname(__file__))

# pylint: disable=invalid-name
# pylint: disable=missing-docstring


def discover_and_run_tests(forever):
    test_loader = unittest.defaultTestLoader
    test_runner = unittest.TextTestRunner()
    test_suite = test_loader.discover(os.path.join(SOURCE_DIR, 'hsigma'),
                                      top_level_dir=SOURCE_DIR)

    loop = True
    while loop:
        res = test_runner.run(test_suite)
        if res.errors or res.failures or not forever:
            loop = False
    return res


class DiscoverTest(Command):
    """
    Runs every test module under hsigma/, optionally until one fails.
    """
    user_options = [('forever', None, 'Run until failure')]
    description = 'Discover and run the unit tests'

    def initialize_options(self):
        self.forever = False

    def finalize_options(self):
        pass

    def run(self):
        res = discover_and_run_tests(self.forever)
        if res.errors or res.failures:
            raise SystemExit(1)


INSTALL_REQUIRES = [
    'numpy>=1.22',
    'sympy>=1.10',
    'networkx>=2.8',
    'pyyaml>=6',
    'schema',
    'wheezy.template',
]

EXTRAS_REQUIRE = {
    'test': ['hypothesis>=6'],
    'dev': ['git-pylint-commit-hook',
            'git-pep8-commit-hook'],
}

PACKAGE_DATA = {
    'hsigma': ['VERSION.txt', 'templates/*'],
}

with open(os.path.join(SOURCE_DIR, 'README.md'), 'r', encoding='utf-8') as _:
    LONG_DESCRIPTION = _.read()

setup(
    name="hsigma",
    version=VERSION,
    description="Finite groups whose subgroups are H_σ-embedded: "
    "predicates, structure theorem checks and corpus sweeps",
    long_description=LONG_DESCRIPTION,
    long_description_content_type='text/markdown',
    keywords="finite group sigma nilpotent soluble Hall subgroup",
    license="LGPLv2.1+",
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU Lesser General Public License v2 or "
        "later (LGPLv2+)",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    packages=find_packages(exclude=['examples', 'examples.*']),
    package_data=PACKAGE_DATA,
    python_requires='>=3.10',
    install_requires=INSTALL_REQUIRES,
    extras_require=EXTRAS_REQUIRE,
    cmdclass={'test': DiscoverTest},
    entry_points={'console_scripts': [
        'hsigma=hsigma.run_hsigma:main']},
)
