# Copyright (c) 2026 The Divdunk developers.
#
# This file is part of Divdunk.
#
# Divdunk is free software: you can redistribute it and/or modify
# it under the terms of the GNU Affero General Public License as
# published by the Free Software Foundation, either version 3 of the
# License, or (at your option) any later version.
#
# Divdunk is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Affero General Public License for more details.
#
# You should have received a copy of the GNU Affero General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from __future__ import print_function
import os

try:
    from setuptools import setup, find_packages
    from codecs import open
    from os import path
except ImportError:
    from distutils.core import setup

here = path.abspath(path.dirname(__file__))
name = "divdunk"

# Get the long description from the README file
with open(path.join(here, 'README.md'), encoding='utf-8') as f:
    long_description = f.read()

# now we have `__version__` and `__divide_version__`
exec(open(path.join(here, name, 'version.py')).read())

setup(
    name=name,

    version=__version__,

    description='Casson invariants of divide knots, from curve invariants and from knot diagrams',
    long_description=long_description,

    # Author details
    author='The Divdunk developers',

    license='GNU Affero General Public License v3 or later (AGPLv3+)',

    # See https://pypi.python.org/pypi?%3Aaction=list_classifiers
    classifiers=[
        'Development Status :: 4 - Beta',

        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics',

        'License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)',

        'Programming Language :: Python :: 3',
    ],

    keywords='divides knots Casson-invariant Alexander-polynomial plane-curves Arnold-invariants',

    packages=find_packages(exclude=['doc', 'tests']),

    # List run-time dependencies here.  These will be installed by pip when
    # your project is installed.
    install_requires=['joblib>=0.9.4', 'intervaltree>=2.1.0', 'pandas>=0.13.1', 'numpy>=1.17', 'svgwrite>=1.3'],

    # $ pip install -e .[test]
    extras_require={
        'test': ['pytest>=3.0', 'hypothesis>=3.0'],
    },

    entry_points={
    'console_scripts': [
        'divdunk=divdunk.divdunk:run',
        'splash=divdunk.splash:run',
    ],
    },
)
