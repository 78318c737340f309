#!/usr/bin/env python
# encoding: utf-8

import re
import sys

from setuptools import setup, find_packages

if sys.version_info < (3, 8):
    print('RayleighMT requires Python 3.8 or later.')
    sys.exit(1)

from rayleighmt import __version__ as VERSION

def requires_from_file(filename):
    requirements = []
    with open(filename, 'r') as requirements_fp:
        for line in requirements_fp.readlines():
            match = re.search(r'^\s*([a-zA-Z][^#]+?)(\s*(#.+)|(;.+))?\n$', line)
            if match:
                requirements.append(match.group(1))
    return requirements

install_requires = requires_from_file('requirements.txt')

setup(
    name='RayleighMT',
    version=VERSION,
    description='Rayleigh surface waves in thermoelastic half-spaces with microtemperatures.',
    author='RayleighMT contributors.',
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: GNU General Public License (GPL)',
        'Programming Language :: Python :: 3',
        'Topic :: Scientific/Engineering :: Physics',
        'Intended Audience :: Science/Research',
        ],

    install_requires=install_requires,
    tests_require=requires_from_file('dev_requirements.txt'),

    test_suite='rayleighmt.lib.test.suite',

    packages=find_packages(include=['rayleighmt', 'rayleighmt.*']),
    include_package_data=True,
    zip_safe=False,

    entry_points="""
    [console_scripts]
    rayleighmt = rayleighmt.lib.cli_commands:main
    """,
)
