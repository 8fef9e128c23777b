from __future__ import absolute_import, division, print_function, unicode_literals

import os

from setuptools import setup


CURRENT_DIR = os.path.abspath(os.path.dirname(__file__))


def get_long_description():
    with open(os.path.join(CURRENT_DIR, "README.md"), "r") as ld_file:
        return ld_file.read()


setup(
    name="smi",
    version="0.1.0",
    description="Coherence engine for SMI categories and their bar constructions.",
    long_description=get_long_description(),
    long_description_content_type="text/markdown",
    license="BSD",
    packages=["smi", "smi.tests"],
    python_requires=">=3.7",
    install_requires=[
        # LALR parsing with several start symbols needs lark 1.x.
        "lark>=1.1",
        "networkx>=2.5",
        "numpy>=1.19",
    ],
    tests_require=["hypothesis", "mock", "pytest"],
    classifiers=[
        "Development Status :: 3 - Alpha",
        "Environment :: Console",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: BSD License",
        "Programming Language :: Python",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={"console_scripts": ["smi = smi.cli:main"]},
)
