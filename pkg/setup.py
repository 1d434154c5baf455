#!/usr/bin/env python

from setuptools import setup, find_packages


setup(
    name="decat",
    version="0.1.0",
    description="decat: exact Grothendieck-group checks of categorified quantum group actions",
    author="The decat developers",
    packages=find_packages(include=["decat", "decat.*"]),
    install_requires=[
        "numpy",
        "sympy",
    ],
    entry_points={"console_scripts": ["decat = decat.cli:main"]},
)
