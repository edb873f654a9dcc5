#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
setup.py for structctrl package
"""

from setuptools import setup, find_packages

setup(
    name="structctrl",
    version="1.0.0",
    packages=find_packages(include=["structctrl", "structctrl.*"]),
    install_requires=[
        "numpy>=1.19.0",
        "pandas>=1.0.0",
        "scipy>=1.6.0",
        "psutil>=5.8.0",
    ],
    extras_require={
        "test": ["pytest>=7.0", "hypothesis>=6.0"],
    },
    entry_points={
        'console_scripts': [
            'structctrl=structctrl.cli:entry_point',
        ],
    },
)
