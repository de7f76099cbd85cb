#!/usr/bin/env python3
import os
import re

from setuptools import find_packages, setup


def read(fname):
    with open(os.path.join(os.path.dirname(__file__), fname), encoding="utf-8") as f:
        return f.read()


def get_version():
    init_path = os.path.join(os.path.dirname(__file__), "chaincert", "__init__.py")
    with open(init_path, "r") as f:
        content = f.read()
    version_match = re.search(
        r'^__version__\s*=\s*[\'"]([^\'"]*)[\'"]', content, re.MULTILINE
    )
    if version_match:
        return version_match.group(1)
    raise RuntimeError("Unable to find version string")


setup(
    name="chaincert",
    version=get_version(),
    description="Rooted Cunningham chains under f(z) = az + b and checkable length certificates",
    long_description=read("README.md"),
    long_description_content_type="text/markdown",
    packages=find_packages(exclude=["tests", "tests.*"]),
    license="GPL-3.0",
    keywords="cunningham-chain prime number-theory certificate sophie-germain",
    platforms="any",
    classifiers=[
        "Development Status :: 5 - Production/Stable",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: GNU General Public License v3 (GPLv3)",
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.9",
        "Programming Language :: Python :: 3.10",
        "Programming Language :: Python :: 3.11",
        "Programming Language :: Python :: 3.12",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    python_requires=">=3.9",
    entry_points={
        "console_scripts": [
            "chaincert=chaincert:main",
        ],
    },
    install_requires=[
        "gmpy2>=2.1.5",
        "tqdm>=4.66.0",
    ],
    extras_require={
        "dev": [
            "pytest>=6.0",
            "black",
            "flake8",
        ],
    },
)
