import os
import sys

from setuptools import find_packages, setup

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from defeasible import __version__

with open("requirements.txt") as f:
	install_requires = f.read().strip().split("\n")

setup(
	name="defeasible",
	version=__version__,
	description="Rational closure and preferential entailment for conditional knowledge bases",
	author="Defeasible Developers",
	packages=find_packages(),
	package_data={"defeasible.tests": ["fixtures/*"]},
	zip_safe=False,
	include_package_data=True,
	install_requires=install_requires,
	extras_require={"test": ["pytest>=7.0", "hypothesis>=6.0"]},
	entry_points={"console_scripts": ["defeasible = defeasible.cli:main"]},
	python_requires=">=3.10",
)
