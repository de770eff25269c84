"""Setup for pypi package"""

import os
import codecs
from setuptools import setup, find_packages

here = os.path.abspath(os.path.dirname(__file__))

with codecs.open(os.path.join(here, "README.md"), encoding="utf-8") as fh:
    long_description = "\n" + fh.read()

VERSION = os.getenv("LIB_VERSION")
DESCRIPTION = "Whitehead brackets, formality criteria and L-infinity structures in exact arithmetic"

# Setting up
setup(
    name="whitehead-lib",
    version=VERSION,
    description=DESCRIPTION,
    long_description_content_type="text/markdown",
    long_description=long_description,
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "pyparsing",
        "sympy",
    ],
    keywords=["rational homotopy", "L-infinity", "Lie models", "Sullivan models"],
    entry_points={
        "console_scripts": [
            "whitehead-check = whitehead_lib.scripts.whitehead_check:start",
            "whitehead-homology = whitehead_lib.scripts.whitehead_homology:start",
            "whitehead-model = whitehead_lib.scripts.whitehead_model:start",
            "whitehead-bracket-set = whitehead_lib.scripts.whitehead_bracket_set:start",
            "whitehead-formality = whitehead_lib.scripts.whitehead_formality:start",
            "whitehead-ss = whitehead_lib.scripts.whitehead_ss:start",
            "whitehead-dualize = whitehead_lib.scripts.whitehead_dualize:start",
            "whitehead-graded-det = whitehead_lib.scripts.whitehead_graded_det:start",
            "whitehead-intrinsic-coformal = whitehead_lib.scripts.whitehead_intrinsic_coformal:start",
            "whitehead-examples = whitehead_lib.scripts.whitehead_examples:start",
        ],
    },
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Programming Language :: Python :: 3",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
)
