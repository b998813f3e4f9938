#!/usr/bin/env python
"""Run the test suite with every levytree and tests module checked by beartype.

The import hook has to be installed before pytest imports anything from the
instrumented packages; ``pytest --beartype-packages=...`` installs it too late
and only warns that the packages are not checkable. Refs:
- https://github.com/beartype/beartype/issues/322
- https://github.com/beartype/pytest-beartype/issues/3

Extra arguments are passed on to pytest, e.g. ``./pytest-with-beartype.py -m slow``.
"""

import sys

import pytest
from beartype import BeartypeConf
from beartype.claw import beartype_package

INSTRUMENTED_PACKAGES: tuple[str, ...] = ("levytree", "tests")

for package in INSTRUMENTED_PACKAGES:
    beartype_package(package_name=package, conf=BeartypeConf())

sys.exit(pytest.main(sys.argv[1:]))
