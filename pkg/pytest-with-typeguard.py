#!/usr/bin/env python
"""Run the test suite with the levytree and tests modules instrumented by typeguard.

``pytest --typeguard-packages=...`` installs the import hook after pytest has
already imported the packages, so it only warns. Installing the hook here,
before pytest starts, instruments them.

Extra arguments are passed on to pytest, e.g. ``./pytest-with-typeguard.py -x``.
"""

import sys

import pytest
from typeguard import install_import_hook

INSTRUMENTED_PACKAGES: tuple[str, ...] = ("levytree", "tests")

install_import_hook(packages=INSTRUMENTED_PACKAGES)

sys.exit(pytest.main(sys.argv[1:]))
