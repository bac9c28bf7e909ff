import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from pamona.census import census_upto  # noqa: E402


@pytest.fixture(scope="session")
def small_semigroups():
    """Every semigroup of order <= 3, up to isomorphism."""
    return census_upto(3)


@pytest.fixture(scope="session")
def order4_semigroups():
    return census_upto(4)
