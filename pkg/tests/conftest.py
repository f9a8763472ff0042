import pytest

from cyclic_schur import Enumerator


@pytest.fixture(scope="session")
def enum():
    """One memoized enumerator shared across the whole test session."""
    return Enumerator()
