import pytest

from mayacal.supernumber import derive_constants


@pytest.fixture(scope="session")
def constants():
    return derive_constants()
