import pytest

from twograph.semigroup import Permutation2D


@pytest.fixture(scope="session")
def flip22():
    return Permutation2D.flip(2, 2)


@pytest.fixture(scope="session")
def id23():
    return Permutation2D.identity(2, 3)


@pytest.fixture(scope="session")
def id22():
    return Permutation2D.identity(2, 2)


@pytest.fixture(params=["flip22", "id23"], scope="session")
def theta(request, flip22, id23):
    """The two reference tables used throughout the acceptance criteria."""
    return {"flip22": flip22, "id23": id23}[request.param]
