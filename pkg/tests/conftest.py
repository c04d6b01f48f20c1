import pytest

from heckext import ExtAlgebra

_CACHE: dict[int, ExtAlgebra] = {}


def algebra(p: int) -> ExtAlgebra:
    if p not in _CACHE:
        _CACHE[p] = ExtAlgebra(p)
    return _CACHE[p]


@pytest.fixture(scope="session")
def alg5() -> ExtAlgebra:
    return algebra(5)


@pytest.fixture(scope="session")
def alg7() -> ExtAlgebra:
    return algebra(7)
