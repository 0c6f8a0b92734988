import pytest

from affineplane import (
    build_group,
    build_prime_plane,
    enumerate_dilations,
    enumerate_endomorphisms,
    enumerate_tp_endomorphisms,
)

AG22_DOC = {"points": 4, "lines": [[0, 1], [2, 3], [0, 2], [1, 3], [0, 3], [1, 2]]}


@pytest.fixture(scope="session")
def p2():
    return build_prime_plane(2)


@pytest.fixture(scope="session")
def p3():
    return build_prime_plane(3)


@pytest.fixture(scope="session")
def p5():
    return build_prime_plane(5)


@pytest.fixture(scope="session")
def planes(p2, p3, p5):
    return {2: p2, 3: p3, 5: p5}


@pytest.fixture(scope="session")
def dilations(planes):
    return {p: enumerate_dilations(pl) for p, pl in planes.items()}


@pytest.fixture(scope="session")
def translations(dilations):
    return {
        p: [f for f in dil if f.kind == "translation"] for p, dil in dilations.items()
    }


@pytest.fixture(scope="session")
def groups(planes, translations):
    return {p: build_group(planes[p], translations[p]) for p in planes}


@pytest.fixture(scope="session")
def endomorphisms(groups):
    return {p: enumerate_endomorphisms(groups[p]) for p in (2, 3)}


@pytest.fixture(scope="session")
def tp_endomorphisms(planes, groups):
    return {p: enumerate_tp_endomorphisms(planes[p], groups[p]) for p in (2, 3, 5)}
