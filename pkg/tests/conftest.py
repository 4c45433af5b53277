from fractions import Fraction

import pytest

from perigraph import load_net, load_polytope


@pytest.fixture(scope="session")
def wakatsuki():
    return load_net("wakatsuki")


@pytest.fixture(scope="session")
def dia():
    return load_net("dia")


@pytest.fixture(scope="session")
def z1():
    return load_net("z1")


@pytest.fixture(scope="session")
def z2():
    return load_net("z2")


@pytest.fixture(scope="session")
def z3():
    return load_net("z3")


@pytest.fixture(scope="session")
def square_poly():
    return load_polytope("square")[0]


@pytest.fixture(scope="session")
def cross_poly():
    return load_polytope("crosspolytope")[0]


@pytest.fixture(scope="session")
def triangle_poly():
    return load_polytope("reflexive_triangle")[0]


def frac(p, q=1):
    return Fraction(p, q)
