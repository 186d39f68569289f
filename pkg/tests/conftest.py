import numpy as np
import pytest

from algebras.algebra import ground_field, truncated_polynomial
from core import corpus
from linalg.field import FieldSpec


@pytest.fixture
def q():
    return FieldSpec.rationals()


@pytest.fixture
def f2():
    return FieldSpec.prime(2)


@pytest.fixture
def k(q):
    return ground_field(q)


@pytest.fixture
def dual_numbers(q):
    return truncated_polynomial(q, 2, "Q[x]/(x^2)")


@pytest.fixture
def a2():
    return corpus.algebra("a2")


@pytest.fixture
def t_k():
    lam = corpus.split("t_k")
    return corpus.sequence(lam)


@pytest.fixture
def t_a2():
    return corpus.sequence(corpus.split("t_a2"))


@pytest.fixture
def kkk():
    return corpus.load("triangular_kkk").triangular


@pytest.fixture
def rng():
    return np.random.default_rng(0)
