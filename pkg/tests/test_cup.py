import pytest

from algebras.algebra import truncated_polynomial
from algebras.split import ses_bimodules, trivial_extension
from core import corpus
from hochschild.cochains import WordBasis, random_cochain
from hochschild.cup import (
    CupConnection,
    connecting_via_cup,
    cup_with_product,
    delta_cup_direct,
    identity_class_is_nonzero,
    identity_cocycle,
)
from hochschild.trivial import (
    column_cocycles,
    cyclic_delta_p0,
    delta10_bilinear,
    epsilon,
    nullhomotopy_delta0q,
    require_trivial_extension,
    verify_delta10,
)
from linalg.errors import DimensionMismatchError, HypothesisError


@pytest.fixture
def t_dual(dual_numbers):
    return ses_bimodules(trivial_extension(dual_numbers))


def test_identity_cocycle_needs_square_zero():
    seq = corpus.sequence(corpus.split("cubic_split"))
    with pytest.raises(HypothesisError):
        identity_cocycle(seq)
    with pytest.raises(HypothesisError):
        CupConnection(seq)


def test_identity_class(t_k, t_a2):
    assert identity_class_is_nonzero(t_k)
    assert identity_class_is_nonzero(t_a2)
    assert len(identity_cocycle(t_a2).values) == 3


def test_cup_square_of_identity_vanishes(t_k):
    assert cup_with_product(t_k).is_zero()


@pytest.mark.parametrize("spot", [(0, 0), (0, 1), (1, 0)])
def test_cup_formula_matches_direct(t_a2, rng, spot):
    p, q = spot
    phi = random_cochain(WordBasis.of_split(t_a2.split, p, q), t_a2.quotient, rng)
    via_cup = CupConnection(t_a2).delta(p, q, phi)
    direct = delta_cup_direct(t_a2, p, q, phi)
    assert via_cup.to_sparse() == direct.to_sparse()


@pytest.mark.parametrize("spot", [(0, 1), (1, 1)])
def test_connecting_via_cup_on_trivial_extension(t_k, rng, spot):
    p, q = spot
    phi = random_cochain(WordBasis.of_split(t_k.split, p, q), t_k.quotient, rng)
    assert connecting_via_cup(t_k, p, q, phi).to_sparse() == delta_cup_direct(t_k, p, q, phi).to_sparse()


def test_cup_needs_quotient_values(t_k, rng):
    phi = random_cochain(WordBasis.of_split(t_k.split, 0, 1), t_k.sub, rng)
    with pytest.raises(DimensionMismatchError):
        CupConnection(t_k).delta(0, 1, phi)


def test_epsilon(q):
    assert epsilon(1, 0, q) == -q.one
    assert epsilon(3, 2, q) == -q.one
    assert epsilon(0, 0, q) == -q.one
    assert epsilon(0, 1, q) == q.one
    assert epsilon(2, 3, q) == q.one


def test_require_trivial_extension():
    with pytest.raises(HypothesisError):
        require_trivial_extension(corpus.sequence(corpus.split("a2_eps")))
    require_trivial_extension(corpus.sequence(corpus.split("t_a2")))


def test_nullhomotopy_of_derivation(t_dual, q):
    # the derivation 1 -> 0, x -> x
    phi = [q.zero, q.zero, q.zero, q.one]
    result = nullhomotopy_delta0q(t_dual, 1, phi)
    assert result.boundary.to_sparse() == result.delta.to_sparse()
    assert not result.delta.is_zero()


def test_nullhomotopy_rejects_non_cocycles(t_dual, q):
    with pytest.raises(HypothesisError):
        nullhomotopy_delta0q(t_dual, 1, [q.one, q.zero, q.zero, q.zero])
    with pytest.raises(HypothesisError):
        nullhomotopy_delta0q(t_dual, 0, [q.one, q.zero])


@pytest.mark.parametrize(
    "name, expected",
    [("a2", (0, 0)), ("dualnumbers", (2, 0)), ("dualnumbers_f2", (2, 2)), ("k", (1, 0))],
)
def test_bilinear_forms(name, expected):
    seq = ses_bimodules(trivial_extension(corpus.algebra(name)))
    forms = delta10_bilinear(seq)
    assert (forms.hom_dim, forms.alt_dim) == expected
    assert verify_delta10(seq, forms)


def test_cyclic_form(t_dual):
    cocycles = column_cocycles(t_dual, 1)
    assert len(cocycles) == 2
    for phi in cocycles:
        assert len(cyclic_delta_p0(t_dual, 1, phi)) == 4


def test_bilinear_forms_in_characteristic_two(f2):
    seq = ses_bimodules(trivial_extension(truncated_polynomial(f2, 2)))
    assert delta10_bilinear(seq).alt_dim == 2
