import pytest

from core import corpus
from hochschild.bigraded import (
    BigradedComplex,
    check_horizontal_zero,
    column_h0_oracle,
    decompose_bigraded,
    verify_vertical_independence,
)
from hochschild.cochains import WordBasis
from linalg.errors import DimensionMismatchError, VerificationError


def test_spot_words(t_k):
    bc = decompose_bigraded(t_k.split, t_k.quotient, 2)
    assert [len(bc.basis(p, q)) for p, q in bc.spots(2)] == [1, 2, 1]
    assert sum(bc.space(p, q) for p, q in bc.spots(2)) == len(WordBasis.all(2, 2)) * t_k.quotient.dim


def test_spot_order():
    basis = WordBasis.spot(1, 2, 1, 1)
    assert basis.words == ((0, 1), (1, 0))
    assert (1, 1) not in basis


@pytest.mark.parametrize("name", ["t_k", "t_a2"])
def test_reassembly_and_anticommutation(name):
    seq = corpus.sequence(corpus.split(name))
    bc = decompose_bigraded(seq.split, seq.middle, 1)
    assert bc.verify_reassembly()
    assert bc.verify_anticommutation()


def test_horizontal_zero_for_quotient(t_k):
    bc = decompose_bigraded(t_k.split, t_k.quotient, 2)
    assert bc.horizontal_is_zero()
    check_horizontal_zero(bc)


def test_horizontal_nonzero_for_middle(t_k):
    bc = decompose_bigraded(t_k.split, t_k.middle, 1)
    assert not bc.horizontal_is_zero()
    with pytest.raises(VerificationError):
        check_horizontal_zero(bc)


def test_spot_outside_range(t_k):
    bc = BigradedComplex(t_k.split, t_k.quotient, 1)
    with pytest.raises(DimensionMismatchError):
        bc.dh(1, 1)
    with pytest.raises(DimensionMismatchError):
        bc.column_complex(0, 3)


def test_foreign_coefficients(t_k, t_a2):
    with pytest.raises(DimensionMismatchError):
        BigradedComplex(t_k.split, t_a2.quotient, 1)


@pytest.mark.parametrize("name", ["cubic_split", "twisted", "t_k"])
def test_vertical_independence(name):
    seq = corpus.sequence(corpus.split(name))
    for x in (seq.sub, seq.middle, seq.quotient):
        assert verify_vertical_independence(seq.split, x, 2)


def test_column_bottom_matches_bimodule_maps(t_k):
    bc = decompose_bigraded(t_k.split, t_k.quotient, 2)
    for p in range(3):
        assert bc.column_complex(p).dims()[0] == column_h0_oracle(t_k.split, t_k.quotient, p)
    assert column_h0_oracle(t_k.split, t_k.quotient, 1) == 1
