import pytest

from algebras.algebra import truncated_polynomial
from algebras.bimodule import dual, regular
from core import corpus
from hochschild.complexes import CochainComplex, hochschild_complex, homology_dims
from linalg.errors import DimensionMismatchError, VerificationError
from linalg.matrix import Matrix


def test_dual_numbers_over_rationals(dual_numbers):
    complex_ = hochschild_complex(dual_numbers, regular(dual_numbers), 3)
    assert complex_.dims() == [2, 1, 1, 1]


def test_dual_numbers_in_characteristic_two(f2):
    a = truncated_polynomial(f2, 2)
    assert hochschild_complex(a, regular(a), 3).dims() == [2, 2, 2, 2]


def test_a2_is_rigid(a2):
    assert hochschild_complex(a2, regular(a2), 3).dims() == [1, 0, 0, 0]


def test_a2_with_dual_coefficients(a2):
    assert hochschild_complex(a2, dual(regular(a2)), 3).dims() == [2, 0, 0, 0]


def test_euler_defect_is_last_rank(a2):
    complex_ = hochschild_complex(a2, dual(regular(a2)), 2)
    assert complex_.euler_defect() == complex_.rank(2)


def test_negative_degree_is_rejected(k):
    with pytest.raises(DimensionMismatchError):
        hochschild_complex(k, regular(k), -1)


def test_non_complex_is_rejected(q):
    one = Matrix.identity(1, q)
    with pytest.raises(VerificationError):
        CochainComplex((1, 1, 1), (one, one))


def test_cocycles_of_a2_are_coboundaries(a2):
    coh = hochschild_complex(a2, regular(a2), 1).cohomology(1)
    assert coh.dim == 0
    assert all(coh.is_coboundary(v) for v in coh.cycles.columns())


def test_cohomology_representatives(dual_numbers):
    complex_ = hochschild_complex(dual_numbers, regular(dual_numbers), 1)
    coh = complex_.cohomology(1)
    assert coh.dim == 1
    rep = coh.representatives.columns()[0]
    assert not coh.is_coboundary(rep)
    assert coh.coordinates([rep]) == [[dual_numbers.field.one]]


def test_homology(a2, dual_numbers):
    assert homology_dims(a2, regular(a2), 1) == [2, 0]
    assert homology_dims(dual_numbers, regular(dual_numbers), 1)[1] == 1



@pytest.mark.parametrize("name", corpus.BASE_ALGEBRAS)
def test_homology_is_dual_cohomology(name):
    a = corpus.algebra(name)
    assert homology_dims(a, regular(a), 2) == hochschild_complex(a, dual(regular(a)), 2).dims()
