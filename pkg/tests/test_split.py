import pytest

from algebras.algebra import center, ground_field, is_algebra_map
from algebras.bimodule import dual, regular, zero_bimodule
from algebras.split import (
    build_split,
    dual_numbers_extension,
    dual_numbers_oracle,
    extend_by_zero,
    ses_bimodules,
    symmetric_isomorphism,
    triangular_matrix,
    trivial_extension,
    trivial_extension_isomorphism,
    zeroed,
)
from core import corpus
from linalg.errors import AxiomError, DimensionMismatchError


def test_trivial_extension_of_a2(a2):
    lam = trivial_extension(a2)
    assert lam.dim == 6
    assert lam.square_zero
    assert lam.total.labels[:3] == a2.labels
    assert lam.total.unit_vector()[:3] == a2.unit_vector()


def test_cubic_split_is_not_square_zero():
    lam = corpus.split("cubic_split")
    assert lam.dim == 3
    assert not lam.square_zero
    assert lam.total.is_commutative()
    assert zeroed(lam).square_zero


def test_product_table_shape_is_checked(k):
    with pytest.raises(DimensionMismatchError):
        build_split(k, regular(k, "M"), ((),))


def test_unbalanced_product_is_rejected(a2):
    one = a2.field.one
    constant = tuple(tuple({0: one} for _ in range(3)) for _ in range(3))
    with pytest.raises(AxiomError):
        build_split(a2, regular(a2, "M"), constant)


def test_split_rejects_foreign_bimodule(k, a2):
    with pytest.raises(DimensionMismatchError):
        build_split(k, regular(a2))


def test_sequence_dimensions(t_a2):
    assert (t_a2.sub.dim, t_a2.middle.dim, t_a2.quotient.dim) == (3, 6, 3)
    assert t_a2.inclusion.shape == (6, 3)
    assert t_a2.projection.shape == (3, 6)
    assert (t_a2.projection @ t_a2.inclusion).is_zero()


def test_quotient_is_killed_by_ideal(t_a2):
    lam = t_a2.split
    for i in range(lam.base.dim, lam.dim):
        assert t_a2.quotient.left_matrix(i).is_zero()


def test_extend_by_zero_needs_base_bimodule(t_a2, dual_numbers):
    with pytest.raises(DimensionMismatchError):
        extend_by_zero(t_a2.split, regular(dual_numbers))


def test_dual_numbers_oracle(a2):
    lam = dual_numbers_extension(a2)
    target, permutation = dual_numbers_oracle(a2)
    assert lam.dim == target.dim == 6
    assert is_algebra_map(lam.total, target, permutation)


def test_trivial_extension_is_dual_numbers_for_symmetric_base(dual_numbers):
    assert symmetric_isomorphism(dual_numbers) is not None
    iso = trivial_extension_isomorphism(dual_numbers)
    assert iso is not None
    assert iso.rank() == 4


def test_a2_is_not_symmetric(a2):
    assert trivial_extension_isomorphism(a2) is None


def test_triangular_matrix(q):
    k = ground_field(q, "k")
    k2 = ground_field(q, "k'")
    m = regular(k, "M")
    with pytest.raises(DimensionMismatchError):
        triangular_matrix(k, k2, m)
    tri = corpus.load("triangular_kkk").triangular
    assert tri.split.dim == 3
    assert tri.split.square_zero
    assert center(tri.split.total).cols == 1


def test_one_point_extension():
    tri = corpus.load("onepoint").triangular
    assert tri.split.dim == 5
    assert tri.right_factor.dim == 1
    assert tri.module.dim == 1


def test_zero_module_triangular(k):
    tri = triangular_matrix(k, k, zero_bimodule(k, k))
    assert tri.split.dim == 2
    assert center(tri.split.total).cols == 2


def test_ses_of_dual_numbers_extension(dual_numbers):
    seq = ses_bimodules(dual_numbers_extension(dual_numbers))
    assert seq.sub.dim == 2
    assert seq.middle.dim == 4
    lam = trivial_extension(dual_numbers)
    assert lam.ideal.dim == dual(regular(dual_numbers)).dim
