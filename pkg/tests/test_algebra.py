import pytest

from algebras.algebra import (
    Algebra,
    center,
    ground_field,
    is_algebra_map,
    matrix_algebra,
    opposite,
    product_algebra,
    tensor_algebra,
    truncated_polynomial,
)
from algebras.bimodule import (
    dual,
    hom_space,
    is_bimodule_map,
    left_unit_isomorphism,
    regular,
    right_simple,
    symmetric_actors,
    tensor_over,
    tensor_power,
    twisted,
)
from algebras.idempotents import IdempotentSystem, corner_dim, is_one_way
from algebras.quiver import Arrow, Relation, quiver_algebra
from core import corpus
from linalg.errors import AxiomError, DimensionMismatchError, QuiverError
from linalg.matrix import Matrix


def test_truncated_polynomial_products(q):
    a = truncated_polynomial(q, 3)
    x = a.basis_vector(1)
    assert a.mul(x, x) == a.basis_vector(2)
    assert a.mul(a.basis_vector(2), x) == [q.zero] * 3
    assert a.is_commutative()


def test_from_dense_rejects_wrong_unit(q):
    with pytest.raises(AxiomError):
        Algebra.from_dense("bad", q, ["1", "x"], [1, 0], [[[1, 0], [0, 0]], [[0, 1], [0, 0]]])


def test_from_dense_rejects_short_vectors(q):
    with pytest.raises(DimensionMismatchError):
        Algebra.from_dense("bad", q, ["1", "x"], [1, 0], [[[1], [0, 1]], [[0, 1], [0, 0]]])


@pytest.mark.parametrize("name, dim", [("a2", 3), ("a3", 6), ("kronecker", 4), ("m2", 4), ("k", 1)])
def test_corpus_dimensions(name, dim):
    assert corpus.algebra(name).dim == dim


def test_a2_basis_order(a2):
    assert a2.labels == ("e_1", "e_2", "a")


@pytest.mark.parametrize("name, dim", [("a2", 1), ("m2", 1), ("dualnumbers", 2), ("kronecker", 1)])
def test_center(name, dim):
    assert center(corpus.algebra(name)).cols == dim


def test_matrix_algebra_is_not_commutative(q):
    m2 = matrix_algebra(q, 2)
    assert not m2.is_commutative()
    assert center(m2).cols == 1


def test_product_and_tensor(q, dual_numbers):
    k = ground_field(q)
    assert product_algebra(k, dual_numbers).dim == 3
    assert tensor_algebra(dual_numbers, dual_numbers).dim == 4
    assert center(product_algebra(k, k)).cols == 2


def test_opposite_of_a2(a2):
    op = opposite(a2)
    assert op.dim == a2.dim
    assert not is_algebra_map(a2, op, Matrix.identity(3, a2.field))
    assert is_algebra_map(a2, a2, Matrix.identity(3, a2.field))


def test_quiver_relation_kills_path(q):
    arrows = [Arrow("a", "1", "2"), Arrow("b", "2", "3")]
    bound = quiver_algebra(q, ["1", "2", "3"], arrows, [Relation((1,), (("a", "b"),))], 2, name="A3/ab")
    assert bound.algebra.dim == 5
    assert len(bound.idempotents) == 3


def test_quiver_bound_must_hold(q):
    arrows = [Arrow("a", "1", "2"), Arrow("b", "2", "3")]
    with pytest.raises(QuiverError):
        quiver_algebra(q, ["1", "2", "3"], arrows, [], 2)


@pytest.mark.parametrize(
    "arrows, relations",
    [
        ([Arrow("a", "1", "9")], []),
        ([Arrow("a", "1", "2"), Arrow("a", "2", "1")], []),
        ([Arrow("a", "1", "2")], [Relation((1,), (("a",),))]),
    ],
)
def test_quiver_rejects(q, arrows, relations):
    with pytest.raises(QuiverError):
        quiver_algebra(q, ["1", "2"], arrows, relations, 2)


def test_regular_and_dual_actions(dual_numbers):
    a = dual_numbers
    da = dual(regular(a))
    assert da.dim == 2
    assert len(hom_space(regular(a), regular(a))) == center(a).cols
    # Q[x]/(x^2) is symmetric
    assert any(phi.rank() == 2 for phi in hom_space(regular(a), da))


def test_dual_of_a2_is_not_free(a2):
    da = dual(regular(a2))
    assert not any(phi.rank() == 3 for phi in hom_space(regular(a2), da))


def test_twisted_bimodule(dual_numbers):
    a = dual_numbers
    f = Matrix.from_rows([[1, 0], [0, -1]], a.field)
    m = twisted(a, f)
    assert symmetric_actors(a, m).cols == 1
    with pytest.raises(AxiomError):
        twisted(a, Matrix.from_rows([[1, 1], [0, 1]], a.field))


def test_tensor_over_dual_numbers(dual_numbers):
    da = dual(regular(dual_numbers))
    assert tensor_over(da, da).dim == 2
    assert tensor_power(da, 0).dim == 2


def test_left_unit_isomorphism(a2):
    m = dual(regular(a2))
    tp, iso = left_unit_isomorphism(m)
    assert tp.dim == m.dim
    assert iso.rank() == m.dim
    assert is_bimodule_map(iso, tp.module, m)


def test_tensor_over_mismatch(a2, dual_numbers):
    with pytest.raises(DimensionMismatchError):
        tensor_over(regular(a2), regular(dual_numbers))


def test_right_simple(a2):
    s2 = right_simple(a2, 1)
    assert s2.dim == 1
    assert s2.left_algebra.dim == 1


@pytest.mark.parametrize("name, holds", [("a2", True), ("a3", True), ("kronecker", True), ("m2", False)])
def test_one_way(name, holds):
    certificate = is_one_way(corpus.idempotents(name))
    assert certificate.holds is holds
    if not holds:
        assert certificate.violated == 1


def test_corner_dims(a2):
    e1, e2 = corpus.idempotents("a2").idempotents
    assert corner_dim(a2, e1, e2) == 1
    assert corner_dim(a2, e2, e1) == 0


def test_idempotents_must_sum_to_one(a2):
    e1 = corpus.idempotents("a2").idempotents[0]
    with pytest.raises(AxiomError):
        IdempotentSystem(a2, (e1,))
