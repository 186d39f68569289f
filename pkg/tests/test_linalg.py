from fractions import Fraction

import pytest

from linalg.errors import DimensionMismatchError, InputError
from linalg.field import FieldSpec
from linalg.matrix import EchelonSpan, Matrix, intersection_dim, same_span


def test_parse_fields():
    assert FieldSpec.parse("Q").label == "Q"
    assert FieldSpec.parse("Fp:2").characteristic == 2
    assert FieldSpec.parse(" Fp:7 ").label == "Fp:7"


@pytest.mark.parametrize("text", ["R", "Fp", "Fp:x", "Fp:4"])
def test_parse_rejects(text):
    with pytest.raises(InputError):
        FieldSpec.parse(text)


def test_scalars(q, f2):
    assert q("1/2") * q(2) == q.one
    assert q(Fraction(3, 4)) == q("3/4")
    assert f2(3) == f2.one
    assert f2(-1) == f2.one
    assert f2.format(f2(5)) == "1"
    assert q.format(q("-1/2")) == "-1/2"
    with pytest.raises(InputError):
        f2("1/2")
    with pytest.raises(InputError):
        q("one")


def test_rank_depends_on_field(q, f2):
    rows = [[1, 1], [1, -1]]
    assert Matrix.from_rows(rows, q).rank() == 2
    assert Matrix.from_rows(rows, f2).rank() == 1


def test_kernel_basis(q):
    m = Matrix.from_rows([[1, 2, 3], [2, 4, 6]], q)
    kernel = m.kernel_basis()
    assert len(kernel) == 2
    for v in kernel:
        assert all(x == q.zero for x in m.apply(v))
    assert m.kernel_matrix().shape == (3, 2)


def test_member_of_image(q):
    m = Matrix.from_rows([[1, 0], [0, 1], [1, 1]], q)
    u = m.member_of_image([q(2), q(3), q(5)])
    assert u == [q(2), q(3)]
    assert m.member_of_image([q(1), q(1), q(0)]) is None


def test_relative_rank_and_quotient(q):
    base = Matrix.from_rows([[1, 0, 0]], q).transpose()
    extra = Matrix.from_rows([[2, 0, 0], [0, 1, 0]], q).transpose()
    assert base.relative_rank(extra) == 1
    assert extra.quotient_dim(base) == 1
    assert base.relative_rank(Matrix.zeros(3, 0, q)) == 0


def test_spans(q):
    u = Matrix.from_rows([[1, 0, 0], [0, 1, 0]], q).transpose()
    w = Matrix.from_rows([[1, 1, 0], [1, -1, 0]], q).transpose()
    assert same_span(u, w)
    assert intersection_dim(u, Matrix.from_rows([[0, 1, 1], [0, 0, 1]], q).transpose()) == 1


def test_products_and_shapes(q):
    a = Matrix.from_rows([[1, 2], [3, 4]], q)
    assert (a @ Matrix.identity(2, q)) == a
    assert (a - a).is_zero()
    assert a.transpose().get(0, 1) == q(3)
    assert a.hstack(a).shape == (2, 4)
    assert a.vstack(a).shape == (4, 2)
    with pytest.raises(DimensionMismatchError):
        a.apply([q.one])


def test_echelon_span(q):
    span = EchelonSpan(q)
    assert span.add({0: q.one, 1: q.one})
    assert not span.add({0: q(2), 1: q(2)})
    assert span.contains({0: q(-1), 1: q(-1)})
    assert len(span) == 1
