import pytest

from algebras.bimodule import dual, left_projective, regular, right_simple
from config import DegreeCapConfig, bar_degree
from core import corpus
from hochschild.ext import (
    TypedBarComplex,
    bimodule_ext_dims,
    bimodule_to_module,
    enveloping_algebra,
    ext_dims,
    free_resolution,
    is_one_sided_projective,
    is_projective,
    left_module,
    module_to_bimodule,
    prop_tor2_complex,
    prop_tor_complex,
    right_module,
    tor_dims,
)
from linalg.errors import DimensionMismatchError


def test_enveloping_algebra(a2):
    assert enveloping_algebra(a2).dim == 9
    assert enveloping_algebra(a2) is enveloping_algebra(a2)


def test_bimodule_ext(a2, dual_numbers):
    assert bimodule_ext_dims(regular(a2), regular(a2), 2) == [1, 0, 0]
    assert bimodule_ext_dims(regular(dual_numbers), regular(dual_numbers), 2) == [2, 1, 1]


def test_module_round_trip(a2):
    x = dual(regular(a2))
    back = module_to_bimodule(bimodule_to_module(x), a2, a2)
    assert back.dim == x.dim
    for i in range(a2.dim):
        assert back.left_matrix(i) == x.left_matrix(i)
        assert back.right_matrix(i) == x.right_matrix(i)


def test_projectivity(a2):
    assert is_projective(left_module(regular(a2)))
    report = is_one_sided_projective(dual(regular(a2)))
    assert not report.left
    assert not report.right
    assert not report.either


def test_tor_over_a2(a2):
    assert tor_dims(regular(a2), regular(a2), 1) == [3, 0]


def test_tor_complex_over_ground_field(k):
    comparison = prop_tor_complex(k, k, k, regular(k), regular(k), n_max=2)
    assert comparison.tor_dims == [1, 0, 0]
    assert comparison.agrees


def test_tor_complex_with_four_algebras(k):
    comparison = prop_tor2_complex(k, k, k, k, regular(k), regular(k), regular(k), n_max=1)
    assert comparison.agrees


def test_ext_needs_one_algebra(a2, dual_numbers):
    with pytest.raises(DimensionMismatchError):
        ext_dims(left_module(regular(a2)), left_module(regular(dual_numbers)), 1)


def test_ext_between_free_modules(a2):
    free = left_module(regular(a2))
    assert ext_dims(free, free, 1) == [3, 0]
    assert free_resolution(free, 1).rank(0) >= 1


def test_one_point_module_ext():
    tri = corpus.load("onepoint").triangular
    m = right_module(tri.module)
    assert ext_dims(m, m, 1)[0] == 1


def test_tor_complex_on_dual_of_a2(a2):
    da2 = dual(regular(a2))
    comparison = prop_tor_complex(a2, a2, a2, da2, da2, n_max=2)
    assert comparison.complex_dims == [1, 1, 0]
    assert comparison.agrees


def test_tor_complex_with_projective_module(a2):
    e2 = a2.labels.index("e_2")
    s2, ae = right_simple(a2, e2), left_projective(a2, e2)
    comparison = prop_tor_complex(s2.left_algebra, a2, ae.right_algebra, s2, ae, n_max=2)
    assert comparison.agrees
    assert comparison.complex_dims == [1, 0, 0]


@pytest.mark.parametrize("vertex, dim", [("e_1", 1), ("e_2", 2)])
def test_left_projective(a2, vertex, dim):
    ae = left_projective(a2, a2.labels.index(vertex))
    assert ae.dim == dim
    assert ae.right_algebra.dim == 1
    assert is_projective(left_module(ae))


def test_tor_complex_four_on_dual_numbers(dual_numbers):
    r = regular(dual_numbers)
    a = dual_numbers
    comparison = prop_tor2_complex(a, a, a, a, r, r, r, n_max=2)
    assert comparison.agrees
    assert comparison.complex_dims[1:] == [0, 0]


def test_chain_dim_counts_the_index(a2):
    bar = TypedBarComplex([a2, a2, a2], [regular(a2), dual(regular(a2))])
    assert [bar.chain_dim(n) for n in range(3)] == [len(bar.index(n)) for n in range(3)]


def test_bar_degree_respects_the_cap():
    cap = DegreeCapConfig.BAR_CHAINS_MAX.value
    assert bar_degree(lambda n: 0, 4) == 4
    assert bar_degree(lambda n: cap + 1 if n > 2 else 1, 4) == 1
    assert bar_degree(lambda n: cap + 1, 2) == 0
