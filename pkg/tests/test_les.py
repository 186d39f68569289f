import pytest

from core import corpus
from hochschild.les import SequenceMaps, assemble_les, bidegree_blocks, center_report, connecting_via_snake
from linalg.errors import HypothesisError


@pytest.fixture
def kkk_seq(kkk):
    return corpus.sequence(kkk.split)


def test_triangular_kkk(kkk_seq):
    report = assemble_les(kkk_seq, 1)
    assert report.exact
    assert report.middle == [1, 0]
    assert report.quotient[0] == 2
    assert report.sub[1] == 1
    assert report.connecting_ranks[0] == 1
    assert report.center.consistent


def test_dual_numbers_over_ground_field(t_k):
    report = assemble_les(t_k, 2)
    assert report.middle == [2, 1, 1]
    assert report.connecting_ranks[0] == 0
    assert report.connecting_ranks[1] >= 1
    assert len(report.nodes) == 9
    assert set(report.blocks) == {0, 1, 2}


def test_snake_agrees_with_report(t_k):
    report = assemble_les(t_k, 2)
    for n in range(2):
        assert connecting_via_snake(t_k, n).rank == report.connecting_ranks[n]


def test_blocks_need_square_zero():
    seq = corpus.sequence(corpus.split("cubic_split"))
    with pytest.raises(HypothesisError):
        bidegree_blocks(seq, 0)


def test_blocks_of_degree_zero(t_k):
    blocks = bidegree_blocks(t_k, 0)
    assert [(b.p, b.q) for b in blocks] == [(0, 0)]
    assert blocks[0].rank == 0


def test_non_square_zero_sequence_is_exact():
    seq = corpus.sequence(corpus.split("cubic_split"))
    report = assemble_les(seq, 1)
    assert report.exact
    assert report.blocks == {}


def test_twisted_center():
    seq = corpus.sequence(corpus.split("twisted"))
    report = assemble_les(seq, 0)
    assert report.center.base_part == 1
    assert report.center.kernel_delta0 == 1
    assert report.center.consistent
    assert center_report(seq, 1) == report.center


def test_sequence_maps_compose_to_zero(t_a2):
    maps = SequenceMaps(t_a2)
    for words in (1, 6):
        assert (maps.projection(words) @ maps.inclusion(words)).is_zero()
        assert (maps.ideal_part(words) @ maps.section(words)).is_zero()


@pytest.mark.parametrize(
    "name",
    [
        pytest.param(name, marks=pytest.mark.slow) if name == "t_a2" else name
        for name in (*corpus.SQUARE_ZERO_SPLITS, "cubic_split")
    ],
)
def test_exact_up_to_degree_three(name):
    seq = corpus.sequence(corpus.split(name))
    report = assemble_les(seq, 3)
    assert report.exact
    for n, dim in enumerate(report.middle):
        previous = report.connecting_ranks[n - 1] if n else 0
        kernel_delta = report.quotient[n] - report.connecting_ranks[n]
        assert dim == kernel_delta + (report.sub[n] - previous)


@pytest.mark.slow
def test_trivial_extension_of_a2_to_degree_three(t_a2):
    report = assemble_les(t_a2, 3)
    assert report.exact
    assert report.middle[1] == 1
    assert set(report.blocks) == {0, 1, 2, 3}
