import pytest

from config import TheoremId
from core.models import InstanceResult, Status, Verdict
from core.theorem_suite import REGISTRY, SuiteContext, kunneth_prediction, verify, verify_all
from linalg.errors import InputError


def test_every_identifier_is_registered():
    assert set(REGISTRY) == set(TheoremId)


@pytest.mark.parametrize("theorem_id", list(TheoremId))
def test_verifier_passes_at_low_degree(theorem_id):
    verdict = verify(theorem_id, seed=0, max_degree=1)
    failures = [i for i in verdict.instances if i.status == Status.FAIL]
    assert not failures, failures
    assert verdict.overall


@pytest.mark.slow
def test_full_suite_at_default_degree():
    verdicts = verify_all(seed=0)
    assert [v.theorem_id for v in verdicts] == [t.value for t in REGISTRY]
    assert all(v.overall for v in verdicts), [v.theorem_id for v in verdicts if not v.overall]


def test_unknown_identifier():
    with pytest.raises(InputError):
        verify("thm-0.0")


def test_kunneth_prediction():
    assert kunneth_prediction([1, 0, 0, 0], 0) == [2, 1, 1, 1]
    assert kunneth_prediction([1, 0, 0, 0], 2) == [2, 2, 2, 2]
    assert kunneth_prediction([2, 1, 1], 3) == [4, 4, 5]


def test_suite_context_caps():
    ctx = SuiteContext(seed=0, max_degree=3)
    assert ctx.cap(1) == 3
    assert ctx.cap(1, 2) == 2
    assert SuiteContext(seed=0, max_degree=1).cap(6) == 1


def test_verdict_needs_a_pass():
    skipped = InstanceResult(algebra="M2", status=Status.NOT_APPLICABLE, note="no certificate")
    passed = InstanceResult(algebra="A2", computed={"h": 1}, expected={"h": 1}, status=Status.PASS)
    failed = InstanceResult(algebra="A3", status=Status.FAIL)
    assert not Verdict(theorem_id="thm-5.9", instances=[skipped]).overall
    assert Verdict(theorem_id="thm-5.9", instances=[skipped, passed]).overall
    assert not Verdict(theorem_id="thm-5.9", instances=[passed, failed]).overall
    assert Verdict(theorem_id="thm-5.9", instances=[passed]).summary()["overall"] is True


def _by_name(verdict: Verdict) -> dict[str, InstanceResult]:
    return {i.algebra: i for i in verdict.instances}


def _all_pass(verdict: Verdict) -> bool:
    return all(i.status == Status.PASS for i in verdict.instances)


def test_same_seed_gives_same_verdict():
    first = verify(TheoremId.CUP_FORMULA, seed=7, max_degree=1)
    second = verify(TheoremId.CUP_FORMULA, seed=7, max_degree=1)
    assert first.model_dump_json() == second.model_dump_json()


def test_horizontal_zero_on_ideal_and_quotient():
    verdict = verify(TheoremId.HORIZONTAL_ZERO, max_degree=1)
    names = set(_by_name(verdict))
    for split in ("T(k)", "T(A2)", "A2[e]", "T(A3)"):
        assert {f"{split} / quotient", f"{split} / ideal"} <= names
    assert _all_pass(verdict)


def test_column_ext_includes_a3():
    verdict = verify(TheoremId.COLUMN_EXT, max_degree=1)
    assert {"T(A3) / column 0", "T(A3) / column 1"} <= set(_by_name(verdict))
    assert not any(i.status == Status.FAIL for i in verdict.instances)


def test_tor_complex_instances():
    verdict = verify(TheoremId.TOR_COMPLEX, max_degree=2)
    instances = _by_name(verdict)
    assert len(instances) == 4
    assert instances["A2 / DA2, DA2"].computed["homology"] == [1, 1, 0]
    assert _all_pass(verdict)


@pytest.mark.slow
def test_tor_complex_four_instances():
    verdict = verify(TheoremId.TOR_COMPLEX_FOUR, max_degree=2)
    instances = _by_name(verdict)
    assert set(instances) == {"k", "A2", "Q[x]/(x^2)"}
    assert instances["A2"].note == "n <= 1"
    assert _all_pass(verdict)


@pytest.mark.slow
def test_bidegree_blocks_to_degree_three():
    verdict = verify(TheoremId.BIDEGREE, max_degree=3)
    for instance in verdict.instances:
        assert len(instance.computed["block_ranks"]) == 4
    assert _all_pass(verdict)


def test_nullhomotopy_on_every_base_algebra():
    verdict = verify(TheoremId.NULLHOMOTOPY, max_degree=2)
    names = set(_by_name(verdict))
    for split in ("T(A3)", "T(Kronecker)"):
        assert {f"{split} / q=1", f"{split} / q=2"} <= names
    assert len(names) == 12
    assert _all_pass(verdict)


def test_h1_of_symmetric_base_matches_kunneth():
    instances = _by_name(verify(TheoremId.H1_TRIVIAL_EXTENSION, max_degree=1))
    dual_numbers = instances["T(Q[x]/(x^2))"]
    assert dual_numbers.expected["kunneth_h1"] == 4
    assert dual_numbers.computed["h1_total"] == 4
    assert "kunneth_h1" not in instances["T(A2)"].expected


def test_direct_summand_column_zero_blocks():
    verdict = verify(TheoremId.DIRECT_SUMMAND, max_degree=2)
    assert _all_pass(verdict)
    for instance in verdict.instances:
        assert not any(instance.computed["column0_block_ranks"])


def test_delta_cup_on_kronecker_one_point_extension():
    instances = _by_name(verify(TheoremId.TRIANGULAR_DELTA_CUP, max_degree=1))
    assert instances["Kronecker[R]"].status == Status.PASS
    assert instances["Kronecker[R]"].computed["mismatches"] == 0


def test_triangular_kkk_sequence_to_degree_three():
    instances = _by_name(verify(TheoremId.TRIANGULAR_LES, max_degree=3))
    kkk = instances["[k,k,k]"]
    assert kkk.status == Status.PASS
    assert len(kkk.computed["middle"]) == 4
