import json

import pytest

from fetch_prep_data.parser import InputKind, detect_kind, parse_bimodule, parse_input
from fetch_prep_data.reader import list_corpus, read_input_file, resolve_input
from core import corpus
from linalg.errors import InputError
from linalg.field import FieldSpec

DUAL_NUMBERS = {
    "name": "D",
    "field": {"kind": "Q"},
    "basis": ["1", "x"],
    "unit": [1, 0],
    "table": [[[1, 0], [0, 1]], [[0, 1], [0, 0]]],
}


@pytest.fixture
def write(tmp_path):
    def _write(content, name="input.json"):
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else json.dumps(content), encoding="utf-8")
        return path

    return _write


def test_resolve_corpus_entry():
    assert resolve_input("dualnumbers").name == "dualnumbers.json"
    assert resolve_input("dualnumbers.json").name == "dualnumbers.json"
    assert {"a2", "t_k", "triangular_kkk"} <= set(list_corpus())


def test_missing_input():
    with pytest.raises(InputError):
        read_input_file("no_such_algebra")


def test_path_escape_is_rejected():
    with pytest.raises(InputError):
        resolve_input("../corpus/a2")


@pytest.mark.parametrize(
    "content, name",
    [
        ("{}", ".hidden.json"),
        ("{}", "algebra.txt"),
        ("{not json", "broken.json"),
        ("[1, 2]", "list.json"),
    ],
)
def test_rejected_files(write, content, name):
    with pytest.raises(InputError):
        read_input_file(write(content, name))


def test_parse_algebra_file(write):
    loaded = parse_input(read_input_file(write(DUAL_NUMBERS)))
    assert loaded.kind == InputKind.ALGEBRA
    assert loaded.algebra.dim == 2
    assert loaded.algebra.is_commutative()


def test_field_override(write):
    loaded = parse_input(read_input_file(write(DUAL_NUMBERS)), FieldSpec.prime(2))
    assert loaded.algebra.field.label == "Fp:2"


@pytest.mark.parametrize(
    "change",
    [
        {"unit": [1]},
        {"unit": [0, 1]},
        {"field": None},
        {"field": {"kind": "Fp"}},
        {"extra": 1},
    ],
)
def test_bad_algebra_files(write, change):
    content = {**DUAL_NUMBERS, **change}
    if content["field"] is None:
        del content["field"]
    with pytest.raises(InputError):
        parse_input(read_input_file(write(content)))


def test_detect_kind():
    assert detect_kind({"vertices": []}) == InputKind.QUIVER
    assert detect_kind({"split": {}}) == InputKind.SPLIT
    with pytest.raises(InputError):
        detect_kind({"basis": []})


def test_parse_quiver(write):
    content = {
        "field": {"kind": "Q"},
        "vertices": ["1", "2", "3"],
        "arrows": [{"name": "a", "src": "1", "tgt": "2"}, {"name": "b", "src": "2", "tgt": "3"}],
        "nilBound": 3,
    }
    loaded = parse_input(read_input_file(write(content)))
    assert loaded.kind == InputKind.QUIVER
    assert loaded.algebra.dim == 6
    assert loaded.quiver is not None


def test_split_needs_exactly_one_shape(write):
    base = {k: v for k, v in DUAL_NUMBERS.items() if k != "field"}
    content = {
        "field": {"kind": "Q"},
        "split": {"base": base, "ideal": "dual"},
        "triangular": {"left": base, "right": base, "module": {"dim": 0, "left": [[], []], "right": []}},
    }
    with pytest.raises(InputError):
        parse_input(read_input_file(write(content)))


def test_split_with_regular_ideal(write):
    base = {k: v for k, v in DUAL_NUMBERS.items() if k != "field"}
    loaded = parse_input(read_input_file(write({"field": {"kind": "Q"}, "split": {"base": base, "ideal": "regular"}})))
    assert loaded.kind == InputKind.SPLIT
    assert loaded.split.dim == 4
    assert loaded.split.square_zero


def test_parse_bimodule(write):
    k = corpus.algebra("k")
    x = parse_bimodule(read_input_file(write({"dim": 1, "left": [[[1]]], "right": [[[1]]]})), k)
    assert x.dim == 1
    with pytest.raises(InputError):
        parse_bimodule(read_input_file(write({"dim": 2, "left": [[[1, 0]]], "right": [[[1, 0]]]})), k)


def test_kronecker_one_point_extension():
    loaded = parse_input(read_input_file("kronecker_onepoint"))
    assert loaded.triangular.module.dim == 2
    assert loaded.algebra.dim == 7
    assert loaded.quiver is not None
