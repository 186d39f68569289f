# Named corpus instances, loaded once per (name, field) from the JSON files under corpus/
import logging
from functools import lru_cache
from pathlib import Path
from typing import Optional

from algebras.algebra import Algebra
from algebras.idempotents import IdempotentSystem
from algebras.split import BimoduleSequence, SplitAlgebra, ses_bimodules
from config import CORPUS_DIR
from fetch_prep_data.parser import LoadedInput, parse_input
from fetch_prep_data.reader import read_input_file
from linalg.errors import InputError
from linalg.field import FieldSpec

logger = logging.getLogger(__name__)

BASE_ALGEBRAS = ("k", "a2", "a3", "kronecker", "dualnumbers", "dualnumbers_f2")
ONE_WAY_CANDIDATES = ("a2", "a3", "kronecker", "m2")
SQUARE_ZERO_SPLITS = ("t_k", "t_a2", "a2_eps", "twisted", "triangular_kkk")


@lru_cache(maxsize=None)
def _load(name: str, field_label: Optional[str], corpus_dir: Path) -> LoadedInput:
    override = FieldSpec.parse(field_label) if field_label else None
    return parse_input(read_input_file(name, corpus_dir), override)


def load(name: str, field: Optional[FieldSpec] = None, corpus_dir: Optional[Path] = None) -> LoadedInput:
    """A corpus entry by file stem; repeated calls return the same objects."""
    return _load(name, field.label if field is not None else None, corpus_dir or CORPUS_DIR)


def algebra(name: str, field: Optional[FieldSpec] = None) -> Algebra:
    return load(name, field).algebra


def split(name: str, field: Optional[FieldSpec] = None) -> SplitAlgebra:
    loaded = load(name, field)
    if loaded.split is None:
        raise InputError(f"corpus entry '{name}' is not a split algebra")
    return loaded.split


@lru_cache(maxsize=None)
def _sequence(lam: SplitAlgebra) -> BimoduleSequence:
    return ses_bimodules(lam)


def sequence(lam: SplitAlgebra) -> BimoduleSequence:
    """The sequence 0 -> M -> Λ -> Λ/M -> 0, built once per split algebra."""
    return _sequence(lam)


def idempotents(name: str) -> IdempotentSystem:
    """Vertex idempotents of a quiver entry; the diagonal matrix units of M2."""
    loaded = load(name)
    if loaded.quiver is not None:
        return loaded.quiver.idempotents
    a = loaded.algebra
    one, zero = a.field.one, a.field.zero
    diagonal = [i for i, label in enumerate(a.labels) if len(label) == 3 and label[1] == label[2]]
    if not diagonal:
        raise InputError(f"corpus entry '{name}' has no idempotent system")
    return IdempotentSystem(a, tuple([one if j == i else zero for j in range(a.dim)] for i in diagonal))
