# Bound quiver algebras kQ/I with a user-supplied nilpotency bound
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from linalg.errors import QuiverError
from linalg.field import FieldSpec
from linalg.matrix import Matrix, add_scaled

from .algebra import Algebra
from .idempotents import IdempotentSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Arrow:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Path:
    """A path read left to right: arrows[0] starts at src, arrows[-1] ends at tgt."""

    src: str
    tgt: str
    arrows: tuple[str, ...] = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    @property
    def label(self) -> str:
        if not self.arrows:
            return f"e_{self.src}"
        return ".".join(self.arrows)

    def then(self, other: "Path") -> "Path | None":
        if self.tgt != other.src:
            return None
        return Path(self.src, other.tgt, self.arrows + other.arrows)


@dataclass(frozen=True)
class Relation:
    coeffs: tuple[Any, ...]
    paths: tuple[tuple[str, ...], ...]


@dataclass(frozen=True, eq=False)
class QuiverAlgebra:
    algebra: Algebra
    idempotents: IdempotentSystem
    basis: tuple[Path, ...]


def _enumerate_paths(vertices: Sequence[str], arrows: Sequence[Arrow], max_length: int) -> list[Path]:
    layer = [Path(v, v) for v in vertices]
    paths = list(layer)
    for _ in range(max_length):
        layer = [
            Path(p.src, a.tgt, p.arrows + (a.name,)) for p in layer for a in arrows if a.src == p.tgt
        ]
        paths.extend(layer)
    return paths


def _path_from_names(names: Sequence[str], by_name: dict[str, Arrow]) -> Path:
    if not names:
        raise QuiverError("relations must not contain trivial paths")
    try:
        steps = [by_name[n] for n in names]
    except KeyError as e:
        raise QuiverError(f"unknown arrow {e.args[0]}") from e
    for x, y in zip(steps, steps[1:]):
        if x.tgt != y.src:
            raise QuiverError(f"{x.name} then {y.name} is not a path")
    return Path(steps[0].src, steps[-1].tgt, tuple(names))


def quiver_algebra(
    field: FieldSpec,
    vertices: Sequence[str],
    arrows: Sequence[Arrow],
    relations: Sequence[Relation],
    nil_bound: int,
    name: str = "kQ/I",
) -> QuiverAlgebra:
    """
    Quotient of the path algebra by the ideal generated by `relations` and all paths of length >= nil_bound.

    The basis is the complement of the ideal spanned by the smallest paths in
    (length, arrow names) order; the ideal is computed by row reduction with
    columns ordered from the largest path down, so larger paths become pivots.
    The bound is checked by asking that every path of length nil_bound already
    lies in the ideal the relations generate, which is exact for homogeneous
    relations.
    """
    if nil_bound < 1:
        raise QuiverError("nilBound must be at least 1")
    if len(set(vertices)) != len(vertices):
        raise QuiverError("duplicate vertex names")
    by_name = {a.name: a for a in arrows}
    if len(by_name) != len(arrows):
        raise QuiverError("duplicate arrow names")
    for a in arrows:
        if a.src not in vertices or a.tgt not in vertices:
            raise QuiverError(f"arrow {a.name} uses an unknown vertex")

    vertex_order = {v: i for i, v in enumerate(vertices)}

    def key(p: Path):
        return (p.length, p.arrows, vertex_order[p.src])

    parsed = []
    for rel in relations:
        if len(rel.coeffs) != len(rel.paths):
            raise QuiverError("relation has mismatched coefficients and paths")
        terms = [(field(c), _path_from_names(names, by_name)) for c, names in zip(rel.coeffs, rel.paths)]
        ends = {(p.src, p.tgt) for _, p in terms}
        if len(ends) > 1:
            raise QuiverError(f"relation {[p.label for _, p in terms]} is not parallel")
        if any(p.length < 2 for _, p in terms):
            raise QuiverError("relations must be combinations of paths of length at least 2")
        parsed.append(terms)

    paths = sorted(_enumerate_paths(vertices, arrows, nil_bound), key=key, reverse=True)
    column = {p: k for k, p in enumerate(paths)}
    zero = field.zero

    ideal_rows: dict[int, dict[int, Any]] = {}
    for terms in parsed:
        for u in paths:
            for w in paths:
                row: dict[int, Any] = {}
                for c, p in terms:
                    q = u.then(p)
                    q = q.then(w) if q is not None else None
                    if q is not None and q.length <= nil_bound:
                        add_scaled(row, {column[q]: field.one}, c, zero)
                if row:
                    ideal_rows[len(ideal_rows)] = row
    relation_span = Matrix.from_entries(ideal_rows, (len(ideal_rows), len(paths)), field)
    for p in paths:
        if p.length == nil_bound:
            unit_row = Matrix.from_entries({0: {column[p]: field.one}}, (1, len(paths)), field)
            if relation_span.vstack(unit_row).rank() != relation_span.rank():
                raise QuiverError(f"path {p.label} of length {nil_bound} is not in the ideal")

    # long paths are declared zero
    for p in paths:
        if p.length >= nil_bound:
            ideal_rows[len(ideal_rows)] = {column[p]: field.one}
    reduced, pivots = Matrix.from_entries(ideal_rows, (len(ideal_rows), len(paths)), field).rref()
    pivot_row = {p: i for i, p in enumerate(pivots)}
    basis = sorted((p for p in paths if column[p] not in pivot_row), key=key)
    index = {column[p]: i for i, p in enumerate(basis)}

    def normal_form(q: Path | None) -> dict[int, Any]:
        if q is None or q.length >= nil_bound:
            return {}
        k = column[q]
        if k in index:
            return {index[k]: field.one}
        out: dict[int, Any] = {}
        for j, x in reduced[pivot_row[k]].items():
            if j != k:
                out[index[j]] = -x
        return out

    table = tuple(tuple(normal_form(p.then(q)) for q in basis) for p in basis)
    unit = tuple(field.one if p.length == 0 else zero for p in basis)
    algebra = Algebra(name, field, tuple(p.label for p in basis), unit, table)
    idempotents = tuple(
        tuple(field.one if (p.length == 0 and p.src == v) else zero for p in basis) for v in vertices
    )
    logger.info(f"🧭 {name}: {len(paths)} paths, ideal rank {len(pivots)}, dim {algebra.dim}")
    return QuiverAlgebra(algebra, IdempotentSystem(algebra, tuple(list(e) for e in idempotents)), tuple(basis))
