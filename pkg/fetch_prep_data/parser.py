# Input file formats for algebras, quivers, split algebras and bimodules, validated with pydantic
import logging
from dataclasses import dataclass
from enum import StrEnum
from typing import Any, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from algebras.algebra import Algebra
from algebras.bimodule import Bimodule, dual, one_sided, regular, twisted
from algebras.quiver import Arrow, QuiverAlgebra, Relation, quiver_algebra
from algebras.split import SplitAlgebra, TriangularAlgebra, build_split, one_point_extension, triangular_matrix
from config import FieldKind
from linalg.errors import HochschildError, InputError
from linalg.field import FieldSpec
from linalg.matrix import Matrix, dense_to_sparse

from .reader import RawInputFile

logger = logging.getLogger(__name__)

Scalar = Union[int, str]


class InputKind(StrEnum):
    ALGEBRA = "algebra"
    QUIVER = "quiver"
    SPLIT = "split"


class FieldModel(BaseModel):
    kind: FieldKind
    p: Optional[int] = Field(None, ge=2)

    @model_validator(mode="after")
    def _prime_needs_p(self) -> "FieldModel":
        if self.kind == FieldKind.PRIME and self.p is None:
            raise ValueError("a prime field needs p")
        return self

    def to_spec(self) -> FieldSpec:
        if self.kind == FieldKind.RATIONALS:
            return FieldSpec.rationals()
        return FieldSpec.prime(self.p)


class AlgebraFile(BaseModel):
    """Structure constants: table[i][j][l] is the coefficient of b_l in b_i b_j."""

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    field: Optional[FieldModel] = None
    basis: list[str] = Field(..., min_length=1)
    unit: list[Scalar]
    table: list[list[list[Scalar]]]

    @model_validator(mode="after")
    def _shapes(self) -> "AlgebraFile":
        n = len(self.basis)
        if len(self.unit) != n or len(self.table) != n or any(len(row) != n for row in self.table):
            raise ValueError(f"unit and table must match the {n} basis elements")
        return self


class ArrowModel(BaseModel):
    name: str
    src: str
    tgt: str


class RelationModel(BaseModel):
    coeffs: list[Scalar]
    paths: list[list[str]]


class QuiverFile(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: Optional[str] = None
    field: Optional[FieldModel] = None
    vertices: list[str] = Field(..., min_length=1)
    arrows: list[ArrowModel] = Field(default_factory=list)
    relations: list[RelationModel] = Field(default_factory=list)
    nil_bound: int = Field(..., alias="nilBound", ge=1)


AlgebraSource = Union[AlgebraFile, QuiverFile]


class BimoduleFile(BaseModel):
    """left[i][m] and right[m][j] are dense coordinate vectors of b_i m_m and m_m b_j."""

    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = None
    dim: int = Field(..., ge=0)
    left: list[list[list[Scalar]]]
    right: list[list[list[Scalar]]]


class TwistModel(BaseModel):
    """The automorphism f as a matrix whose column i is f(b_i)."""

    twist: list[list[Scalar]]


class SplitSpec(BaseModel):
    base: AlgebraSource
    ideal: Union[Literal["dual", "regular"], TwistModel, BimoduleFile]
    product: Union[Literal["zero"], list[list[list[Scalar]]]] = "zero"


class OnePointSpec(BaseModel):
    base: AlgebraSource
    right_module: list[list[list[Scalar]]] = Field(..., description="right_module[m][j]: m_m . b_j")
    module_name: str = "M"


class TriangularSpec(BaseModel):
    """[[A, 0], [M, B]] for a (B, A)-bimodule M."""

    left: AlgebraSource
    right: AlgebraSource
    module: BimoduleFile


class SplitFile(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: Optional[str] = None
    field: Optional[FieldModel] = None
    split: Optional[SplitSpec] = None
    one_point: Optional[OnePointSpec] = Field(None, alias="onePoint")
    triangular: Optional[TriangularSpec] = None

    @model_validator(mode="after")
    def _exactly_one(self) -> "SplitFile":
        given = [x for x in (self.split, self.one_point, self.triangular) if x is not None]
        if len(given) != 1:
            raise ValueError("a split file needs exactly one of split, onePoint, triangular")
        return self


@dataclass
class LoadedInput:
    name: str
    kind: InputKind
    algebra: Algebra
    split: Optional[SplitAlgebra] = None
    quiver: Optional[QuiverAlgebra] = None
    triangular: Optional[TriangularAlgebra] = None


def detect_kind(content: dict[str, Any]) -> InputKind:
    if any(key in content for key in ("split", "onePoint", "one_point", "triangular")):
        return InputKind.SPLIT
    if "vertices" in content:
        return InputKind.QUIVER
    if "table" in content:
        return InputKind.ALGEBRA
    raise InputError("cannot tell the input format: expected table, vertices or split")


def _field(model: Optional[FieldModel], inherited: Optional[FieldSpec], override: Optional[FieldSpec]) -> FieldSpec:
    if override is not None:
        return override
    if model is not None:
        return model.to_spec()
    if inherited is not None:
        return inherited
    raise InputError("no field given; add a field entry or pass --field")


def _sparse_rows(rows: list[list[list[Scalar]]], dim: int, field: FieldSpec):
    out = []
    for row in rows:
        vectors = []
        for vec in row:
            if len(vec) != dim:
                raise InputError(f"action vector of length {len(vec)}, expected {dim}")
            vectors.append(dense_to_sparse([field(x) for x in vec], field))
        out.append(tuple(vectors))
    return tuple(out)


def build_algebra(
    source: AlgebraSource, inherited: Optional[FieldSpec] = None, override: Optional[FieldSpec] = None
) -> tuple[Algebra, Optional[QuiverAlgebra]]:
    field = _field(source.field, inherited, override)
    if isinstance(source, QuiverFile):
        quiver = quiver_algebra(
            field,
            source.vertices,
            [Arrow(a.name, a.src, a.tgt) for a in source.arrows],
            [Relation(tuple(r.coeffs), tuple(tuple(p) for p in r.paths)) for r in source.relations],
            source.nil_bound,
            name=source.name or "kQ/I",
        )
        return quiver.algebra, quiver
    algebra = Algebra.from_dense(source.name or "A", field, source.basis, source.unit, source.table)
    return algebra, None


def build_bimodule(model: BimoduleFile, left_algebra: Algebra, right_algebra: Algebra, name: str = "X") -> Bimodule:
    field = left_algebra.field
    if len(model.left) != left_algebra.dim or any(len(r) != model.dim for r in model.left):
        raise InputError(f"left action must be {left_algebra.dim} x {model.dim} vectors")
    if len(model.right) != model.dim or any(len(r) != right_algebra.dim for r in model.right):
        raise InputError(f"right action must be {model.dim} x {right_algebra.dim} vectors")
    return Bimodule(
        model.name or name,
        left_algebra,
        right_algebra,
        model.dim,
        _sparse_rows(model.left, model.dim, field),
        _sparse_rows(model.right, model.dim, field),
    )


def _build_split(model: SplitFile, override: Optional[FieldSpec]) -> LoadedInput:
    outer = model.field.to_spec() if model.field is not None and override is None else override
    if model.one_point is not None:
        spec = model.one_point
        base, quiver = build_algebra(spec.base, outer, override)
        right_action = [[[base.field(x) for x in vec] for vec in row] for row in spec.right_module]
        tri = one_point_extension(base, one_sided(base, right_action, spec.module_name), name=model.name)
        return LoadedInput(tri.split.name, InputKind.SPLIT, tri.split.total, tri.split, quiver, tri)
    if model.triangular is not None:
        spec = model.triangular
        a, _ = build_algebra(spec.left, outer, override)
        b, _ = build_algebra(spec.right, outer, override)
        m = build_bimodule(spec.module, b, a, name="M")
        tri = triangular_matrix(a, b, m, name=model.name)
        return LoadedInput(tri.split.name, InputKind.SPLIT, tri.split.total, tri.split, None, tri)
    spec = model.split
    base, quiver = build_algebra(spec.base, outer, override)
    if spec.ideal == "dual":
        ideal = dual(regular(base), name=f"D{base.name}")
    elif spec.ideal == "regular":
        ideal = regular(base, name=base.name)
    elif isinstance(spec.ideal, TwistModel):
        f = Matrix.from_rows(spec.ideal.twist, base.field, ncols=base.dim)
        ideal = twisted(base, f)
    else:
        ideal = build_bimodule(spec.ideal, base, base, name="M")
    product = None
    if spec.product != "zero":
        product = _sparse_rows(spec.product, ideal.dim, base.field)
    lam = build_split(base, ideal, product, name=model.name)
    return LoadedInput(lam.name, InputKind.SPLIT, lam.total, lam, quiver)


def parse_input(raw: RawInputFile, field_override: Optional[FieldSpec] = None) -> LoadedInput:
    """
    Validate a decoded input file and build the algebra it describes.

    Raises:
        InputError: on schema violations and on failed algebra or bimodule axioms
    """
    kind = detect_kind(raw.content)
    try:
        if kind == InputKind.ALGEBRA:
            algebra, _ = build_algebra(AlgebraFile.model_validate(raw.content), override=field_override)
            loaded = LoadedInput(algebra.name, kind, algebra)
        elif kind == InputKind.QUIVER:
            algebra, quiver = build_algebra(QuiverFile.model_validate(raw.content), override=field_override)
            loaded = LoadedInput(algebra.name, kind, algebra, quiver=quiver)
        else:
            loaded = _build_split(SplitFile.model_validate(raw.content), field_override)
    except ValidationError as e:
        raise InputError(f"{raw.filename}: {e.error_count()} schema error(s): {e.errors()[0]['msg']}") from e
    except InputError:
        raise
    except HochschildError as e:
        raise InputError(f"{raw.filename}: {e}") from e
    logger.info(f"🧾 parsed {raw.filename} as {kind} '{loaded.name}' of dim {loaded.algebra.dim}")
    return loaded


def parse_bimodule(raw: RawInputFile, algebra: Algebra) -> Bimodule:
    """A coefficient bimodule over an already loaded algebra."""
    try:
        model = BimoduleFile.model_validate(raw.content)
        return build_bimodule(model, algebra, algebra)
    except ValidationError as e:
        raise InputError(f"{raw.filename}: {e.errors()[0]['msg']}") from e
    except InputError:
        raise
    except HochschildError as e:
        raise InputError(f"{raw.filename}: {e}") from e

