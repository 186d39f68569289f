# Exact matrices over a FieldSpec: rank, kernel, image membership, quotient dimensions
import logging
from bisect import insort
from collections.abc import Iterable, Mapping, Sequence
from typing import Any, Optional

from sympy.polys.matrices import DomainMatrix

from config import LinalgConfig

from .errors import DimensionMismatchError
from .field import FieldSpec

logger = logging.getLogger(__name__)

Vector = list
SparseVector = dict


def zero_vector(n: int, field: FieldSpec) -> Vector:
    return [field.zero] * n


def unit_vector(n: int, i: int, field: FieldSpec) -> Vector:
    v = zero_vector(n, field)
    v[i] = field.one
    return v


def is_zero_vector(v: Sequence, field: FieldSpec) -> bool:
    zero = field.zero
    return all(x == zero for x in v)


def sparse_to_dense(v: Mapping[int, Any], n: int, field: FieldSpec) -> Vector:
    out = zero_vector(n, field)
    for i, x in v.items():
        out[i] = x
    return out


def dense_to_sparse(v: Sequence, field: FieldSpec) -> SparseVector:
    zero = field.zero
    return {i: x for i, x in enumerate(v) if x != zero}


def add_scaled(target: dict, source: Mapping[int, Any], scale, zero) -> None:
    """target += scale * source, in place, dropping cancelled entries."""
    for j, x in source.items():
        value = target.get(j, zero) + scale * x
        if value == zero:
            target.pop(j, None)
        else:
            target[j] = value


class Matrix:
    """Immutable exact matrix; the storage is a sparse sympy DomainMatrix."""

    __slots__ = ("_dm", "field")

    def __init__(self, dm: DomainMatrix, field: FieldSpec):
        self._dm = dm.to_sparse()
        self.field = field

    @classmethod
    def from_entries(
        cls,
        entries: Mapping[int, Mapping[int, Any]],
        shape: tuple[int, int],
        field: FieldSpec,
    ) -> "Matrix":
        zero = field.zero
        clean = {}
        for i, row in entries.items():
            kept = {j: x for j, x in row.items() if x != zero}
            if kept:
                clean[i] = kept
        return cls(DomainMatrix(clean, shape, field.domain), field)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Any]], field: FieldSpec, ncols: int | None = None) -> "Matrix":
        width = ncols if ncols is not None else (len(rows[0]) if rows else 0)
        entries = {i: {j: field(x) for j, x in enumerate(row)} for i, row in enumerate(rows)}
        return cls.from_entries(entries, (len(rows), width), field)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Any]], nrows: int, field: FieldSpec) -> "Matrix":
        entries: dict[int, dict[int, Any]] = {}
        zero = field.zero
        for j, column in enumerate(columns):
            if len(column) != nrows:
                raise DimensionMismatchError(
                    f"column {j} has length {len(column)}, expected {nrows}"
                )
            for i, x in enumerate(column):
                if x != zero:
                    entries.setdefault(i, {})[j] = x
        return cls.from_entries(entries, (nrows, len(columns)), field)

    @classmethod
    def from_sparse_columns(
        cls, columns: Sequence[Mapping[int, Any]], nrows: int, field: FieldSpec
    ) -> "Matrix":
        entries: dict[int, dict[int, Any]] = {}
        for j, column in enumerate(columns):
            for i, x in column.items():
                entries.setdefault(i, {})[j] = x
        return cls.from_entries(entries, (nrows, len(columns)), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> "Matrix":
        return cls.from_entries({}, (rows, cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "Matrix":
        return cls.from_entries({i: {i: field.one} for i in range(n)}, (n, n), field)

    @property
    def shape(self) -> tuple[int, int]:
        return self._dm.shape

    @property
    def rows(self) -> int:
        return self._dm.shape[0]

    @property
    def cols(self) -> int:
        return self._dm.shape[1]

    def entries(self) -> Mapping[int, Mapping[int, Any]]:
        return self._dm.rep

    def nnz(self) -> int:
        return sum(len(row) for row in self.entries().values())

    def get(self, i: int, j: int):
        return self.entries().get(i, {}).get(j, self.field.zero)

    def is_zero(self) -> bool:
        return not self.entries()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and dict(self.entries()) == dict(other.entries())

    def __hash__(self):
        return hash(self.shape)

    def __repr__(self) -> str:
        return f"Matrix({self.rows}x{self.cols}, nnz={self.nnz()}, {self.field.label})"

    def _check_same_shape(self, other: "Matrix") -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"shapes {self.shape} and {other.shape} differ")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self._dm.add(other._dm), self.field)

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix(self._dm.sub(other._dm), self.field)

    def __neg__(self) -> "Matrix":
        return Matrix(self._dm.neg(), self.field)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise DimensionMismatchError(
                f"cannot compose {self.shape} with {other.shape}"
            )
        if self.rows == 0 or other.cols == 0 or self.cols == 0:
            return Matrix.zeros(self.rows, other.cols, self.field)
        return Matrix(self._dm.matmul(other._dm), self.field)

    def scale(self, c) -> "Matrix":
        return Matrix(self._dm.mul(self.field(c)), self.field)

    def transpose(self) -> "Matrix":
        return Matrix(self._dm.transpose(), self.field)

    def hstack(self, *others: "Matrix") -> "Matrix":
        entries = {i: dict(row) for i, row in self.entries().items()}
        offset = self.cols
        for other in others:
            if other.rows != self.rows:
                raise DimensionMismatchError("hstack needs equal row counts")
            for i, row in other.entries().items():
                target = entries.setdefault(i, {})
                for j, x in row.items():
                    target[offset + j] = x
            offset += other.cols
        return Matrix.from_entries(entries, (self.rows, offset), self.field)

    def vstack(self, *others: "Matrix") -> "Matrix":
        entries = {i: dict(row) for i, row in self.entries().items()}
        offset = self.rows
        for other in others:
            if other.cols != self.cols:
                raise DimensionMismatchError("vstack needs equal column counts")
            for i, row in other.entries().items():
                entries[offset + i] = dict(row)
            offset += other.rows
        return Matrix.from_entries(entries, (offset, self.cols), self.field)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        col_pos = {j: k for k, j in enumerate(cols)}
        source = self.entries()
        entries = {}
        for k, i in enumerate(rows):
            row = source.get(i)
            if not row:
                continue
            picked = {col_pos[j]: x for j, x in row.items() if j in col_pos}
            if picked:
                entries[k] = picked
        return Matrix.from_entries(entries, (len(rows), len(cols)), self.field)

    def column(self, j: int) -> Vector:
        out = zero_vector(self.rows, self.field)
        for i, row in self.entries().items():
            x = row.get(j)
            if x is not None:
                out[i] = x
        return out

    def columns(self) -> list[Vector]:
        out = [zero_vector(self.rows, self.field) for _ in range(self.cols)]
        for i, row in self.entries().items():
            for j, x in row.items():
                out[j][i] = x
        return out

    def apply(self, v: Sequence) -> Vector:
        if len(v) != self.cols:
            raise DimensionMismatchError(
                f"vector of length {len(v)} against {self.cols} columns"
            )
        zero = self.field.zero
        out = zero_vector(self.rows, self.field)
        for i, row in self.entries().items():
            acc = zero
            for j, x in row.items():
                vj = v[j]
                if vj != zero:
                    acc += x * vj
            out[i] = acc
        return out

    def _rref(self) -> tuple[Mapping[int, Mapping[int, Any]], tuple[int, ...]]:
        rows, cols = self.shape
        if rows == 0 or cols == 0 or self.is_zero():
            return {}, ()
        density = self.nnz() / (rows * cols)
        dm = self._dm
        if density >= LinalgConfig.SPARSE_DENSITY_THRESHOLD.value:
            dm = dm.to_dense()
        reduced, pivots = dm.rref()
        return reduced.to_sparse().rep, tuple(pivots)

    def rank(self) -> int:
        if self.rows > self.cols:
            return len(self.transpose()._rref()[1])
        return len(self._rref()[1])

    def pivot_columns(self) -> tuple[int, ...]:
        return self._rref()[1]

    def rref(self) -> tuple[Mapping[int, Mapping[int, Any]], tuple[int, ...]]:
        """Reduced row echelon rows (sparse, keyed by row) and pivot columns."""
        return self._rref()

    def kernel_basis(self) -> list[Vector]:
        """
        Basis of the null space, one vector per free column in ascending order.

        Each vector has a 1 at its free column and is zero on the other free columns.
        """
        reduced, pivots = self._rref()
        pivot_set = set(pivots)
        zero, one = self.field.zero, self.field.one
        basis = []
        for free in range(self.cols):
            if free in pivot_set:
                continue
            v = zero_vector(self.cols, self.field)
            v[free] = one
            for i, p in enumerate(pivots):
                x = reduced.get(i, {}).get(free, zero)
                if x != zero:
                    v[p] = -x
            basis.append(v)
        return basis

    def kernel_matrix(self) -> "Matrix":
        return Matrix.from_columns(self.kernel_basis(), self.cols, self.field)

    def preimages(self, vectors: Sequence[Sequence[Any]]) -> list[Optional[Vector]]:
        """
        Solve self·u = v for every v at once.

        Returns None for vectors outside the image; otherwise the solution with all
        free variables set to zero.
        """
        for v in vectors:
            if len(v) != self.rows:
                raise DimensionMismatchError(
                    f"vector of length {len(v)} against {self.rows} rows"
                )
        if not vectors:
            return []
        rhs = Matrix.from_columns(vectors, self.rows, self.field)
        reduced, pivots = self.hstack(rhs)._rref()
        rank = sum(1 for p in pivots if p < self.cols)
        zero = self.field.zero
        solutions: list[Optional[Vector]] = []
        for k in range(len(vectors)):
            c = self.cols + k
            if any(reduced.get(i, {}).get(c, zero) != zero for i in range(rank, len(pivots))):
                solutions.append(None)
                continue
            u = zero_vector(self.cols, self.field)
            for i in range(rank):
                u[pivots[i]] = reduced.get(i, {}).get(c, zero)
            solutions.append(u)
        return solutions

    def member_of_image(self, v: Sequence[Any]) -> Optional[Vector]:
        return self.preimages([v])[0]

    def relative_rank(self, extra: "Matrix") -> int:
        """rank([self | extra]) - rank(self): the rank of extra modulo the image of self."""
        if extra.cols == 0:
            return 0
        return self.hstack(extra).rank() - self.rank()

    def quotient_dim(self, sub: "Matrix") -> int:
        """dim(im self + im sub) - dim(im sub)."""
        return sub.relative_rank(self)


def rank(m: Matrix) -> int:
    return m.rank()


def kernel_basis(m: Matrix) -> list[Vector]:
    return m.kernel_basis()


def member_of_image(m: Matrix, v: Sequence[Any]) -> Optional[Vector]:
    return m.member_of_image(v)


def same_span(u: Matrix, w: Matrix) -> bool:
    """Column spans of u and w coincide."""
    if u.rows != w.rows:
        raise DimensionMismatchError("subspaces live in different ambient spaces")
    ru, rw = u.rank(), w.rank()
    return ru == rw and u.hstack(w).rank() == ru


def intersection_dim(u: Matrix, w: Matrix) -> int:
    return u.rank() + w.rank() - u.hstack(w).rank()


def block_diagonal(blocks: Iterable[Matrix], field: FieldSpec) -> Matrix:
    entries: dict[int, dict[int, Any]] = {}
    r0 = c0 = 0
    for block in blocks:
        for i, row in block.entries().items():
            target = entries.setdefault(r0 + i, {})
            for j, x in row.items():
                target[c0 + j] = x
        r0 += block.rows
        c0 += block.cols
    return Matrix.from_entries(entries, (r0, c0), field)


class EchelonSpan:
    """
    Incrementally grown subspace kept in semi-echelon form on sparse vectors.

    Every stored row has a leading 1 at its pivot and no entries before it.
    """

    def __init__(self, field: FieldSpec):
        self.field = field
        self._rows: dict[int, dict[int, Any]] = {}
        self._pivots: list[int] = []

    def __len__(self) -> int:
        return len(self._pivots)

    def reduce(self, vec: Mapping[int, Any]) -> dict[int, Any]:
        zero = self.field.zero
        v = {j: x for j, x in vec.items() if x != zero}
        for p in self._pivots:
            c = v.get(p)
            if c is not None:
                add_scaled(v, self._rows[p], -c, zero)
        return v

    def contains(self, vec: Mapping[int, Any]) -> bool:
        return not self.reduce(vec)

    def add(self, vec: Mapping[int, Any]) -> bool:
        v = self.reduce(vec)
        if not v:
            return False
        p = min(v)
        inv = self.field.domain.quo(self.field.one, v[p])
        self._rows[p] = {j: x * inv for j, x in v.items()}
        insort(self._pivots, p)
        return True
