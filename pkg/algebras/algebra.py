# Finite-dimensional associative unital algebras given by structure constants
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Any

from linalg.errors import AxiomError, DimensionMismatchError
from linalg.field import FieldSpec
from linalg.matrix import Matrix, SparseVector, Vector, add_scaled, dense_to_sparse, zero_vector

logger = logging.getLogger(__name__)

# table[i][j] is the sparse coefficient vector of b_i * b_j
Table = tuple[tuple[SparseVector, ...], ...]


@dataclass(frozen=True, eq=False)
class Algebra:
    name: str
    field: FieldSpec
    labels: tuple[str, ...]
    unit: tuple
    table: Table

    def __post_init__(self):
        n = len(self.labels)
        if len(self.unit) != n or len(self.table) != n:
            raise DimensionMismatchError(
                f"{self.name}: {n} labels, unit of length {len(self.unit)}, table of {len(self.table)} rows"
            )
        if any(len(row) != n for row in self.table):
            raise DimensionMismatchError(f"{self.name}: structure table is not square")
        self._check_unit()
        self._check_associative()

    @classmethod
    def from_dense(
        cls,
        name: str,
        field: FieldSpec,
        labels: Sequence[str],
        unit: Sequence[Any],
        table: Sequence[Sequence[Sequence[Any]]],
    ) -> "Algebra":
        """Build from nested lists, table[i][j][l] = coefficient of b_l in b_i b_j."""
        n = len(labels)
        for row in table:
            for vec in row:
                if len(vec) != n:
                    raise DimensionMismatchError(f"{name}: product vector of length {len(vec)}")
        sparse = tuple(
            tuple(dense_to_sparse([field(x) for x in vec], field) for vec in row)
            for row in table
        )
        return cls(name, field, tuple(labels), tuple(field(x) for x in unit), sparse)

    @property
    def dim(self) -> int:
        return len(self.labels)

    def product(self, i: int, j: int) -> SparseVector:
        return self.table[i][j]

    def basis_vector(self, i: int) -> Vector:
        v = zero_vector(self.dim, self.field)
        v[i] = self.field.one
        return v

    def unit_vector(self) -> Vector:
        return list(self.unit)

    def mul(self, x: Sequence, y: Sequence) -> Vector:
        zero = self.field.zero
        acc: dict[int, Any] = {}
        for i, xi in enumerate(x):
            if xi == zero:
                continue
            for j, yj in enumerate(y):
                if yj == zero:
                    continue
                add_scaled(acc, self.table[i][j], xi * yj, zero)
        out = zero_vector(self.dim, self.field)
        for l, c in acc.items():
            out[l] = c
        return out

    def left_matrix(self, x: Sequence) -> Matrix:
        """Matrix of b -> x b."""
        return Matrix.from_columns(
            [self.mul(x, self.basis_vector(j)) for j in range(self.dim)], self.dim, self.field
        )

    def right_matrix(self, x: Sequence) -> Matrix:
        """Matrix of b -> b x."""
        return Matrix.from_columns(
            [self.mul(self.basis_vector(j), x) for j in range(self.dim)], self.dim, self.field
        )

    def commutator_matrix(self) -> Matrix:
        """Stacked map a -> (a b_j - b_j a)_j; its kernel is the center."""
        n = self.dim
        zero = self.field.zero
        entries: dict[int, dict[int, Any]] = {}
        for j in range(n):
            for i in range(n):
                diff: dict[int, Any] = {}
                add_scaled(diff, self.table[i][j], self.field.one, zero)
                add_scaled(diff, self.table[j][i], -self.field.one, zero)
                for l, c in diff.items():
                    entries.setdefault(j * n + l, {})[i] = c
        return Matrix.from_entries(entries, (n * n, n), self.field)

    def is_commutative(self) -> bool:
        return self.commutator_matrix().is_zero()

    def structure_matrix(self) -> Matrix:
        """All structure constants as a dim^2 x dim matrix, row i*dim+j holding b_i b_j."""
        n = self.dim
        entries = {
            i * n + j: dict(self.table[i][j]) for i in range(n) for j in range(n) if self.table[i][j]
        }
        return Matrix.from_entries(entries, (n * n, n), self.field)

    def _check_unit(self) -> None:
        zero, one = self.field.zero, self.field.one
        for b in range(self.dim):
            left: dict[int, Any] = {}
            right: dict[int, Any] = {}
            for i, u in enumerate(self.unit):
                if u != zero:
                    add_scaled(left, self.table[i][b], u, zero)
                    add_scaled(right, self.table[b][i], u, zero)
            if left != {b: one} or right != {b: one}:
                raise AxiomError(f"{self.name}: unit does not act as identity on {self.labels[b]}")

    def _check_associative(self) -> None:
        zero = self.field.zero
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.table[i][j]
                for l in range(n):
                    lhs: dict[int, Any] = {}
                    for s, c in ij.items():
                        add_scaled(lhs, self.table[s][l], c, zero)
                    rhs: dict[int, Any] = {}
                    for s, c in self.table[j][l].items():
                        add_scaled(rhs, self.table[i][s], c, zero)
                    if lhs != rhs:
                        raise AxiomError(
                            f"{self.name}: ({self.labels[i]}{self.labels[j]}){self.labels[l]}"
                            f" != {self.labels[i]}({self.labels[j]}{self.labels[l]})"
                        )


def ground_field(field: FieldSpec, name: str = "k") -> Algebra:
    return Algebra(name, field, ("1",), (field.one,), (({0: field.one},),))


def truncated_polynomial(field: FieldSpec, n: int, name: str | None = None) -> Algebra:
    """k[x]/(x^n) on the basis 1, x, ..., x^(n-1)."""
    labels = tuple("1" if i == 0 else ("x" if i == 1 else f"x^{i}") for i in range(n))
    table = tuple(
        tuple(({i + j: field.one} if i + j < n else {}) for j in range(n)) for i in range(n)
    )
    unit = tuple(field.one if i == 0 else field.zero for i in range(n))
    return Algebra(name or f"k[x]/(x^{n})", field, labels, unit, table)


def matrix_algebra(field: FieldSpec, n: int, name: str | None = None) -> Algebra:
    """Full n x n matrices on the matrix units e_ij, index i*n+j."""
    labels = tuple(f"e{i + 1}{j + 1}" for i in range(n) for j in range(n))
    table = tuple(
        tuple(
            ({i * n + l: field.one} if j == k else {})
            for k in range(n)
            for l in range(n)
        )
        for i in range(n)
        for j in range(n)
    )
    unit = tuple(field.one if i == j else field.zero for i in range(n) for j in range(n))
    return Algebra(name or f"M{n}", field, labels, unit, table)


def product_algebra(a: Algebra, b: Algebra, name: str | None = None) -> Algebra:
    """A x B on the basis of A followed by the basis of B."""
    _check_same_field(a, b)
    da = a.dim
    rows = []
    for i in range(a.dim + b.dim):
        row = []
        for j in range(a.dim + b.dim):
            if i < da and j < da:
                row.append(dict(a.table[i][j]))
            elif i >= da and j >= da:
                row.append({da + l: c for l, c in b.table[i - da][j - da].items()})
            else:
                row.append({})
        rows.append(tuple(row))
    labels = tuple(f"({x},0)" for x in a.labels) + tuple(f"(0,{x})" for x in b.labels)
    return Algebra(name or f"{a.name}x{b.name}", a.field, labels, a.unit + b.unit, tuple(rows))


def tensor_algebra(a: Algebra, b: Algebra, name: str | None = None, opposite_right: bool = False) -> Algebra:
    """
    A (x) B with basis index i*dim(B)+j and Kronecker structure constants.

    With opposite_right the second factor multiplies in reverse, giving A (x) B^op.
    """
    _check_same_field(a, b)
    zero = a.field.zero
    na, nb = a.dim, b.dim
    rows = []
    for i in range(na):
        for j in range(nb):
            row = []
            for k in range(na):
                for l in range(nb):
                    right = b.table[l][j] if opposite_right else b.table[j][l]
                    prod: dict[int, Any] = {}
                    for s, x in a.table[i][k].items():
                        for t, y in right.items():
                            c = x * y
                            if c != zero:
                                prod[s * nb + t] = c
                    row.append(prod)
            rows.append(tuple(row))
    labels = tuple(f"{x}*{y}" for x in a.labels for y in b.labels)
    unit = tuple(x * y for x in a.unit for y in b.unit)
    suffix = "^op" if opposite_right else ""
    return Algebra(name or f"{a.name}(x){b.name}{suffix}", a.field, labels, unit, tuple(rows))


def opposite(a: Algebra) -> Algebra:
    table = tuple(tuple(dict(a.table[j][i]) for j in range(a.dim)) for i in range(a.dim))
    return Algebra(f"{a.name}^op", a.field, a.labels, a.unit, table)


def center(a: Algebra) -> Matrix:
    """Basis of the center as the columns of a dim x r matrix."""
    return a.commutator_matrix().kernel_matrix()


def is_algebra_map(source: Algebra, target: Algebra, f: Matrix) -> bool:
    """f (target.dim x source.dim) is unital and multiplicative on basis pairs."""
    if f.shape != (target.dim, source.dim):
        raise DimensionMismatchError(f"map of shape {f.shape} between {source.name} and {target.name}")
    if f.apply(source.unit_vector()) != target.unit_vector():
        return False
    images = f.columns()
    for i in range(source.dim):
        for j in range(source.dim):
            lhs = f.apply(_dense(source.table[i][j], source))
            if lhs != target.mul(images[i], images[j]):
                return False
    return True


def _dense(v: SparseVector, a: Algebra) -> Vector:
    out = zero_vector(a.dim, a.field)
    for i, c in v.items():
        out[i] = c
    return out


def _check_same_field(a: Algebra, b: Algebra) -> None:
    if a.field != b.field:
        raise DimensionMismatchError(f"{a.name} and {b.name} live over different fields")
