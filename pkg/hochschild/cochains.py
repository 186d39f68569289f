# Tensor word bases, cochain vectors and the Hochschild coboundary on them
import logging
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field as dataclass_field
from itertools import product
from typing import Any

from algebras.algebra import Algebra
from algebras.bimodule import Bimodule
from algebras.split import SplitAlgebra
from linalg.errors import DimensionMismatchError
from linalg.matrix import Matrix, SparseVector, Vector, add_scaled, zero_vector

logger = logging.getLogger(__name__)

Word = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class WordBasis:
    """
    An ordered set of tensor words of a fixed length over an algebra basis.

    A cochain on the basis with values in X is a vector whose entry
    position(w)*dim(X) + c is the c-th coordinate of its value on w.
    """

    length: int
    words: tuple[Word, ...]
    index: dict[Word, int] = dataclass_field(init=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "index", {w: k for k, w in enumerate(self.words)})

    @classmethod
    def all(cls, dim: int, length: int) -> "WordBasis":
        """Every word in lexicographic order."""
        return cls(length, tuple(product(range(dim), repeat=length)))

    @classmethod
    def spot(cls, dim_a: int, dim_total: int, p: int, q: int) -> "WordBasis":
        """
        Words with exactly p letters from the ideal (indices >= dim_a).

        Ordered by their mask of ideal positions, then lexicographically.
        """
        words: list[Word] = []
        a_letters = range(dim_a)
        m_letters = range(dim_a, dim_total)
        for mask in product((False, True), repeat=p + q):
            if sum(mask) != p:
                continue
            words.extend(product(*(m_letters if bit else a_letters for bit in mask)))
        return cls(p + q, tuple(words))

    @classmethod
    def of_split(cls, lam: SplitAlgebra, p: int, q: int) -> "WordBasis":
        return cls.spot(lam.base.dim, lam.dim, p, q)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, word: Word) -> bool:
        return word in self.index

    def position(self, word: Word) -> int:
        return self.index[word]


@dataclass(frozen=True, eq=False)
class Cochain:
    """A cochain on a word basis with values in a bimodule, stored as one sparse value per word."""

    basis: WordBasis
    module: Bimodule
    values: dict[int, SparseVector]

    @classmethod
    def from_vector(cls, basis: WordBasis, module: Bimodule, vector: Sequence | Mapping[int, Any]) -> "Cochain":
        d = module.dim
        expected = len(basis) * d
        items: Iterable = vector.items() if isinstance(vector, Mapping) else enumerate(vector)
        if not isinstance(vector, Mapping) and len(vector) != expected:
            raise DimensionMismatchError(f"cochain vector of length {len(vector)}, expected {expected}")
        zero = module.field.zero
        values: dict[int, dict[int, Any]] = {}
        for k, x in items:
            if x != zero:
                w, c = divmod(k, d)
                values.setdefault(w, {})[c] = x
        return cls(basis, module, values)

    def value(self, word: Word) -> SparseVector:
        k = self.basis.index.get(word)
        if k is None:
            return {}
        return self.values.get(k, {})

    def to_vector(self) -> Vector:
        d = self.module.dim
        out = zero_vector(len(self.basis) * d, self.module.field)
        for w, v in self.values.items():
            for c, x in v.items():
                out[w * d + c] = x
        return out

    def to_sparse(self) -> SparseVector:
        d = self.module.dim
        return {w * d + c: x for w, v in self.values.items() for c, x in v.items()}

    def is_zero(self) -> bool:
        return not any(self.values.values())


def coboundary_matrix(algebra: Algebra, x: Bimodule, source: WordBasis, target: WordBasis) -> Matrix:
    """
    The Hochschild coboundary C(source, X) -> C(target, X), restricted to the given words.

    (df)(w_1,...,w_{n+1}) = w_1 f(w_2,...) + sum_i (-1)^i f(...,w_i w_{i+1},...)
    + (-1)^{n+1} f(w_1,...,w_n) w_{n+1}; terms whose argument is not a source word are dropped.
    """
    if target.length != source.length + 1:
        raise DimensionMismatchError(f"coboundary from length {source.length} to {target.length}")
    if x.left_algebra is not algebra or x.right_algebra is not algebra:
        raise DimensionMismatchError(f"{x.name} is not a bimodule over {algebra.name}")
    field = algebra.field
    zero, one = field.zero, field.one
    dx = x.dim
    n = source.length
    last_sign = one if (n + 1) % 2 == 0 else -one
    src = source.index
    entries: dict[int, dict[int, Any]] = {}
    for t, w in enumerate(target.words):
        rows = [dict() for _ in range(dx)]
        u = src.get(w[1:])
        if u is not None:
            for c2 in range(dx):
                for c, y in x.left[w[0]][c2].items():
                    add_scaled(rows[c], {u * dx + c2: one}, y, zero)
        for i in range(1, n + 1):
            sign = one if i % 2 == 0 else -one
            for l, y in algebra.table[w[i - 1]][w[i]].items():
                u = src.get(w[: i - 1] + (l,) + w[i + 1 :])
                if u is not None:
                    for c in range(dx):
                        add_scaled(rows[c], {u * dx + c: one}, sign * y, zero)
        u = src.get(w[:-1])
        if u is not None:
            for c2 in range(dx):
                for c, y in x.right[c2][w[-1]].items():
                    add_scaled(rows[c], {u * dx + c2: one}, last_sign * y, zero)
        for c, row in enumerate(rows):
            if row:
                entries[t * dx + c] = row
    matrix = Matrix.from_entries(entries, (len(target) * dx, len(source) * dx), field)
    logger.debug(f"📐 coboundary {source.length}->{target.length} on {x.name}: {matrix.rows}x{matrix.cols}")
    return matrix


def apply_coboundary(algebra: Algebra, f: Cochain, target: WordBasis) -> Cochain:
    d = coboundary_matrix(algebra, f.module, f.basis, target)
    return Cochain.from_vector(target, f.module, d.apply(f.to_vector()))


def push_values(f: Cochain, module: Bimodule, linear_map: Matrix) -> Cochain:
    """Compose a cochain with a linear map between coefficient spaces."""
    if linear_map.shape != (module.dim, f.module.dim):
        raise DimensionMismatchError(f"map of shape {linear_map.shape} from {f.module.name} to {module.name}")
    zero = module.field.zero
    columns: list[dict[int, Any]] = [dict() for _ in range(linear_map.cols)]
    for i, row in linear_map.entries().items():
        for j, y in row.items():
            columns[j][i] = y
    values = {}
    for w, v in f.values.items():
        out: dict[int, Any] = {}
        for c, y in v.items():
            add_scaled(out, columns[c], y, zero)
        if out:
            values[w] = out
    return Cochain(f.basis, module, values)


def random_cochain(basis: WordBasis, module: Bimodule, rng, low: int = -3, high: int = 4) -> Cochain:
    """A cochain with integer entries drawn uniformly from [low, high) by a numpy Generator."""
    draws = rng.integers(low, high, size=len(basis) * module.dim)
    return Cochain.from_vector(basis, module, [module.field(int(x)) for x in draws])
