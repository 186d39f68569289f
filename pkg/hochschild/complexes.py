# Cochain complexes, cohomology with class representatives, Hochschild (co)homology
import logging
from collections.abc import Sequence
from dataclasses import dataclass, field as dataclass_field
from functools import cached_property
from typing import Any

from algebras.algebra import Algebra
from algebras.bimodule import Bimodule
from linalg.errors import DimensionMismatchError, VerificationError
from linalg.matrix import Matrix, Vector, add_scaled

from .cochains import WordBasis, coboundary_matrix

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class CochainComplex:
    """
    spaces[0..N+1] with differentials d_n: spaces[n] -> spaces[n+1] for n = 0..N.

    Cohomology is available in degrees 0..N.
    """

    spaces: tuple[int, ...]
    differentials: tuple[Matrix, ...]
    _ranks: dict[int, int] = dataclass_field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        if len(self.spaces) != len(self.differentials) + 1:
            raise DimensionMismatchError("a complex needs one more space than differentials")
        for n, d in enumerate(self.differentials):
            if d.shape != (self.spaces[n + 1], self.spaces[n]):
                raise DimensionMismatchError(f"d_{n} has shape {d.shape}")
        for n in range(len(self.differentials) - 1):
            if not (self.differentials[n + 1] @ self.differentials[n]).is_zero():
                raise VerificationError(f"d_{n + 1} d_{n} != 0")

    @property
    def max_degree(self) -> int:
        return len(self.differentials) - 1

    def d(self, n: int) -> Matrix:
        return self.differentials[n]

    def rank(self, n: int) -> int:
        """Rank of d_n; zero for n < 0."""
        if n < 0:
            return 0
        if n not in self._ranks:
            self._ranks[n] = self.differentials[n].rank()
        return self._ranks[n]

    def dim(self, n: int) -> int:
        if not 0 <= n <= self.max_degree:
            raise DimensionMismatchError(f"cohomology in degree {n} needs d_{n}")
        return self.spaces[n] - self.rank(n) - self.rank(n - 1)

    def dims(self) -> list[int]:
        return [self.dim(n) for n in range(self.max_degree + 1)]

    def euler_defect(self) -> int:
        """sum (-1)^n (dim C^n - dim H^n) over n <= N; equals (-1)^N rank d_N."""
        return sum((-1) ** n * (self.spaces[n] - self.dim(n)) for n in range(self.max_degree + 1))

    def coboundaries(self, n: int) -> Matrix:
        """Columns spanning the image of d_{n-1} in C^n."""
        if n == 0:
            return Matrix.zeros(self.spaces[0], 0, self.differentials[0].field)
        return self.differentials[n - 1]

    def cocycles(self, n: int) -> Matrix:
        return self.differentials[n].kernel_matrix()

    def cohomology(self, n: int) -> "Cohomology":
        return Cohomology(self, n)


class Cohomology:
    """
    H^n of a complex with chosen representatives.

    Representatives are the cocycle basis vectors that are pivots after the
    coboundaries in [B | Z]; coordinates of a cocycle are read off its
    preimage under [B | R].
    """

    def __init__(self, complex_: CochainComplex, degree: int):
        self.complex = complex_
        self.degree = degree
        self.boundaries = complex_.coboundaries(degree)
        self.cycles = complex_.cocycles(degree)
        nb = self.boundaries.cols
        _, pivots = self.boundaries.hstack(self.cycles).rref()
        chosen = [p - nb for p in pivots if p >= nb]
        self.representatives = self.cycles.submatrix(range(self.cycles.rows), chosen)
        self._solver = self.boundaries.hstack(self.representatives)

    @property
    def dim(self) -> int:
        return self.representatives.cols

    def coordinates(self, cocycles: Sequence[Vector]) -> list[Vector]:
        """Coordinates of cocycles in the representative basis; raises if one is not a cocycle."""
        nb = self.boundaries.cols
        solutions = self._solver.preimages(cocycles)
        out = []
        for v, u in zip(cocycles, solutions):
            if u is None:
                raise VerificationError(f"vector is not a cocycle in degree {self.degree}")
            out.append(u[nb:])
        return out

    def is_coboundary(self, v: Vector) -> bool:
        if self.boundaries.cols == 0:
            return all(x == self.cycles.field.zero for x in v)
        return self.boundaries.member_of_image(v) is not None

    def equal(self, u: Vector, w: Vector) -> bool:
        return self.is_coboundary([x - y for x, y in zip(u, w)])


def hochschild_complex(algebra: Algebra, x: Bimodule, max_degree: int) -> CochainComplex:
    """C^n(Λ, X) = Hom_k(Λ^{(x)n}, X) for n = 0..N+1 with the differentials d_0..d_N."""
    if max_degree < 0:
        raise DimensionMismatchError("max degree must be non-negative")
    bases = [WordBasis.all(algebra.dim, n) for n in range(max_degree + 2)]
    differentials = tuple(coboundary_matrix(algebra, x, bases[n], bases[n + 1]) for n in range(max_degree + 1))
    spaces = tuple(len(b) * x.dim for b in bases)
    logger.info(f"🧮 C*({algebra.name}, {x.name}) up to degree {max_degree}: {list(spaces)}")
    return CochainComplex(spaces, differentials)


def cohomology_dims(complex_: CochainComplex) -> list[int]:
    return complex_.dims()


@dataclass(frozen=True, eq=False)
class ChainComplex:
    """spaces[0..N+1] with boundaries b_n: spaces[n] -> spaces[n-1] for n = 1..N+1."""

    spaces: tuple[int, ...]
    boundaries: tuple[Matrix, ...]

    def __post_init__(self):
        if len(self.boundaries) != len(self.spaces) - 1:
            raise DimensionMismatchError("a chain complex needs one boundary per positive degree")
        for n in range(1, len(self.boundaries)):
            if not (self.boundaries[n - 1] @ self.boundaries[n]).is_zero():
                raise VerificationError(f"b_{n} b_{n + 1} != 0")

    @property
    def max_degree(self) -> int:
        return len(self.spaces) - 2

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        return (0,) + tuple(b.rank() for b in self.boundaries)

    def dims(self) -> list[int]:
        r = self.ranks
        return [self.spaces[n] - r[n] - r[n + 1] for n in range(self.max_degree + 1)]


def hochschild_chain_complex(algebra: Algebra, n: Bimodule, max_degree: int) -> ChainComplex:
    """
    C_m(A, N) = N (x) A^{(x)m} with the Hochschild boundary.

    b(x (x) a_1..a_m) = x a_1 (x) a_2.. + sum_i (-1)^i x (x) ..a_i a_{i+1}.. + (-1)^m a_m x (x) a_1..a_{m-1};
    the chain x (x) w sits at position(w)*dim(N) + coordinate of x.
    """
    if n.left_algebra is not algebra or n.right_algebra is not algebra:
        raise DimensionMismatchError(f"{n.name} is not a bimodule over {algebra.name}")
    field = algebra.field
    zero, one = field.zero, field.one
    dn = n.dim
    bases = [WordBasis.all(algebra.dim, m) for m in range(max_degree + 2)]
    boundaries = []
    for m in range(1, max_degree + 2):
        src, tgt = bases[m], bases[m - 1]
        last = one if m % 2 == 0 else -one
        cols: list[dict[int, Any]] = []
        for w in src.words:
            for c in range(dn):
                col: dict[int, Any] = {}
                rest = tgt.index[w[1:]]
                for c2, y in n.right[c][w[0]].items():
                    add_scaled(col, {rest * dn + c2: one}, y, zero)
                for i in range(1, m):
                    sign = one if i % 2 == 0 else -one
                    for l, y in algebra.table[w[i - 1]][w[i]].items():
                        u = tgt.index[w[: i - 1] + (l,) + w[i + 1 :]]
                        add_scaled(col, {u * dn + c: one}, sign * y, zero)
                head = tgt.index[w[:-1]]
                for c2, y in n.left[w[-1]][c].items():
                    add_scaled(col, {head * dn + c2: one}, last * y, zero)
                cols.append(col)
        boundaries.append(Matrix.from_sparse_columns(cols, len(tgt) * dn, field))
    spaces = tuple(len(b) * dn for b in bases)
    return ChainComplex(spaces, tuple(boundaries))


def homology_dims(algebra: Algebra, n: Bimodule, max_degree: int) -> list[int]:
    dims = hochschild_chain_complex(algebra, n, max_degree).dims()
    logger.info(f"📏 H_*({algebra.name}, {n.name}) = {dims}")
    return dims
