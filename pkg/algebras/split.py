# Split algebras A ⊕ M, their named specializations and the sequence 0 -> M -> Λ -> Λ/M -> 0
import logging
from dataclasses import dataclass, field as dataclass_field
from typing import Any

from linalg.errors import AxiomError, DimensionMismatchError
from linalg.matrix import Matrix, SparseVector, Vector, add_scaled

from .algebra import Algebra, is_algebra_map, product_algebra, tensor_algebra, truncated_polynomial
from .bimodule import Bimodule, dual, hom_space, regular, restrict

logger = logging.getLogger(__name__)

# product[m][n]: m_m . m_n as a sparse vector of M
Product = tuple[tuple[SparseVector, ...], ...]


def zero_product(dim: int) -> Product:
    return tuple(tuple({} for _ in range(dim)) for _ in range(dim))


@dataclass(frozen=True, eq=False)
class SplitAlgebra:
    """
    Λ = A ⊕ M with A a subalgebra and M a two-sided ideal.

    The basis of Λ is the basis of A followed by the basis of M.
    """

    name: str
    base: Algebra
    ideal: Bimodule
    product: Product
    total: Algebra = dataclass_field(init=False)

    def __post_init__(self):
        a, m = self.base, self.ideal
        if m.left_algebra is not a or m.right_algebra is not a:
            raise DimensionMismatchError(f"{m.name} is not a bimodule over {a.name}")
        if len(self.product) != m.dim or any(len(r) != m.dim for r in self.product):
            raise DimensionMismatchError(f"{self.name}: product table has the wrong shape")
        self._check_product()
        object.__setattr__(self, "total", self._assemble())

    @property
    def field(self):
        return self.base.field

    @property
    def dim(self) -> int:
        return self.base.dim + self.ideal.dim

    @property
    def square_zero(self) -> bool:
        return all(not v for row in self.product for v in row)

    def in_ideal(self, index: int) -> bool:
        return index >= self.base.dim

    def multiply(self, u: SparseVector, w: SparseVector) -> SparseVector:
        zero = self.field.zero
        out: dict[int, Any] = {}
        for s, x in u.items():
            for t, y in w.items():
                add_scaled(out, self.product[s][t], x * y, zero)
        return out

    def _check_product(self) -> None:
        a, m = self.base, self.ideal
        for i in range(m.dim):
            for j in range(m.dim):
                mn = self.product[i][j]
                for b in range(a.dim):
                    if self.multiply(m.right[i][b], {j: self.field.one}) != self.multiply(
                        {i: self.field.one}, m.left[b][j]
                    ):
                        raise AxiomError(f"{self.name}: product is not balanced over {a.name}")
                    if m.act_left(b, mn) != self.multiply(m.left[b][i], {j: self.field.one}):
                        raise AxiomError(f"{self.name}: a(mn) != (am)n")
                    if m.act_right(mn, b) != self.multiply({i: self.field.one}, m.right[j][b]):
                        raise AxiomError(f"{self.name}: (mn)a != m(na)")
                for k in range(m.dim):
                    lhs = self.multiply(mn, {k: self.field.one})
                    rhs = self.multiply({i: self.field.one}, self.product[j][k])
                    if lhs != rhs:
                        raise AxiomError(f"{self.name}: product on {m.name} is not associative")

    def _assemble(self) -> Algebra:
        a, m = self.base, self.ideal
        da = a.dim

        def shift(v: SparseVector) -> SparseVector:
            return {da + s: x for s, x in v.items()}

        rows = []
        for i in range(self.dim):
            row = []
            for j in range(self.dim):
                if i < da and j < da:
                    row.append(dict(a.table[i][j]))
                elif i < da:
                    row.append(shift(m.left[i][j - da]))
                elif j < da:
                    row.append(shift(m.right[i - da][j]))
                else:
                    row.append(shift(self.product[i - da][j - da]))
            rows.append(tuple(row))
        labels = a.labels + tuple(f"{m.name}_{k}" for k in range(m.dim))
        unit = a.unit + (self.field.zero,) * m.dim
        return Algebra(self.name, self.field, labels, unit, tuple(rows))


def build_split(base: Algebra, ideal: Bimodule, product: Product | None = None, name: str | None = None) -> SplitAlgebra:
    lam = SplitAlgebra(
        name or f"{base.name}+{ideal.name}", base, ideal, product if product is not None else zero_product(ideal.dim)
    )
    logger.info(f"🧱 {lam.name}: dim A = {base.dim}, dim M = {ideal.dim}, M^2 = 0: {lam.square_zero}")
    return lam


def trivial_extension(a: Algebra, name: str | None = None) -> SplitAlgebra:
    return build_split(a, dual(regular(a), name=f"D{a.name}"), name=name or f"T({a.name})")


def dual_numbers_extension(a: Algebra, name: str | None = None) -> SplitAlgebra:
    return build_split(a, regular(a), name=name or f"{a.name}[e]")


def dual_numbers_oracle(a: Algebra) -> tuple[Algebra, Matrix]:
    """A (x) k[e] together with the basis permutation from A[e] onto it."""
    k_eps = truncated_polynomial(a.field, 2, "k[e]")
    target = tensor_algebra(a, k_eps)
    n = a.dim
    entries = {2 * i: {i: a.field.one} for i in range(n)}
    entries.update({2 * i + 1: {n + i: a.field.one} for i in range(n)})
    return target, Matrix.from_entries(entries, (2 * n, 2 * n), a.field)


def trivially_extend(m: Bimodule, a: Algebra, b: Algebra, base: Algebra) -> Bimodule:
    """A (B,A)-bimodule as an (A×B)-bimodule via (a,b)m = bm and m(a,b) = ma."""
    da = a.dim
    empty = tuple({} for _ in range(m.dim))
    left = tuple(empty if i < da else m.left[i - da] for i in range(base.dim))
    right = tuple(
        tuple(m.right[k][j] if j < da else {} for j in range(base.dim)) for k in range(m.dim)
    )
    return Bimodule(m.name, base, base, m.dim, left, right)


@dataclass(frozen=True, eq=False)
class TriangularAlgebra:
    """The lower triangular algebra [[A, 0], [M, B]] as the split algebra (A×B) ⊕ M."""

    split: SplitAlgebra
    left_factor: Algebra
    right_factor: Algebra
    module: Bimodule
    e: Vector
    f: Vector


def triangular_matrix(a: Algebra, b: Algebra, m: Bimodule, name: str | None = None) -> TriangularAlgebra:
    if m.left_algebra is not b or m.right_algebra is not a:
        raise DimensionMismatchError(
            f"{m.name} must be a ({b.name},{a.name})-bimodule for the triangular algebra"
        )
    base = product_algebra(a, b)
    ideal = trivially_extend(m, a, b, base)
    lam = build_split(base, ideal, name=name or f"[{a.name},{m.name},{b.name}]")
    one, zero = a.field.one, a.field.zero
    e = [one if i < a.dim else zero for i in range(base.dim)]
    f = [zero if i < a.dim else one for i in range(base.dim)]
    return TriangularAlgebra(lam, a, b, m, e, f)


def one_point_extension(a: Algebra, m: Bimodule, name: str | None = None) -> TriangularAlgebra:
    """A[M] for a right A-module M given as a (k,A)-bimodule."""
    if m.left_algebra.dim != 1:
        raise DimensionMismatchError(f"{m.name} is not a right module over {a.name}")
    return triangular_matrix(a, m.left_algebra, m, name=name or f"{a.name}[{m.name}]")


@dataclass(frozen=True, eq=False)
class BimoduleSequence:
    """0 -> M -> Λ -> Λ/M -> 0 as Λ-bimodules, with inclusion and projection matrices."""

    split: SplitAlgebra
    sub: Bimodule
    middle: Bimodule
    quotient: Bimodule
    inclusion: Matrix
    projection: Matrix


def extend_by_zero(lam: SplitAlgebra, x: Bimodule, name: str | None = None) -> Bimodule:
    """An A-bimodule as a Λ-bimodule on which M acts as zero."""
    a = lam.base
    if x.left_algebra is not a or x.right_algebra is not a:
        raise DimensionMismatchError(f"{x.name} is not a bimodule over {a.name}")
    empty = tuple({} for _ in range(x.dim))
    left = tuple(x.left[i] if i < a.dim else empty for i in range(lam.dim))
    right = tuple(tuple(x.right[k][j] if j < a.dim else {} for j in range(lam.dim)) for k in range(x.dim))
    return Bimodule(name or x.name, lam.total, lam.total, x.dim, left, right)


def ideal_bimodule(lam: SplitAlgebra) -> Bimodule:
    """M as a Λ-bimodule: A acts through M's actions and M through the product."""
    a, m = lam.base, lam.ideal
    left = tuple(m.left[i] if i < a.dim else lam.product[i - a.dim] for i in range(lam.dim))
    right = tuple(
        tuple(m.right[k][j] if j < a.dim else lam.product[k][j - a.dim] for j in range(lam.dim))
        for k in range(m.dim)
    )
    return Bimodule(m.name, lam.total, lam.total, m.dim, left, right)


def restrict_to_base(lam: SplitAlgebra, x: Bimodule) -> Bimodule:
    idx = range(lam.base.dim)
    return restrict(x, lam.base, idx, lam.base, idx, name=x.name)


def ses_bimodules(lam: SplitAlgebra) -> BimoduleSequence:
    a, m = lam.base, lam.ideal
    field = lam.field
    sub = ideal_bimodule(lam)
    quotient = extend_by_zero(lam, regular(a), name=f"{lam.name}/{m.name}")
    middle = regular(lam.total)
    inclusion = Matrix.from_entries({a.dim + k: {k: field.one} for k in range(m.dim)}, (lam.dim, m.dim), field)
    projection = Matrix.from_entries({i: {i: field.one} for i in range(a.dim)}, (a.dim, lam.dim), field)
    for i in range(a.dim, lam.dim):
        if not quotient.left_matrix(i).is_zero() or not quotient.right_matrix(i).is_zero():
            raise AxiomError(f"{m.name} acts nontrivially on {quotient.name}")
    return BimoduleSequence(lam, sub, middle, quotient, inclusion, projection)


def zeroed(lam: SplitAlgebra) -> SplitAlgebra:
    """The same A and M with the product on M set to zero."""
    return SplitAlgebra(f"{lam.name}|0", lam.base, lam.ideal, zero_product(lam.ideal.dim))


def symmetric_isomorphism(a: Algebra) -> Matrix | None:
    """
    A bimodule isomorphism A -> DA when one exists among a fixed candidate list.

    Candidates are the basis maps of Hom_{A-A}(A, DA) followed by sums of pairs.
    """
    maps = hom_space(regular(a), dual(regular(a)))
    candidates: list[Matrix] = list(maps)
    candidates += [maps[i] + maps[j] for i in range(len(maps)) for j in range(i + 1, len(maps))]
    if maps:
        total = maps[0]
        for extra in maps[1:]:
            total = total + extra
        candidates.append(total)
    for phi in candidates:
        if phi.rank() == a.dim:
            return phi
    return None


def trivial_extension_isomorphism(a: Algebra) -> Matrix | None:
    """An algebra isomorphism A[e] -> TA built from a symmetric structure on A, if one is found."""
    phi = symmetric_isomorphism(a)
    if phi is None:
        return None
    n = a.dim
    field = a.field
    entries = {i: {i: field.one} for i in range(n)}
    for r, row in phi.entries().items():
        entries[n + r] = {n + c: x for c, x in row.items()}
    iso = Matrix.from_entries(entries, (2 * n, 2 * n), field)
    source, target = dual_numbers_extension(a).total, trivial_extension(a).total
    if not is_algebra_map(source, target, iso):
        raise AxiomError(f"{a.name}: bimodule isomorphism A -> DA is not multiplicative on A[e]")
    return iso
