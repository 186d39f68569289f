# Bimodules over finite-dimensional algebras and their calculus
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from typing import Any

from linalg.errors import AxiomError, DimensionMismatchError
from linalg.matrix import Matrix, SparseVector, Vector, add_scaled, zero_vector

from .algebra import Algebra, ground_field, is_algebra_map

logger = logging.getLogger(__name__)

# left[i][m]: c_i . m_m      right[m][j]: m_m . a_j
Action = tuple[tuple[SparseVector, ...], ...]


@dataclass(frozen=True, eq=False)
class Bimodule:
    name: str
    left_algebra: Algebra
    right_algebra: Algebra
    dim: int
    left: Action
    right: Action

    def __post_init__(self):
        if self.left_algebra.field != self.right_algebra.field:
            raise DimensionMismatchError(f"{self.name}: algebras over different fields")
        if len(self.left) != self.left_algebra.dim or any(len(r) != self.dim for r in self.left):
            raise DimensionMismatchError(f"{self.name}: left action has the wrong shape")
        if len(self.right) != self.dim or any(len(r) != self.right_algebra.dim for r in self.right):
            raise DimensionMismatchError(f"{self.name}: right action has the wrong shape")
        self._check_axioms()

    @property
    def field(self):
        return self.left_algebra.field

    def act_left(self, i: int, v: SparseVector) -> SparseVector:
        """c_i . v for a sparse module vector v."""
        zero = self.field.zero
        out: dict[int, Any] = {}
        for m, x in v.items():
            add_scaled(out, self.left[i][m], x, zero)
        return out

    def act_right(self, v: SparseVector, j: int) -> SparseVector:
        zero = self.field.zero
        out: dict[int, Any] = {}
        for m, x in v.items():
            add_scaled(out, self.right[m][j], x, zero)
        return out

    def act_left_element(self, c: Sequence, v: SparseVector) -> SparseVector:
        zero = self.field.zero
        out: dict[int, Any] = {}
        for i, ci in enumerate(c):
            if ci != zero:
                add_scaled(out, self.act_left(i, v), ci, zero)
        return out

    def act_right_element(self, v: SparseVector, a: Sequence) -> SparseVector:
        zero = self.field.zero
        out: dict[int, Any] = {}
        for j, aj in enumerate(a):
            if aj != zero:
                add_scaled(out, self.act_right(v, j), aj, zero)
        return out

    def left_matrix(self, i: int) -> Matrix:
        return Matrix.from_sparse_columns(self.left[i], self.dim, self.field)

    def right_matrix(self, j: int) -> Matrix:
        return Matrix.from_sparse_columns([self.right[m][j] for m in range(self.dim)], self.dim, self.field)

    def _check_axioms(self) -> None:
        zero, one = self.field.zero, self.field.one
        C, A = self.left_algebra, self.right_algebra
        for m in range(self.dim):
            if self.act_left_element(C.unit, {m: one}) != {m: one}:
                raise AxiomError(f"{self.name}: left unit does not act as identity")
            if self.act_right_element({m: one}, A.unit) != {m: one}:
                raise AxiomError(f"{self.name}: right unit does not act as identity")
        for m in range(self.dim):
            for i in range(C.dim):
                cm = self.left[i][m]
                for i2 in range(C.dim):
                    lhs: dict[int, Any] = {}
                    for s, c in C.table[i2][i].items():
                        add_scaled(lhs, self.left[s][m], c, zero)
                    if lhs != self.act_left(i2, cm):
                        raise AxiomError(f"{self.name}: (cc')m != c(c'm)")
                for j in range(A.dim):
                    if self.act_right(cm, j) != self.act_left(i, self.right[m][j]):
                        raise AxiomError(f"{self.name}: (cm)a != c(ma)")
            for j in range(A.dim):
                ma = self.right[m][j]
                for j2 in range(A.dim):
                    lhs = {}
                    for s, c in A.table[j][j2].items():
                        add_scaled(lhs, self.right[m][s], c, zero)
                    if lhs != self.act_right(ma, j2):
                        raise AxiomError(f"{self.name}: m(aa') != (ma)a'")


def regular(a: Algebra, name: str | None = None) -> Bimodule:
    right = tuple(tuple(a.table[m][j] for j in range(a.dim)) for m in range(a.dim))
    return Bimodule(name or a.name, a, a, a.dim, a.table, right)


def zero_bimodule(c: Algebra, a: Algebra, name: str = "0") -> Bimodule:
    return Bimodule(name, c, a, 0, tuple(() for _ in range(c.dim)), ())


def dual(n: Bimodule, name: str | None = None) -> Bimodule:
    """
    DN = Hom_k(N, k) on the dual basis, with (a.f)(x) = f(xa) and (f.c)(x) = f(cx).

    For a (C,A)-bimodule N the dual is an (A,C)-bimodule.
    """
    d = n.dim
    left = tuple(
        tuple({s: n.right[s][i][k] for s in range(d) if k in n.right[s][i]} for k in range(d))
        for i in range(n.right_algebra.dim)
    )
    right = tuple(
        tuple({s: n.left[j][s][k] for s in range(d) if k in n.left[j][s]} for j in range(n.left_algebra.dim))
        for k in range(d)
    )
    return Bimodule(name or f"D({n.name})", n.right_algebra, n.left_algebra, d, left, right)


def twisted(a: Algebra, f: Matrix, name: str | None = None) -> Bimodule:
    """^fA: a . m = f(a) m and m . a = m a."""
    if f.shape != (a.dim, a.dim) or f.rank() != a.dim or not is_algebra_map(a, a, f):
        raise AxiomError(f"map is not an automorphism of {a.name}")
    zero = a.field.zero
    images = f.columns()
    left = []
    for i in range(a.dim):
        row = []
        for m in range(a.dim):
            out: dict[int, Any] = {}
            for s, c in enumerate(images[i]):
                if c != zero:
                    add_scaled(out, a.table[s][m], c, zero)
            row.append(out)
        left.append(tuple(row))
    right = tuple(tuple(a.table[m][j] for j in range(a.dim)) for m in range(a.dim))
    return Bimodule(name or f"^f{a.name}", a, a, a.dim, tuple(left), right)


def one_sided(a: Algebra, right_action: Sequence[Sequence[Sequence[Any]]], name: str = "M") -> Bimodule:
    """
    A right A-module as a (k, A)-bimodule.

    right_action[m][j] is the dense coordinate vector of m_m . a_j.
    """
    field = a.field
    k = ground_field(field)
    dim = len(right_action)
    right = tuple(
        tuple({l: field(x) for l, x in enumerate(vec) if field(x) != field.zero} for vec in row)
        for row in right_action
    )
    left = (tuple({m: field.one} for m in range(dim)),)
    return Bimodule(name, k, a, dim, left, right)


def right_simple(a: Algebra, idempotent: int, name: str | None = None) -> Bimodule:
    """One-dimensional right module on which basis element `idempotent` acts as 1, all else as 0."""
    zero, one = a.field.zero, a.field.one
    row = [[one if j == idempotent else zero] for j in range(a.dim)]
    return one_sided(a, [row], name or f"S({a.labels[idempotent]})")


def left_projective(a: Algebra, idempotent: int, name: str | None = None) -> Bimodule:
    """
    A e for a basis idempotent e, as an (A, k)-bimodule.

    Its basis is the basis elements b with b e = b; quiver path bases span every A e this way.
    """
    one = a.field.one
    support = [j for j in range(a.dim) if a.table[j][idempotent] == {j: one}]
    position = {j: s for s, j in enumerate(support)}
    left = []
    for i in range(a.dim):
        row = []
        for j in support:
            image = a.table[i][j]
            if any(l not in position for l in image):
                raise AxiomError(f"{a.name}{a.labels[idempotent]} is not spanned by basis elements")
            row.append({position[l]: c for l, c in image.items()})
        left.append(tuple(row))
    right = tuple(({s: one},) for s in range(len(support)))
    dim = len(support)
    return Bimodule(name or f"{a.name}{a.labels[idempotent]}", a, ground_field(a.field), dim, tuple(left), right)


def restrict(
    x: Bimodule,
    left_algebra: Algebra,
    left_indices: Sequence[int],
    right_algebra: Algebra,
    right_indices: Sequence[int],
    name: str | None = None,
) -> Bimodule:
    """Restriction of scalars along subalgebras whose basis elements sit at the given indices."""
    left = tuple(x.left[i] for i in left_indices)
    right = tuple(tuple(x.right[m][j] for j in right_indices) for m in range(x.dim))
    return Bimodule(name or x.name, left_algebra, right_algebra, x.dim, left, right)


@dataclass(frozen=True, eq=False)
class TensorProduct:
    """
    M (x)_A N as a quotient of M (x)_k N.

    Coordinates of M (x)_k N are m*dim(N)+n. The quotient keeps the coordinates
    that are not echelon pivots of the relation span; `projection` sends
    M (x)_k N onto them and `section` is the coordinate inclusion.
    """

    left_factor: Bimodule
    right_factor: Bimodule
    module: Bimodule
    projection: Matrix
    section: Matrix
    kept: tuple[int, ...]

    @property
    def dim(self) -> int:
        return self.module.dim

    def project(self, v: SparseVector) -> SparseVector:
        zero = self.module.field.zero
        out: dict[int, Any] = {}
        cols = self._projection_columns
        for k, x in v.items():
            add_scaled(out, cols[k], x, zero)
        return out

    def project_pair(self, u: SparseVector, w: SparseVector) -> SparseVector:
        """Class of u (x) w."""
        dn = self.right_factor.dim
        zero = self.module.field.zero
        out: dict[int, Any] = {}
        cols = self._projection_columns
        for m, x in u.items():
            for n, y in w.items():
                add_scaled(out, cols[m * dn + n], x * y, zero)
        return out

    @property
    def _projection_columns(self) -> list[SparseVector]:
        cached = self.__dict__.get("_cols")
        if cached is None:
            cached = [dict() for _ in range(self.projection.cols)]
            for i, row in self.projection.entries().items():
                for j, x in row.items():
                    cached[j][i] = x
            object.__setattr__(self, "_cols", cached)
        return cached

    def induced(self, pairing: Callable[[int, int], SparseVector], target_dim: int) -> Matrix:
        """Matrix of the map on the quotient induced by a balanced pairing of basis elements."""
        dn = self.right_factor.dim
        columns = [pairing(*divmod(k, dn)) for k in self.kept]
        return Matrix.from_sparse_columns(columns, target_dim, self.module.field)


def tensor_over(m: Bimodule, n: Bimodule, name: str | None = None) -> TensorProduct:
    """M (x)_A N for a (C,A)-bimodule M and an (A,B)-bimodule N."""
    if m.right_algebra is not n.left_algebra:
        raise DimensionMismatchError(
            f"cannot tensor {m.name} over {m.right_algebra.name} with {n.name} over {n.left_algebra.name}"
        )
    field = m.field
    zero, one = field.zero, field.one
    A = m.right_algebra
    dm, dn = m.dim, n.dim
    relations: dict[int, dict[int, Any]] = {}
    row = 0
    for mi in range(dm):
        for j in range(A.dim):
            for ni in range(dn):
                rel: dict[int, Any] = {}
                for s, x in m.right[mi][j].items():
                    add_scaled(rel, {s * dn + ni: one}, x, zero)
                for t, y in n.left[j][ni].items():
                    add_scaled(rel, {mi * dn + t: one}, -y, zero)
                if rel:
                    relations[row] = rel
                    row += 1
    reduced, pivots = Matrix.from_entries(relations, (row, dm * dn), field).rref()
    pivot_set = set(pivots)
    kept = tuple(k for k in range(dm * dn) if k not in pivot_set)
    position = {k: q for q, k in enumerate(kept)}

    proj: dict[int, dict[int, Any]] = {}
    for k in kept:
        proj.setdefault(position[k], {})[k] = one
    for i, p in enumerate(pivots):
        for k, x in reduced.get(i, {}).items():
            if k != p:
                proj.setdefault(position[k], {})[p] = -x
    projection = Matrix.from_entries(proj, (len(kept), dm * dn), field)
    section = Matrix.from_entries({k: {q: one} for q, k in enumerate(kept)}, (dm * dn, len(kept)), field)

    columns = [dict() for _ in range(dm * dn)]
    for i, r in projection.entries().items():
        for j, x in r.items():
            columns[j][i] = x

    def _project(v: dict) -> dict:
        out: dict[int, Any] = {}
        for k, x in v.items():
            add_scaled(out, columns[k], x, zero)
        return out

    C, B = m.left_algebra, n.right_algebra
    left = tuple(
        tuple(
            _project({s * dn + k % dn: x for s, x in m.left[i][k // dn].items()})
            for k in kept
        )
        for i in range(C.dim)
    )
    right = tuple(
        tuple(_project({(k // dn) * dn + t: y for t, y in n.right[k % dn][j].items()}) for j in range(B.dim))
        for k in kept
    )
    module = Bimodule(name or f"{m.name}(x){n.name}", C, B, len(kept), left, right)
    logger.debug(f"🧮 {module.name}: {dm}x{dn} -> {module.dim}")
    return TensorProduct(m, n, module, projection, section, kept)


def tensor_power(m: Bimodule, p: int) -> Bimodule:
    """M (x)_A ... (x)_A M with p factors; p = 0 gives the regular bimodule A."""
    if p == 0:
        return regular(m.left_algebra)
    power = m
    for _ in range(p - 1):
        power = tensor_over(power, m).module
    return power


def left_unit_isomorphism(m: Bimodule) -> tuple[TensorProduct, Matrix]:
    """A (x)_A M and the action map a (x) m -> am onto M."""
    tp = tensor_over(regular(m.left_algebra), m)
    return tp, tp.induced(lambda a, x: m.left[a][x], m.dim)


def right_unit_isomorphism(m: Bimodule) -> tuple[TensorProduct, Matrix]:
    """M (x)_A A and the action map m (x) a -> ma onto M."""
    tp = tensor_over(m, regular(m.right_algebra))
    return tp, tp.induced(lambda x, a: m.right[x][a], m.dim)


def hom_space(n: Bimodule, x: Bimodule) -> list[Matrix]:
    """
    Basis of Hom_{C-A}(N, X), each map a dim(X) x dim(N) matrix.

    Unknowns are ordered column by column: F[c][r] sits at r*dim(X)+c.
    """
    if n.left_algebra is not x.left_algebra or n.right_algebra is not x.right_algebra:
        raise DimensionMismatchError(f"{n.name} and {x.name} are bimodules over different algebras")
    field = n.field
    zero = field.zero
    dn, dx = n.dim, x.dim
    equations: dict[int, dict[int, Any]] = {}
    row = 0

    def _emit(eq: dict) -> None:
        nonlocal row
        if eq:
            equations[row] = eq
        row += 1

    for i in range(n.left_algebra.dim):
        for r in range(dn):
            for c in range(dx):
                eq: dict[int, Any] = {}
                for r2, y in n.left[i][r].items():
                    add_scaled(eq, {r2 * dx + c: field.one}, y, zero)
                for c2 in range(dx):
                    y = x.left[i][c2].get(c)
                    if y is not None:
                        add_scaled(eq, {r * dx + c2: field.one}, -y, zero)
                _emit(eq)
    for j in range(n.right_algebra.dim):
        for r in range(dn):
            for c in range(dx):
                eq = {}
                for r2, y in n.right[r][j].items():
                    add_scaled(eq, {r2 * dx + c: field.one}, y, zero)
                for c2 in range(dx):
                    y = x.right[c2][j].get(c)
                    if y is not None:
                        add_scaled(eq, {r * dx + c2: field.one}, -y, zero)
                _emit(eq)
    system = Matrix.from_entries(equations, (row, dn * dx), field)
    maps = []
    for v in system.kernel_basis():
        entries = {c: {r: v[r * dx + c] for r in range(dn)} for c in range(dx)}
        maps.append(Matrix.from_entries(entries, (dx, dn), field))
    return maps


def symmetric_actors(a: Algebra, m: Bimodule) -> Matrix:
    """Basis (as columns) of A^M = {a in A : am = ma for all m in M}."""
    field = a.field
    zero = field.zero
    dm = m.dim
    entries: dict[int, dict[int, Any]] = {}
    for k in range(dm):
        for i in range(a.dim):
            diff: dict[int, Any] = {}
            add_scaled(diff, m.left[i][k], field.one, zero)
            add_scaled(diff, m.right[k][i], -field.one, zero)
            for c, y in diff.items():
                entries.setdefault(k * dm + c, {})[i] = y
    return Matrix.from_entries(entries, (dm * dm, a.dim), field).kernel_matrix()


def bimodule_invariants(a: Algebra, m: Bimodule) -> Matrix:
    """Basis (as columns) of M^A = {m in M : am = ma for all a in A}."""
    field = a.field
    zero = field.zero
    dm = m.dim
    entries: dict[int, dict[int, Any]] = {}
    for j in range(a.dim):
        for k in range(dm):
            diff: dict[int, Any] = {}
            add_scaled(diff, m.left[j][k], field.one, zero)
            add_scaled(diff, m.right[k][j], -field.one, zero)
            for c, y in diff.items():
                entries.setdefault(j * dm + c, {})[k] = y
    return Matrix.from_entries(entries, (a.dim * dm, dm), field).kernel_matrix()


def is_bimodule_map(f: Matrix, n: Bimodule, x: Bimodule) -> bool:
    if f.shape != (x.dim, n.dim):
        raise DimensionMismatchError(f"map of shape {f.shape} from {n.name} to {x.name}")
    for i in range(n.left_algebra.dim):
        if f @ n.left_matrix(i) != x.left_matrix(i) @ f:
            return False
    for j in range(n.right_algebra.dim):
        if f @ n.right_matrix(j) != x.right_matrix(j) @ f:
            return False
    return True


def action_vector(v: SparseVector, dim: int, field) -> Vector:
    out = zero_vector(dim, field)
    for i, x in v.items():
        out[i] = x
    return out
