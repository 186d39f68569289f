# Ext and Tor over finite-dimensional algebras through free resolutions
import logging
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod
from typing import Any

from algebras.algebra import Algebra, opposite, tensor_algebra
from algebras.bimodule import Bimodule, tensor_over
from linalg.errors import AxiomError, DimensionMismatchError, HypothesisError
from linalg.matrix import EchelonSpan, Matrix, SparseVector, add_scaled, dense_to_sparse, unit_vector

from .complexes import ChainComplex, CochainComplex

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class ModuleOverAlgebra:
    """A left module; action[i][m] is r_i . m as a sparse vector."""

    name: str
    algebra: Algebra
    dim: int
    action: tuple[tuple[SparseVector, ...], ...]

    def __post_init__(self):
        r = self.algebra
        if len(self.action) != r.dim or any(len(row) != self.dim for row in self.action):
            raise DimensionMismatchError(f"{self.name}: action has the wrong shape")
        zero, one = r.field.zero, r.field.one
        for m in range(self.dim):
            unit: dict[int, Any] = {}
            for i, u in enumerate(r.unit):
                if u != zero:
                    add_scaled(unit, self.action[i][m], u, zero)
            if unit != {m: one}:
                raise AxiomError(f"{self.name}: unit does not act as identity")
            for i in range(r.dim):
                for j in range(r.dim):
                    lhs: dict[int, Any] = {}
                    for s, c in r.table[i][j].items():
                        add_scaled(lhs, self.action[s][m], c, zero)
                    if lhs != self.act(i, self.action[j][m]):
                        raise AxiomError(f"{self.name}: action is not associative")

    @property
    def field(self):
        return self.algebra.field

    def act(self, i: int, v: SparseVector) -> SparseVector:
        zero = self.field.zero
        out: dict[int, Any] = {}
        for m, x in v.items():
            add_scaled(out, self.action[i][m], x, zero)
        return out


def left_module(x: Bimodule) -> ModuleOverAlgebra:
    return ModuleOverAlgebra(x.name, x.left_algebra, x.dim, x.left)


def right_module(x: Bimodule) -> ModuleOverAlgebra:
    """The right module structure of x as a left module over the opposite algebra."""
    b = x.right_algebra
    action = tuple(tuple(x.right[m][j] for m in range(x.dim)) for j in range(b.dim))
    return ModuleOverAlgebra(x.name, _opposite(b), x.dim, action)


@lru_cache(maxsize=None)
def _opposite(a: Algebra) -> Algebra:
    return opposite(a)


def enveloping_algebra(c: Algebra, a: Algebra | None = None) -> Algebra:
    """C (x) A^op, basis index i*dim(A)+j; (C,A)-bimodules are its left modules."""
    return _enveloping(c, c if a is None else a)


@lru_cache(maxsize=None)
def _enveloping(c: Algebra, a: Algebra) -> Algebra:
    return tensor_algebra(c, a, name=f"env({c.name})" if a is c else f"{c.name}(x){a.name}^op", opposite_right=True)


def bimodule_to_module(x: Bimodule) -> ModuleOverAlgebra:
    """(c (x) a) . m = c m a."""
    c, a = x.left_algebra, x.right_algebra
    env = enveloping_algebra(c, a)
    action = tuple(
        tuple(x.act_left(i, x.right[m][j]) for m in range(x.dim))
        for i in range(c.dim)
        for j in range(a.dim)
    )
    return ModuleOverAlgebra(x.name, env, x.dim, action)


def module_to_bimodule(module: ModuleOverAlgebra, c: Algebra, a: Algebra) -> Bimodule:
    """Inverse of bimodule_to_module, expanding the units of A and C."""
    if module.algebra is not enveloping_algebra(c, a):
        raise DimensionMismatchError(f"{module.name} is not a module over the enveloping algebra")
    zero = c.field.zero
    da = a.dim

    def combine(pairs) -> tuple[SparseVector, ...]:
        row = []
        for m in range(module.dim):
            out: dict[int, Any] = {}
            for idx, coeff in pairs:
                add_scaled(out, module.action[idx][m], coeff, zero)
            row.append(out)
        return tuple(row)

    left = tuple(combine([(i * da + j, u) for j, u in enumerate(a.unit) if u != zero]) for i in range(c.dim))
    right_by_j = [combine([(i * da + j, u) for i, u in enumerate(c.unit) if u != zero]) for j in range(da)]
    right = tuple(tuple(right_by_j[j][m] for j in range(da)) for m in range(module.dim))
    return Bimodule(module.name, c, a, module.dim, left, right)


def _free_act(ring: Algebra, i: int, v: SparseVector) -> SparseVector:
    """r_i . v in a free module R^g, coordinate k*dim(R)+j."""
    zero = ring.field.zero
    dr = ring.dim
    out: dict[int, Any] = {}
    for idx, x in v.items():
        k, j = divmod(idx, dr)
        for l, y in ring.table[i][j].items():
            add_scaled(out, {k * dr + l: ring.field.one}, x * y, zero)
    return out


def _cover(
    ring: Algebra, candidates: Sequence[SparseVector], act: Callable[[int, SparseVector], SparseVector], target_dim: int
) -> list[SparseVector]:
    """Greedy generators of a submodule: skip candidates already generated by earlier ones."""
    span = EchelonSpan(ring.field)
    chosen = []
    for v in candidates:
        if len(span) == target_dim:
            break
        if span.contains(v):
            continue
        chosen.append(v)
        for i in range(ring.dim):
            span.add(act(i, v))
    if len(span) != target_dim:
        raise AxiomError(f"generators span {len(span)} of {target_dim} dimensions")
    return chosen


def _cover_matrix(
    ring: Algebra, generators: Sequence[SparseVector], act: Callable[[int, SparseVector], SparseVector], rows: int
) -> Matrix:
    columns = [act(i, g) for g in generators for i in range(ring.dim)]
    return Matrix.from_sparse_columns(columns, rows, ring.field)


@dataclass(frozen=True, eq=False)
class FreeResolution:
    """
    ... -> R^{g_1} -> R^{g_0} -> N -> 0.

    generators[0] are elements of N, generators[q] for q >= 1 are elements of
    R^{g_{q-1}}; boundaries[q] is the matrix of R^{g_q} -> R^{g_{q-1}} (or N for q = 0).
    """

    ring: Algebra
    module: ModuleOverAlgebra
    generators: tuple[tuple[SparseVector, ...], ...]
    boundaries: tuple[Matrix, ...]

    def rank(self, q: int) -> int:
        return len(self.generators[q])


def free_resolution(module: ModuleOverAlgebra, length: int) -> FreeResolution:
    """Free resolution with free modules P_0..P_length, each step exact by construction."""
    ring = module.algebra
    field = ring.field
    dr = ring.dim
    units = [dense_to_sparse(unit_vector(module.dim, m, field), field) for m in range(module.dim)]
    gens = _cover(ring, units, module.act, module.dim)
    generators = [tuple(gens)]
    boundaries = [_cover_matrix(ring, gens, module.act, module.dim)]
    for q in range(1, length + 1):
        previous = boundaries[-1]
        kernel = [dense_to_sparse(v, field) for v in previous.kernel_basis()]
        gens = _cover(ring, kernel, lambda i, v: _free_act(ring, i, v), len(kernel))
        step = _cover_matrix(ring, gens, lambda i, v: _free_act(ring, i, v), previous.cols)
        if not (previous @ step).is_zero() or step.rank() != len(kernel):
            raise AxiomError(f"resolution of {module.name} is not exact at step {q}")
        generators.append(tuple(gens))
        boundaries.append(step)
    logger.debug(f"🪜 resolution of {module.name} over {ring.name}: ranks {[len(g) for g in generators]} (x{dr})")
    return FreeResolution(ring, module, tuple(generators), tuple(boundaries))


def ext_complex(resolution: FreeResolution, x: ModuleOverAlgebra, q_max: int) -> CochainComplex:
    """Hom_R(P_q, X) = X^{g_q}; row (k',c), column (k,c') carries sum_i v_{k'}[k dR + i] X.action[i][c'][c]."""
    ring = resolution.ring
    if x.algebra is not ring:
        raise DimensionMismatchError(f"{x.name} is not a module over {ring.name}")
    field = ring.field
    zero = field.zero
    dr, dx = ring.dim, x.dim
    differentials = []
    for q in range(q_max + 1):
        src, tgt = resolution.generators[q], resolution.generators[q + 1]
        entries: dict[int, dict[int, Any]] = {}
        for k2, v in enumerate(tgt):
            for idx, coeff in v.items():
                k, i = divmod(idx, dr)
                for c2 in range(dx):
                    for c, y in x.action[i][c2].items():
                        row = entries.setdefault(k2 * dx + c, {})
                        col = k * dx + c2
                        value = row.get(col, zero) + coeff * y
                        if value == zero:
                            row.pop(col, None)
                        else:
                            row[col] = value
        differentials.append(Matrix.from_entries(entries, (len(tgt) * dx, len(src) * dx), field))
    spaces = tuple(len(resolution.generators[q]) * dx for q in range(q_max + 2))
    return CochainComplex(spaces, tuple(differentials))


def ext_dims(n: ModuleOverAlgebra, x: ModuleOverAlgebra, q_max: int) -> list[int]:
    """dim Ext^q_R(N, X) for q = 0..q_max."""
    if n.algebra is not x.algebra:
        raise DimensionMismatchError(f"{n.name} and {x.name} are modules over different algebras")
    resolution = free_resolution(n, q_max + 1)
    dims = ext_complex(resolution, x, q_max).dims()
    logger.info(f"📚 Ext_{n.algebra.name}({n.name}, {x.name}) = {dims}")
    return dims


def bimodule_ext_dims(n: Bimodule, x: Bimodule, q_max: int) -> list[int]:
    """Ext over the enveloping algebra between two (C,A)-bimodules."""
    if n.left_algebra is not x.left_algebra or n.right_algebra is not x.right_algebra:
        raise DimensionMismatchError(f"{n.name} and {x.name} are bimodules over different algebras")
    return ext_dims(bimodule_to_module(n), bimodule_to_module(x), q_max)


def tor_dims(n: Bimodule, m: Bimodule, q_max: int) -> list[int]:
    """
    dim Tor^B_q(N, M) for a right B-module N and a left B-module M, q = 0..q_max.

    M is resolved over B and N (x)_B R^g is identified with N^g.
    """
    ring = n.right_algebra
    if m.left_algebra is not ring:
        raise DimensionMismatchError(f"{n.name} and {m.name} do not meet over one algebra")
    field = ring.field
    zero = field.zero
    dr, dn = ring.dim, n.dim
    resolution = free_resolution(left_module(m), q_max + 1)
    boundaries = []
    for q in range(1, q_max + 2):
        src, tgt = resolution.generators[q], resolution.generators[q - 1]
        entries: dict[int, dict[int, Any]] = {}
        for k2, v in enumerate(src):
            for idx, coeff in v.items():
                k, i = divmod(idx, dr)
                for c2 in range(dn):
                    for c, y in n.right[c2][i].items():
                        row = entries.setdefault(k * dn + c, {})
                        col = k2 * dn + c2
                        value = row.get(col, zero) + coeff * y
                        if value == zero:
                            row.pop(col, None)
                        else:
                            row[col] = value
        boundaries.append(Matrix.from_entries(entries, (len(tgt) * dn, len(src) * dn), field))
    spaces = tuple(len(resolution.generators[q]) * dn for q in range(q_max + 2))
    dims = ChainComplex(spaces, tuple(boundaries)).dims()
    logger.info(f"📚 Tor^{ring.name}({n.name}, {m.name}) = {dims}")
    return dims


def is_projective(module: ModuleOverAlgebra) -> bool:
    """The cover R^g -> N splits as a module map."""
    ring = module.algebra
    field = ring.field
    zero, one = field.zero, field.one
    dr, dn = ring.dim, module.dim
    if dn == 0:
        return True
    units = [dense_to_sparse(unit_vector(dn, m, field), field) for m in range(dn)]
    gens = _cover(ring, units, module.act, dn)
    cover = _cover_matrix(ring, gens, module.act, dn)
    size = cover.cols

    def unknown(r: int, c: int) -> int:
        return c * size + r

    equations: dict[int, dict[int, Any]] = {}
    rhs: list = []
    for i in range(dr):
        for c in range(dn):
            rows: dict[int, dict[int, Any]] = {}
            for c2, y in module.action[i][c].items():
                for r in range(size):
                    add_scaled(rows.setdefault(r, {}), {unknown(r, c2): one}, y, zero)
            for r in range(size):
                k, j = divmod(r, dr)
                for l, y in ring.table[i][j].items():
                    add_scaled(rows.setdefault(k * dr + l, {}), {unknown(r, c): one}, -y, zero)
            for r in range(size):
                equations[len(rhs)] = rows.get(r, {})
                rhs.append(zero)
    for c in range(dn):
        for row_index, row in cover.entries().items():
            eq = {unknown(r, c): y for r, y in row.items()}
            equations[len(rhs) + row_index] = eq
        rhs.extend(one if m == c else zero for m in range(dn))
    system = Matrix.from_entries(equations, (len(rhs), size * dn), field)
    return system.member_of_image(rhs) is not None


@dataclass(frozen=True)
class ProjectivityReport:
    left: bool
    right: bool

    @property
    def either(self) -> bool:
        return self.left or self.right


def is_one_sided_projective(m: Bimodule) -> ProjectivityReport:
    report = ProjectivityReport(is_projective(left_module(m)), is_projective(right_module(m)))
    logger.info(f"🔎 {m.name}: left projective {report.left}, right projective {report.right}")
    return report


# Typed bar complexes: letters R_0^{g_0} V_1 R_1^{g_1} ... V_s R_s^{g_s} with g_0, g_s >= 1.


def _shapes(groups: int, total: int) -> list[tuple[int, ...]]:
    """Group sizes summing to total with the outer groups nonempty, in lexicographic order."""
    return [
        g for g in product(range(total + 1), repeat=groups) if sum(g) == total and g[0] >= 1 and g[-1] >= 1
    ]


class TypedBarComplex:
    """
    Chains of the bar-type complex on a string of algebras and bimodules.

    Slots are ("R", t) for letters of the t-th algebra and ("V", t) for the t-th
    bimodule, which sits between algebras t-1 and t. Merging the letters at
    positions t, t+1 carries the sign (-1)^t; two adjacent bimodule letters
    multiply to zero and a term that empties an outer group is dropped.
    """

    def __init__(self, rings: Sequence[Algebra], modules: Sequence[Bimodule]):
        if len(rings) != len(modules) + 1 or not modules:
            raise DimensionMismatchError("need one more algebra than bimodules")
        for t, v in enumerate(modules, start=1):
            if v.left_algebra is not rings[t - 1] or v.right_algebra is not rings[t]:
                raise DimensionMismatchError(f"{v.name} is not a ({rings[t - 1].name},{rings[t].name})-bimodule")
        self.rings = tuple(rings)
        self.modules = tuple(modules)
        self.field = rings[0].field
        self._index: dict[int, dict[tuple, int]] = {}

    def slots(self, shape: tuple[int, ...]) -> list[tuple[str, int]]:
        out = [("R", 0)] * shape[0]
        for t in range(1, len(self.rings)):
            out.append(("V", t))
            out.extend([("R", t)] * shape[t])
        return out

    def _letter_dim(self, slot: tuple[str, int]) -> int:
        kind, t = slot
        return self.rings[t].dim if kind == "R" else self.modules[t - 1].dim

    def chain_dim(self, n: int) -> int:
        """Dimension of the degree-n chains, counted without enumerating them."""
        return sum(
            prod(self._letter_dim(s) for s in self.slots(shape)) for shape in _shapes(len(self.rings), n + 2)
        )

    def index(self, n: int) -> dict[tuple, int]:
        """Positions of (shape, word) pairs spanning the degree-n chains."""
        if n not in self._index:
            positions: dict[tuple, int] = {}
            for shape in _shapes(len(self.rings), n + 2):
                ranges = [range(self._letter_dim(s)) for s in self.slots(shape)]
                for word in product(*ranges):
                    positions[(shape, word)] = len(positions)
            self._index[n] = positions
        return self._index[n]

    def _merge(self, left: tuple[str, int], right: tuple[str, int], x: int, y: int) -> tuple[SparseVector, int | None]:
        """Product of two adjacent letters and the group that loses a letter."""
        kind_l, tl = left
        kind_r, tr = right
        if kind_l == "R" and kind_r == "R":
            return self.rings[tl].table[x][y], tl
        if kind_l == "R":
            return self.modules[tr - 1].left[x][y], tl
        if kind_r == "R":
            return self.modules[tl - 1].right[x][y], tr
        return {}, None

    def boundary(self, n: int) -> Matrix:
        """b_n: chains of degree n -> degree n-1."""
        source, target = self.index(n), self.index(n - 1)
        one, zero = self.field.one, self.field.zero
        last = len(self.rings) - 1
        columns = []
        for shape, word in source:
            slots = self.slots(shape)
            col: dict[int, Any] = {}
            for t in range(len(word) - 1):
                value, group = self._merge(slots[t], slots[t + 1], word[t], word[t + 1])
                if group is None or not value:
                    continue
                new_shape = list(shape)
                new_shape[group] -= 1
                if (group == 0 or group == last) and new_shape[group] == 0:
                    continue
                new_shape = tuple(new_shape)
                sign = one if t % 2 == 0 else -one
                for l, y in value.items():
                    key = (new_shape, word[:t] + (l,) + word[t + 2 :])
                    add_scaled(col, {target[key]: one}, sign * y, zero)
            columns.append(col)
        return Matrix.from_sparse_columns(columns, len(target), self.field)

    def chain_complex(self, max_degree: int) -> ChainComplex:
        spaces = tuple(len(self.index(n)) for n in range(max_degree + 2))
        boundaries = tuple(self.boundary(n) for n in range(1, max_degree + 2))
        return ChainComplex(spaces, boundaries)


@dataclass(frozen=True)
class TorComparison:
    complex_dims: list[int]
    tor_dims: list[int]

    @property
    def agrees(self) -> bool:
        return self.complex_dims == self.tor_dims


def prop_tor_complex(
    c: Algebra, b: Algebra, a: Algebra, n: Bimodule, m: Bimodule, n_max: int
) -> TorComparison:
    """Homology of the complex C Z A with Z = sum C^k N B^j M A^i against Tor^B(N, M)."""
    homology = TypedBarComplex([c, b, a], [n, m]).chain_complex(n_max).dims()
    return TorComparison(homology, tor_dims(n, m, n_max))


def prop_tor2_complex(
    d: Algebra, c: Algebra, b: Algebra, a: Algebra, u: Bimodule, n: Bimodule, m: Bimodule, n_max: int
) -> TorComparison:
    """Homology of D Z A with Z = sum D^l U C^k N B^j M A^i against Tor^C(U, N (x)_B M)."""
    inner = tor_dims(n, m, n_max)
    if any(inner[1:]):
        raise HypothesisError(f"Tor^{b.name}({n.name}, {m.name}) = {inner} is nonzero in positive degrees")
    homology = TypedBarComplex([d, c, b, a], [u, n, m]).chain_complex(n_max).dims()
    nm = tensor_over(n, m).module
    return TorComparison(homology, tor_dims(u, nm, n_max))
