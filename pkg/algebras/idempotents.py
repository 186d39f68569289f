# Complete systems of orthogonal idempotents and the one-way condition
import logging
from collections.abc import Sequence
from dataclasses import dataclass
from itertools import combinations

from linalg.errors import AxiomError, DimensionMismatchError
from linalg.matrix import Matrix, Vector, zero_vector

from .algebra import Algebra
from .bimodule import Bimodule

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class IdempotentSystem:
    algebra: Algebra
    idempotents: tuple[Vector, ...]

    def __post_init__(self):
        a = self.algebra
        zero = zero_vector(a.dim, a.field)
        total = zero_vector(a.dim, a.field)
        for e in self.idempotents:
            if len(e) != a.dim:
                raise DimensionMismatchError(f"idempotent of length {len(e)} in {a.name}")
            if a.mul(e, e) != list(e):
                raise AxiomError(f"{a.name}: element is not idempotent")
            total = [x + y for x, y in zip(total, e)]
        for e, f in combinations(self.idempotents, 2):
            if a.mul(e, f) != zero or a.mul(f, e) != zero:
                raise AxiomError(f"{a.name}: idempotents are not orthogonal")
        if total != a.unit_vector():
            raise AxiomError(f"{a.name}: idempotents do not sum to 1")

    def __len__(self) -> int:
        return len(self.idempotents)


@dataclass(frozen=True)
class OneWayCertificate:
    holds: bool
    violated: int | None = None
    reason: str = ""


def corner_map(a: Algebra, e: Sequence, f: Sequence) -> Matrix:
    """Matrix of x -> e x f on A; its rank is dim eAf."""
    return a.left_matrix(e) @ a.right_matrix(f)


def corner_dim(a: Algebra, e: Sequence, f: Sequence) -> int:
    return corner_map(a, e, f).rank()


def _left_element(x: Bimodule, c: Sequence) -> Matrix:
    out = Matrix.zeros(x.dim, x.dim, x.field)
    for i, ci in enumerate(c):
        if ci != x.field.zero:
            out = out + x.left_matrix(i).scale(ci)
    return out


def _right_element(x: Bimodule, c: Sequence) -> Matrix:
    out = Matrix.zeros(x.dim, x.dim, x.field)
    for j, cj in enumerate(c):
        if cj != x.field.zero:
            out = out + x.right_matrix(j).scale(cj)
    return out


def bimodule_corner_dim(x: Bimodule, e: Sequence, f: Sequence) -> int:
    """dim eXf for idempotents e of the left algebra and f of the right algebra."""
    if x.dim == 0:
        return 0
    return (_left_element(x, e) @ _right_element(x, f)).rank()


def is_one_way(system: IdempotentSystem) -> OneWayCertificate:
    """
    Decide whether the algebra is one-way with respect to the idempotent system.

    Conditions are checked in order: eAf != 0 forces fAe = 0 for e != f; every
    eAe is one-dimensional; S has more than one element and its arrow graph
    is connected.
    """
    a = system.algebra
    es = system.idempotents
    n = len(es)
    linked = {i: set() for i in range(n)}
    for i, j in combinations(range(n), 2):
        forward = corner_dim(a, es[i], es[j])
        backward = corner_dim(a, es[j], es[i])
        if forward and backward:
            return OneWayCertificate(False, 1, f"e{i + 1}Ae{j + 1} and e{j + 1}Ae{i + 1} are both nonzero")
        if forward or backward:
            linked[i].add(j)
            linked[j].add(i)
    for i, e in enumerate(es):
        d = corner_dim(a, e, e)
        if d != 1:
            return OneWayCertificate(False, 2, f"dim e{i + 1}Ae{i + 1} = {d}")
    if n <= 1:
        return OneWayCertificate(False, 3, "the system has a single idempotent")
    seen, stack = {0}, [0]
    while stack:
        for j in linked[stack.pop()] - seen:
            seen.add(j)
            stack.append(j)
    if len(seen) != n:
        return OneWayCertificate(False, 3, "the algebra is not connected")
    logger.debug(f"➡️  {a.name} is one-way with {n} idempotents")
    return OneWayCertificate(True)
