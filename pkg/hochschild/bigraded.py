# The double complex Hom_k(M^{p,q}, X) of a split algebra
import logging
from dataclasses import dataclass

from algebras.bimodule import Bimodule, hom_space, tensor_power
from algebras.split import SplitAlgebra, extend_by_zero, restrict_to_base, zeroed
from linalg.errors import DimensionMismatchError, VerificationError
from linalg.matrix import Matrix

from .cochains import WordBasis, coboundary_matrix
from .complexes import CochainComplex, hochschild_complex

logger = logging.getLogger(__name__)

Spot = tuple[int, int]


class BigradedComplex:
    """
    Spots (p,q) with p+q <= N+1 and the two components of the coboundary.

    dh[(p,q)]: (p,q) -> (p+1,q) and dv[(p,q)]: (p,q) -> (p,q+1) are the blocks of
    the Hochschild coboundary of Λ with coefficients in X, for p+q <= N.
    """

    def __init__(self, lam: SplitAlgebra, x: Bimodule, max_degree: int):
        if x.left_algebra is not lam.total or x.right_algebra is not lam.total:
            raise DimensionMismatchError(f"{x.name} is not a bimodule over {lam.name}")
        self.split = lam
        self.module = x
        self.max_degree = max_degree
        self._bases: dict[Spot, WordBasis] = {}
        self._dh: dict[Spot, Matrix] = {}
        self._dv: dict[Spot, Matrix] = {}

    def basis(self, p: int, q: int) -> WordBasis:
        if (p, q) not in self._bases:
            self._bases[(p, q)] = WordBasis.of_split(self.split, p, q)
        return self._bases[(p, q)]

    def space(self, p: int, q: int) -> int:
        return len(self.basis(p, q)) * self.module.dim

    def spots(self, n: int) -> list[Spot]:
        return [(p, n - p) for p in range(n + 1)]

    def _check(self, p: int, q: int) -> None:
        if p < 0 or q < 0 or p + q > self.max_degree:
            raise DimensionMismatchError(f"spot ({p},{q}) is outside total degree {self.max_degree}")

    def dh(self, p: int, q: int) -> Matrix:
        self._check(p, q)
        if (p, q) not in self._dh:
            self._dh[(p, q)] = coboundary_matrix(self.split.total, self.module, self.basis(p, q), self.basis(p + 1, q))
        return self._dh[(p, q)]

    def dv(self, p: int, q: int) -> Matrix:
        self._check(p, q)
        if (p, q) not in self._dv:
            self._dv[(p, q)] = coboundary_matrix(self.split.total, self.module, self.basis(p, q), self.basis(p, q + 1))
        return self._dv[(p, q)]

    def block(self, source: Spot, target: Spot) -> Matrix:
        """Any block of the coboundary between two spots; only (p+1,q) and (p,q+1) may be nonzero."""
        return coboundary_matrix(self.split.total, self.module, self.basis(*source), self.basis(*target))

    def column_complex(self, p: int, q_max: int | None = None) -> CochainComplex:
        """The vertical complex C^p(X) in degrees q = 0..q_max."""
        top = self.max_degree - p if q_max is None else q_max
        if top < 0 or p + top > self.max_degree:
            raise DimensionMismatchError(f"column {p} up to {top} exceeds total degree {self.max_degree}")
        spaces = tuple(self.space(p, q) for q in range(top + 2))
        return CochainComplex(spaces, tuple(self.dv(p, q) for q in range(top + 1)))

    def column_dims(self) -> dict[Spot, int]:
        """dim H^q(C^p(X)) for every p+q <= N."""
        dims = {}
        for p in range(self.max_degree + 1):
            for q, d in enumerate(self.column_complex(p).dims()):
                dims[(p, q)] = d
        return dims

    def horizontal_is_zero(self) -> bool:
        return all(
            self.dh(p, q).is_zero() for n in range(self.max_degree + 1) for p, q in self.spots(n)
        )

    def verify_anticommutation(self) -> bool:
        """dv dv = 0, dh dh = 0 and dh dv + dv dh = 0 wherever both sides are defined."""
        for n in range(self.max_degree):
            for p, q in self.spots(n):
                if not (self.dv(p, q + 1) @ self.dv(p, q)).is_zero():
                    return False
                if not (self.dh(p + 1, q) @ self.dh(p, q)).is_zero():
                    return False
                if not (self.dh(p, q + 1) @ self.dv(p, q) + self.dv(p + 1, q) @ self.dh(p, q)).is_zero():
                    return False
        return True

    def ordering(self, n: int) -> list[int]:
        """Position in the lexicographic word basis of each spot word of total degree n, spots by p."""
        lex = WordBasis.all(self.split.dim, n)
        return [lex.index[w] for p, q in self.spots(n) for w in self.basis(p, q).words]

    def total_differential(self, n: int) -> Matrix:
        """d_n reassembled from the spot blocks in the lexicographic word order."""
        if n > self.max_degree:
            raise DimensionMismatchError(f"d_{n} is outside total degree {self.max_degree}")
        dx = self.module.dim
        src_offsets, tgt_offsets = {}, {}
        offset = 0
        for spot in self.spots(n):
            src_offsets[spot] = offset
            offset += len(self.basis(*spot))
        offset = 0
        for spot in self.spots(n + 1):
            tgt_offsets[spot] = offset
            offset += len(self.basis(*spot))
        src_order, tgt_order = self.ordering(n), self.ordering(n + 1)
        entries: dict[int, dict] = {}
        for p, q in self.spots(n):
            for target, block in (((p + 1, q), self.dh(p, q)), ((p, q + 1), self.dv(p, q))):
                for i, row in block.entries().items():
                    tw, tc = divmod(i, dx)
                    r = tgt_order[tgt_offsets[target] + tw] * dx + tc
                    dest = entries.setdefault(r, {})
                    for j, y in row.items():
                        sw, sc = divmod(j, dx)
                        dest[src_order[src_offsets[(p, q)] + sw] * dx + sc] = y
        rows = len(src_order) * self.split.dim * dx
        return Matrix.from_entries(entries, (rows, len(src_order) * dx), self.split.field)

    def verify_reassembly(self) -> bool:
        total = hochschild_complex(self.split.total, self.module, self.max_degree)
        return all(self.total_differential(n) == total.d(n) for n in range(self.max_degree + 1))


def decompose_bigraded(lam: SplitAlgebra, x: Bimodule, max_degree: int) -> BigradedComplex:
    return BigradedComplex(lam, x, max_degree)


def vertical_without_ideal(lam: SplitAlgebra, x: Bimodule) -> tuple[SplitAlgebra, Bimodule]:
    """The same A and M with zero product, and X with M acting as zero."""
    plain = zeroed(lam)
    return plain, extend_by_zero(plain, restrict_to_base(lam, x))


def verify_vertical_independence(lam: SplitAlgebra, x: Bimodule, max_degree: int) -> bool:
    """The vertical differentials do not see the product of M nor the actions of M on X."""
    plain, x_plain = vertical_without_ideal(lam, x)
    original = BigradedComplex(lam, x, max_degree)
    stripped = BigradedComplex(plain, x_plain, max_degree)
    for n in range(max_degree + 1):
        for p, q in original.spots(n):
            if original.dv(p, q) != stripped.dv(p, q):
                logger.warning(f"⚠️  d_v differs at ({p},{q}) for {lam.name}")
                return False
    return True


def column_h0_oracle(lam: SplitAlgebra, x: Bimodule, p: int) -> int:
    """dim Hom_{A-A}(M^{(x)_A p}, X) by solving for bimodule maps."""
    x_a = restrict_to_base(lam, x)
    power = tensor_power(lam.ideal, p)
    return len(hom_space(power, x_a))


def check_horizontal_zero(bc: BigradedComplex) -> None:
    if not bc.horizontal_is_zero():
        raise VerificationError(f"horizontal coboundaries of {bc.split.name} with {bc.module.name} are not zero")
