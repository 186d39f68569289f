# Cup products, the cocycle 1_M and the connecting map written with cups
import logging
from typing import Any

from algebras.bimodule import TensorProduct, tensor_over
from algebras.split import BimoduleSequence
from linalg.errors import DimensionMismatchError, HypothesisError, VerificationError
from linalg.matrix import Matrix, add_scaled

from .cochains import Cochain, WordBasis, coboundary_matrix, push_values

logger = logging.getLogger(__name__)


def cup_product(f: Cochain, g: Cochain, tp: TensorProduct, target: WordBasis) -> Cochain:
    """
    (f ⌣ g)(w) = [f(w_1..w_n) (x) g(w_{n+1}..)] in X (x)_Λ Y.

    Words of the target whose halves are not in the bases of f and g get the value zero.
    """
    if f.module is not tp.left_factor or g.module is not tp.right_factor:
        raise DimensionMismatchError("cochains do not match the tensor product factors")
    n = f.basis.length
    if target.length != n + g.basis.length:
        raise DimensionMismatchError(f"cup of degrees {n} and {g.basis.length} into words of length {target.length}")
    values = {}
    for k, w in enumerate(target.words):
        fu = f.value(w[:n])
        if not fu:
            continue
        gv = g.value(w[n:])
        if not gv:
            continue
        v = tp.project_pair(fu, gv)
        if v:
            values[k] = v
    return Cochain(target, tp.module, values)


def add_cochains(f: Cochain, g: Cochain, scale=None) -> Cochain:
    """f + scale * g on the same basis and module."""
    if f.basis is not g.basis or f.module is not g.module:
        raise DimensionMismatchError("cochains live on different spaces")
    field = f.module.field
    scale = field.one if scale is None else scale
    values = {k: dict(v) for k, v in f.values.items()}
    for k, v in g.values.items():
        target = values.setdefault(k, {})
        add_scaled(target, v, scale, field.zero)
        if not target:
            del values[k]
    return Cochain(f.basis, f.module, values)


def identity_cocycle(seq: BimoduleSequence) -> Cochain:
    """
    1_M: Λ -> M, the projection onto the ideal, as a 1-cochain valued in M.

    d(1_M)(m, m') = mm', so this is a cocycle exactly when M² = 0.
    """
    lam = seq.split
    if not lam.square_zero:
        raise HypothesisError(f"1_M is not a cocycle on {lam.name}: M² != 0")
    basis = WordBasis.all(lam.dim, 1)
    da = lam.base.dim
    one = lam.field.one
    values = {i: {i - da: one} for i in range(da, lam.dim)}
    cocycle = Cochain(basis, seq.sub, values)
    d = coboundary_matrix(lam.total, seq.sub, basis, WordBasis.all(lam.dim, 2))
    if not all(x == lam.field.zero for x in d.apply(cocycle.to_vector())):
        raise VerificationError(f"d(1_M) != 0 on {lam.name}")
    return cocycle


def identity_class_is_nonzero(seq: BimoduleSequence) -> bool:
    """1_M is not d of an element of M; its class in H¹(Λ, M) is nonzero."""
    cocycle = identity_cocycle(seq)
    if cocycle.is_zero():
        return False
    lam = seq.split
    d0 = coboundary_matrix(lam.total, seq.sub, WordBasis.all(lam.dim, 0), cocycle.basis)
    return d0.member_of_image(cocycle.to_vector()) is None


class CupConnection:
    """
    δ^{p,q}φ = 1_M ⌣ φ + (-1)^{p+q+1} φ ⌣ 1_M for square-zero split algebras.

    The two cups land in M (x)_Λ Λ/M and Λ/M (x)_Λ M; both are carried to M by
    the action maps m (x) a -> ma and a (x) m -> am on the quotient bases.
    """

    def __init__(self, seq: BimoduleSequence):
        lam = seq.split
        if not lam.square_zero:
            raise HypothesisError(f"the cup formula for δ needs M² = 0 on {lam.name}")
        self.seq = seq
        self.unit_cocycle = identity_cocycle(seq)
        sub, quotient = seq.sub, seq.quotient
        self.right_tensor = tensor_over(sub, quotient)
        self.left_tensor = tensor_over(quotient, sub)
        self.right_iso = self.right_tensor.induced(lambda m, a: sub.right[m][a], sub.dim)
        self.left_iso = self.left_tensor.induced(lambda a, m: sub.left[a][m], sub.dim)
        for iso, tp in ((self.right_iso, self.right_tensor), (self.left_iso, self.left_tensor)):
            if iso.rank() != sub.dim or tp.dim != sub.dim:
                raise VerificationError(f"{tp.module.name} is not identified with {sub.name}")

    def delta(self, p: int, q: int, phi: Cochain) -> Cochain:
        lam = self.seq.split
        if phi.module is not self.seq.quotient:
            raise DimensionMismatchError(f"{phi.module.name} is not the quotient {self.seq.quotient.name}")
        target = WordBasis.of_split(lam, p + 1, q)
        first = push_values(cup_product(self.unit_cocycle, phi, self.right_tensor, target), self.seq.sub, self.right_iso)
        second = push_values(cup_product(phi, self.unit_cocycle, self.left_tensor, target), self.seq.sub, self.left_iso)
        sign = lam.field.one if (p + q + 1) % 2 == 0 else -lam.field.one
        return add_cochains(first, second, sign)


def connecting_via_cup(seq: BimoduleSequence, p: int, q: int, phi: Cochain) -> Cochain:
    return CupConnection(seq).delta(p, q, phi)


def delta_cup_direct(seq: BimoduleSequence, p: int, q: int, phi: Cochain) -> Cochain:
    """x_1 φ(x_2..x_{n+1}) + (-1)^{n+1} φ(x_1..x_n) x_{n+1} on the spot (p+1,q), n = p+q."""
    lam = seq.split
    sub = seq.sub
    field = lam.field
    zero = field.zero
    n = p + q
    sign = field.one if (n + 1) % 2 == 0 else -field.one
    da = lam.base.dim
    target = WordBasis.of_split(lam, p + 1, q)
    values = {}
    for k, w in enumerate(target.words):
        out: dict[int, Any] = {}
        if w[0] >= da:
            for a, y in phi.value(w[1:]).items():
                add_scaled(out, sub.right[w[0] - da][a], y, zero)
        if w[-1] >= da:
            for a, y in phi.value(w[:-1]).items():
                add_scaled(out, sub.left[a][w[-1] - da], sign * y, zero)
        if out:
            values[k] = out
    return Cochain(target, sub, values)


def cup_with_product(seq: BimoduleSequence) -> Matrix:
    """1_M ⌣ 1_M followed by the product map M (x)_Λ M -> M, as a column vector on words of length 2."""
    lam = seq.split
    unit = identity_cocycle(seq)
    tp = tensor_over(seq.sub, seq.sub)
    product = tp.induced(lambda m, n: lam.product[m][n], seq.sub.dim)
    target = WordBasis.all(lam.dim, 2)
    square = push_values(cup_product(unit, unit, tp, target), seq.sub, product)
    return Matrix.from_columns([square.to_vector()], len(target) * seq.sub.dim, lam.field)
