# Trivial extensions TA = A ⊕ DA: the nullhomotopy of δ^{0,q}, bilinear forms on DA and δ^{p,0}
import logging
from collections.abc import Sequence
from dataclasses import dataclass

from algebras.bimodule import dual, hom_space, regular
from algebras.split import BimoduleSequence
from linalg.errors import HypothesisError, VerificationError
from linalg.matrix import Matrix, Vector

from .cochains import Cochain, WordBasis, coboundary_matrix
from .cup import CupConnection, delta_cup_direct

logger = logging.getLogger(__name__)


def require_trivial_extension(seq: BimoduleSequence) -> None:
    """Raise unless Λ = A ⊕ DA with zero product and the dual actions."""
    lam = seq.split
    a, m = lam.base, lam.ideal
    da = dual(regular(a))
    if not lam.square_zero or m.dim != a.dim or m.left != da.left or m.right != da.right:
        raise HypothesisError(f"{lam.name} is not the trivial extension of {a.name}")


def epsilon(n: int, q: int, field):
    """-1 for n odd, (-1)^{q+1} for n even."""
    if n % 2:
        return -field.one
    return field.one if (q + 1) % 2 == 0 else -field.one


def base_cocycle(seq: BimoduleSequence, q: int, phi: Sequence) -> Cochain:
    """A vector of C^q(A, A) as a (0,q)-cochain of Λ with values in Λ/M; raises if it is not a cocycle."""
    lam = seq.split
    source = WordBasis.of_split(lam, 0, q)
    cochain = Cochain.from_vector(source, seq.quotient, phi)
    dv = coboundary_matrix(lam.total, seq.quotient, source, WordBasis.of_split(lam, 0, q + 1))
    if not all(x == lam.field.zero for x in dv.apply(cochain.to_vector())):
        raise HypothesisError(f"the given {q}-cochain of {lam.base.name} is not a cocycle")
    return cochain


@dataclass
class Nullhomotopy:
    phi: Cochain
    homotopy: Cochain
    boundary: Cochain
    delta: Cochain


def nullhomotopy_delta0q(seq: BimoduleSequence, q: int, phi: Sequence) -> Nullhomotopy:
    """
    φ'(a_1..a_n, f, b_1..b_m)(x) = ε(n,q) f(φ(b_1..b_m, x, a_1..a_n)) and the check d_v φ' = δ^{0,q} φ.

    phi is a q-cocycle of A with values in A, in the lexicographic word basis.
    """
    if q < 1:
        raise HypothesisError("the nullhomotopy needs q >= 1")
    require_trivial_extension(seq)
    lam = seq.split
    field = lam.field
    da = lam.base.dim
    cocycle = base_cocycle(seq, q, phi)
    source = WordBasis.of_split(lam, 1, q - 1)
    values = {}
    for k, w in enumerate(source.words):
        n = next(i for i, x in enumerate(w) if x >= da)
        j = w[n] - da
        sign = epsilon(n, q, field)
        out = {}
        for x in range(da):
            y = cocycle.value(w[n + 1 :] + (x,) + w[:n]).get(j)
            if y is not None and y != field.zero:
                out[x] = sign * y
        if out:
            values[k] = out
    homotopy = Cochain(source, seq.sub, values)
    target = WordBasis.of_split(lam, 1, q)
    dv = coboundary_matrix(lam.total, seq.sub, source, target)
    boundary = Cochain.from_vector(target, seq.sub, dv.apply(homotopy.to_vector()))
    delta = delta_cup_direct(seq, 0, q, cocycle)
    if boundary.to_sparse() != delta.to_sparse():
        raise VerificationError(f"d_v φ' != δ^(0,{q}) φ on {lam.name}")
    logger.info(f"🪢 δ^(0,{q}) is d_v of an explicit cochain on {lam.name}")
    return Nullhomotopy(cocycle, homotopy, boundary, delta)


def evaluate_at_unit(seq: BimoduleSequence, value: dict):
    """f(1) for f in DA given in the dual basis."""
    unit = seq.split.base.unit
    total = seq.split.field.zero
    for k, y in value.items():
        total += y * unit[k]
    return total


@dataclass
class BilinearForms:
    """Hom_{A-A}(DA, A) as balanced forms β(f, g) = g(Φ(f)) and the kernel of β -> β + β^t."""

    homs: list[Matrix]
    forms: list[Matrix]
    symmetrized: list[Matrix]
    alternating: Matrix

    @property
    def hom_dim(self) -> int:
        return len(self.homs)

    @property
    def alt_dim(self) -> int:
        return self.alternating.cols


def delta10_bilinear(seq: BimoduleSequence) -> BilinearForms:
    require_trivial_extension(seq)
    a = seq.split.base
    field = a.field
    homs = hom_space(dual(regular(a)), regular(a))
    forms = [phi.transpose() for phi in homs]
    symmetrized = [beta + beta.transpose() for beta in forms]
    d = a.dim
    columns = []
    for s in symmetrized:
        columns.append({r * d + c: y for r, row in s.entries().items() for c, y in row.items()})
    system = Matrix.from_sparse_columns(columns, d * d, field)
    alternating = system.kernel_matrix()
    logger.info(f"🔀 {a.name}: dim Hom(DA, A) = {len(homs)}, dim Alt(DA) = {alternating.cols}")
    return BilinearForms(homs, forms, symmetrized, alternating)


def verify_delta10(seq: BimoduleSequence, forms: BilinearForms) -> bool:
    """δ^{1,0}φ evaluated at 1 is the matrix β + β^t, for every φ in Hom_{A-A}(DA, A)."""
    lam = seq.split
    source = WordBasis.of_split(lam, 1, 0)
    target = WordBasis.of_split(lam, 2, 0)
    da = lam.base.dim
    for phi, sym in zip(forms.homs, forms.symmetrized):
        values = {}
        for k, (m,) in enumerate(source.words):
            col = {c: y for c, row in phi.entries().items() for r, y in row.items() if r == m - da}
            if col:
                values[k] = col
        psi = delta_cup_direct(seq, 1, 0, Cochain(source, seq.quotient, values))
        for k, (f, g) in enumerate(target.words):
            if evaluate_at_unit(seq, psi.values.get(k, {})) != sym.get(f - da, g - da):
                return False
    return True


def column_cocycles(seq: BimoduleSequence, p: int) -> list[Cochain]:
    """A basis of the (p,0)-cochains with values in Λ/M killed by d_v, i.e. balanced maps DA^{(x)p} -> A."""
    lam = seq.split
    source = WordBasis.of_split(lam, p, 0)
    dv = coboundary_matrix(lam.total, seq.quotient, source, WordBasis.of_split(lam, p, 1))
    return [Cochain.from_vector(source, seq.quotient, v) for v in dv.kernel_basis()]


def cyclic_delta_p0(seq: BimoduleSequence, p: int, phi: Cochain) -> Vector:
    """
    tβ + (-1)^{p+1} β on words of p+1 dual basis elements, with β(f_1..f_{p+1}) = f_{p+1}(φ(f_1..f_p))
    and (tβ)(f_1..f_{p+1}) = β(f_2..f_{p+1}, f_1); checked against δ^{p,0}φ = 1_M ⌣ φ ± φ ⌣ 1_M at 1.
    """
    require_trivial_extension(seq)
    lam = seq.split
    field = lam.field
    da = lam.base.dim
    sign = field.one if (p + 1) % 2 == 0 else -field.one
    target = WordBasis.of_split(lam, p + 1, 0)

    def beta(w) -> object:
        return phi.value(w[:-1]).get(w[-1] - da, field.zero)

    form = [beta(w[1:] + w[:1]) + sign * beta(w) for w in target.words]
    psi = CupConnection(seq).delta(p, 0, phi)
    via_cup = [evaluate_at_unit(seq, psi.values.get(k, {})) for k in range(len(target))]
    if form != via_cup:
        raise VerificationError(f"δ^({p},0) on {lam.name} is not the cyclic form tφ + (-1)^(p+1) φ")
    return form
