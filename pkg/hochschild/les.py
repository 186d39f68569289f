# The long exact sequence of 0 -> M -> Λ -> Λ/M -> 0 and its connecting map
import logging
from dataclasses import dataclass

from algebras.algebra import center
from algebras.bimodule import bimodule_invariants, symmetric_actors
from algebras.split import BimoduleSequence
from core.models import BidegreeBlock, CenterReport, LESNode, LESReport
from linalg.errors import HypothesisError, VerificationError
from linalg.matrix import Matrix, intersection_dim

from .bigraded import BigradedComplex
from .cochains import WordBasis, coboundary_matrix
from .complexes import CochainComplex, Cohomology, hochschild_complex

logger = logging.getLogger(__name__)


def _coefficient_map(words: int, source_dim: int, target_dim: int, pairs, field) -> Matrix:
    """Cochain map induced on every word by a coordinate map given as (source c, target c) pairs."""
    entries = {}
    for w in range(words):
        for c, t in pairs:
            entries[w * target_dim + t] = {w * source_dim + c: field.one}
    return Matrix.from_entries(entries, (words * target_dim, words * source_dim), field)


class SequenceMaps:
    """Inclusion, projection, section and the M-part of cochains on a word basis."""

    def __init__(self, seq: BimoduleSequence):
        self.seq = seq
        lam = seq.split
        self.da, self.dm, self.dl = lam.base.dim, lam.ideal.dim, lam.dim
        self.field = lam.field

    def inclusion(self, words: int) -> Matrix:
        return _coefficient_map(words, self.dm, self.dl, [(c, self.da + c) for c in range(self.dm)], self.field)

    def projection(self, words: int) -> Matrix:
        return _coefficient_map(words, self.dl, self.da, [(c, c) for c in range(self.da)], self.field)

    def section(self, words: int) -> Matrix:
        return _coefficient_map(words, self.da, self.dl, [(c, c) for c in range(self.da)], self.field)

    def ideal_part(self, words: int) -> Matrix:
        return _coefficient_map(words, self.dl, self.dm, [(self.da + c, c) for c in range(self.dm)], self.field)


@dataclass
class LESComplexes:
    sub: CochainComplex
    middle: CochainComplex
    quotient: CochainComplex

    @classmethod
    def build(cls, seq: BimoduleSequence, max_degree: int) -> "LESComplexes":
        lam = seq.split.total
        return cls(
            hochschild_complex(lam, seq.sub, max_degree),
            hochschild_complex(lam, seq.middle, max_degree),
            hochschild_complex(lam, seq.quotient, max_degree),
        )


def snake_images(seq: BimoduleSequence, n: int, cocycles: Matrix, middle: CochainComplex) -> Matrix:
    """
    d(s φ) for the columns φ of `cocycles` in C^n(Λ, Λ/M), read as M-valued (n+1)-cochains.

    s is the section Λ/M = A ⊂ Λ fixed by the basis split.
    """
    maps = SequenceMaps(seq)
    words, next_words = maps.dl**n, maps.dl ** (n + 1)
    lifted = middle.d(n) @ (maps.section(words) @ cocycles)
    if not (maps.projection(next_words) @ lifted).is_zero():
        raise VerificationError(f"the lift of a cocycle leaves M after d in degree {n}")
    return maps.ideal_part(next_words) @ lifted


@dataclass
class ConnectingMap:
    degree: int
    matrix: Matrix

    @property
    def rank(self) -> int:
        return self.matrix.rank()


def connecting_via_snake(seq: BimoduleSequence, n: int, complexes: LESComplexes | None = None) -> ConnectingMap:
    """δ^n: H^n(Λ,Λ/M) -> H^{n+1}(Λ,M) in the bases of class representatives."""
    if complexes is None or complexes.sub.max_degree < n + 1:
        complexes = LESComplexes.build(seq, n + 1)
    source = Cohomology(complexes.quotient, n)
    target = Cohomology(complexes.sub, n + 1)
    images = snake_images(seq, n, source.representatives, complexes.middle)
    coords = target.coordinates(images.columns())
    matrix = Matrix.from_columns(coords, target.dim, seq.split.field)
    logger.info(f"🐍 δ^{n} on {seq.split.name}: {source.dim} -> {target.dim}, rank {matrix.rank()}")
    return ConnectingMap(n, matrix)


def bidegree_blocks(seq: BimoduleSequence, n: int) -> list[BidegreeBlock]:
    """
    The blocks δ^{p,q}: H^q(C^p(Λ/M)) -> H^q(C^{p+1}(M)) of δ^n, p+q = n.

    Every other block is checked to vanish at the cochain level.
    """
    lam = seq.split
    if not lam.square_zero:
        raise HypothesisError(f"bidegree blocks need M² = 0 on {lam.name}")
    quotient = BigradedComplex(lam, seq.quotient, n)
    sub = BigradedComplex(lam, seq.sub, n + 1)
    maps = SequenceMaps(seq)
    blocks = []
    for p, q in quotient.spots(n):
        cocycles = quotient.dv(p, q).kernel_matrix()
        source = WordBasis.of_split(lam, p, q)
        lifted = maps.section(len(source)) @ cocycles
        for tp, tq in quotient.spots(n + 1):
            target = WordBasis.of_split(lam, tp, tq)
            image = coboundary_matrix(lam.total, seq.middle, source, target) @ lifted
            if not (maps.projection(len(target)) @ image).is_zero():
                raise VerificationError(f"the lift from ({p},{q}) leaves M")
            if (tp, tq) != (p + 1, q):
                if not image.is_zero():
                    raise VerificationError(f"δ^{n} has a nonzero block ({p},{q}) -> ({tp},{tq})")
                continue
            values = maps.ideal_part(len(target)) @ image
            if q == 0:
                rank = values.rank()
            else:
                rank = sub.dv(p + 1, q - 1).relative_rank(values)
            blocks.append(BidegreeBlock(p=p, q=q, rank=rank))
    return blocks


def center_report(seq: BimoduleSequence, kernel_delta0: int) -> CenterReport:
    lam = seq.split
    a = lam.base
    base_part = intersection_dim(center(a), symmetric_actors(a, lam.ideal))
    ideal_part = bimodule_invariants(lam.total, seq.sub).cols
    return CenterReport(
        center=center(lam.total).cols,
        base_part=base_part,
        ideal_part=ideal_part,
        kernel_delta0=kernel_delta0,
    )


def assemble_les(seq: BimoduleSequence, max_degree: int, strict: bool = True) -> LESReport:
    """
    The three cohomology rows and the ranks of the maps between them up to max_degree.

    rank i_n = rank([B_Λ | i Z_M]) - rank B_Λ, rank π_n likewise, and rank δ_n is the
    rank of the snake images modulo the coboundaries of C^{n+1}(Λ, M).
    """
    lam = seq.split
    complexes = LESComplexes.build(seq, max_degree)
    maps = SequenceMaps(seq)
    sub, middle, quotient = complexes.sub, complexes.middle, complexes.quotient
    inclusion_ranks, projection_ranks, connecting_ranks = [], [], []
    for n in range(max_degree + 1):
        words = maps.dl**n
        inclusion_ranks.append(middle.coboundaries(n).relative_rank(maps.inclusion(words) @ sub.cocycles(n)))
        z_middle = middle.cocycles(n)
        projection_ranks.append(quotient.coboundaries(n).relative_rank(maps.projection(words) @ z_middle))
        images = snake_images(seq, n, quotient.cocycles(n), middle)
        connecting_ranks.append(sub.d(n).relative_rank(images))
        composite = snake_images(seq, n, maps.projection(words) @ z_middle, middle)
        if sub.d(n).relative_rank(composite) != 0:
            raise VerificationError(f"δ^{n} π^{n} != 0 on {lam.name}")
    sub_dims, middle_dims, quotient_dims = sub.dims(), middle.dims(), quotient.dims()
    nodes = []
    for n in range(max_degree + 1):
        nodes.append(
            LESNode(
                label="M",
                degree=n,
                dim=sub_dims[n],
                rank_in=connecting_ranks[n - 1] if n else 0,
                rank_out=inclusion_ranks[n],
            )
        )
        nodes.append(LESNode(label="Λ", degree=n, dim=middle_dims[n], rank_in=inclusion_ranks[n], rank_out=projection_ranks[n]))
        nodes.append(
            LESNode(label="Λ/M", degree=n, dim=quotient_dims[n], rank_in=projection_ranks[n], rank_out=connecting_ranks[n])
        )
    report = LESReport(
        algebra=lam.name,
        max_degree=max_degree,
        sub=sub_dims,
        middle=middle_dims,
        quotient=quotient_dims,
        inclusion_ranks=inclusion_ranks,
        projection_ranks=projection_ranks,
        connecting_ranks=connecting_ranks,
        nodes=nodes,
        center=center_report(seq, quotient_dims[0] - connecting_ranks[0]),
    )
    if lam.square_zero:
        report.blocks = {n: bidegree_blocks(seq, n) for n in range(max_degree + 1)}
    for node in nodes:
        if not node.exact:
            logger.warning(f"⚠️  not exact at H^{node.degree}(Λ, {node.label}) of {lam.name}")
            if strict:
                raise VerificationError(f"long exact sequence of {lam.name} is not exact at H^{node.degree}({node.label})")
    logger.info(f"🔗 LES of {lam.name} up to {max_degree}: exact = {report.exact}")
    return report
