# Exact scalar fields: the rationals and prime fields, backed by sympy domains
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any

from sympy import isprime
from sympy.polys.domains import GF, QQ

from config import FieldKind

from .errors import InputError


@lru_cache(maxsize=None)
def _domain(kind: FieldKind, characteristic: int):
    if kind == FieldKind.RATIONALS:
        return QQ
    return GF(characteristic, symmetric=False)


@dataclass(frozen=True)
class FieldSpec:
    kind: FieldKind
    characteristic: int

    def __post_init__(self):
        if self.kind == FieldKind.RATIONALS and self.characteristic != 0:
            raise InputError("the rationals have characteristic 0")
        if self.kind == FieldKind.PRIME and not isprime(self.characteristic):
            raise InputError(f"characteristic {self.characteristic} is not prime")

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls(FieldKind.RATIONALS, 0)

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls(FieldKind.PRIME, p)

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """
        Parse the command-line field notation.

        Example:
            >>> FieldSpec.parse("Q")
            >>> FieldSpec.parse("Fp:2")
        """
        text = text.strip()
        if text == FieldKind.RATIONALS:
            return cls.rationals()
        head, _, tail = text.partition(":")
        if head != FieldKind.PRIME or not tail.isdigit():
            raise InputError(f"unknown field '{text}', expected Q or Fp:p")
        return cls.prime(int(tail))

    @property
    def domain(self):
        return _domain(self.kind, self.characteristic)

    @property
    def zero(self):
        return self.domain.zero

    @property
    def one(self):
        return self.domain.one

    @property
    def label(self) -> str:
        if self.kind == FieldKind.RATIONALS:
            return "Q"
        return f"Fp:{self.characteristic}"

    def __call__(self, value: Any):
        """Convert an int, Fraction, 'p/q' string or domain element."""
        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError) as e:
                raise InputError(f"invalid scalar literal '{value}'") from e
        if isinstance(value, Fraction):
            return self._fraction(value.numerator, value.denominator)
        if isinstance(value, int):
            return self.domain(value)
        return self.domain.convert(value)

    def _fraction(self, numerator: int, denominator: int):
        K = self.domain
        if self.kind == FieldKind.RATIONALS:
            return K(numerator, denominator)
        if denominator % self.characteristic == 0:
            raise InputError(
                f"denominator {denominator} vanishes in characteristic {self.characteristic}"
            )
        return K.quo(K(numerator), K(denominator))

    def format(self, value) -> str:
        """Exact text for a field element: '3', '-1/2', or a residue in [0,p)."""
        if self.kind == FieldKind.RATIONALS:
            if value.denominator == 1:
                return str(value.numerator)
            return f"{value.numerator}/{value.denominator}"
        return str(int(value) % self.characteristic)

    def is_zero(self, value) -> bool:
        return value == self.domain.zero
