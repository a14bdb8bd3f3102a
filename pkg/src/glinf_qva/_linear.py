"""Finite rational linear combinations over hashable basis labels.

Every vector-like object in the package (exponential polynomials, Lie
algebra elements, PBW vectors, module vectors) is a subclass of
:class:`LinearCombination`.  Instances are immutable and canonical: zero
coefficients are never stored, so ``==`` is exact equality of elements.
"""

from __future__ import annotations

from collections.abc import Hashable, Iterable, Mapping
from fractions import Fraction
from numbers import Rational
from typing import Any, TypeVar

T = TypeVar("T", bound="LinearCombination")

Scalar = Fraction


def as_fraction(q: Any) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to :class:`Fraction`.

    Floats are rejected; nothing in this package is inexact.
    """
    if isinstance(q, Fraction):
        return q
    if isinstance(q, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(q, (int, Rational)):
        return Fraction(q)
    if isinstance(q, str):
        return Fraction(q.strip())
    raise TypeError(f"not an exact rational: {q!r}")


def format_fraction(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class LinearCombination:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Hashable, Any] | Iterable[tuple[Hashable, Any]] = ()):
        acc: dict[Hashable, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for key, coeff in items:
            acc[key] = acc.get(key, Fraction(0)) + as_fraction(coeff)
        self._terms = {k: v for k, v in acc.items() if v}
        self._hash = None

    @classmethod
    def _raw(cls: type[T], terms: dict) -> T:
        # terms must already be zero-free
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    def _same_kind(self, other: Any) -> bool:
        return type(other) is type(self)

    @property
    def terms(self) -> Mapping[Hashable, Fraction]:
        return self._terms

    def coeff(self, key: Hashable) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms.items())

    def __add__(self: T, other: T) -> T:
        if not self._same_kind(other):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._rebuild(out, other, 1)

    def __sub__(self: T, other: T) -> T:
        if not self._same_kind(other):
            return NotImplemented
        return self + (-other)

    def __neg__(self: T) -> T:
        return self.scale(-1)

    def scale(self: T, q: Any) -> T:
        q = as_fraction(q)
        if not q:
            return self._rebuild({}, None, 0)
        return self._rebuild({k: q * v for k, v in self._terms.items()}, None, q)

    def __mul__(self: T, q: Any) -> T:
        if isinstance(q, LinearCombination):
            return NotImplemented
        try:
            return self.scale(q)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def _rebuild(self: T, terms: dict, other: T | None, factor) -> T:
        """Hook for subclasses carrying extra components (central charge)."""
        return self._raw(terms)

    def _key(self):
        return frozenset(self._terms.items())

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int) and other == 0:
            return self.is_zero()
        if not self._same_kind(other):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self._key()))
        return self._hash

    def sorted_terms(self) -> list[tuple[Hashable, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: self.sort_key(kv[0]))

    @staticmethod
    def sort_key(key):
        return key

    def __repr__(self) -> str:
        if type(self).__str__ is object.__str__:
            return f"{type(self).__name__}({self._terms!r})"
        return f"{type(self).__name__}({self})"


class CentralCombination(LinearCombination):
    """Linear combination plus a separately stored central coefficient."""

    __slots__ = ("central",)

    def __init__(self, terms=(), central: Any = 0):
        super().__init__(terms)
        self.central = as_fraction(central)

    @classmethod
    def _raw(cls, terms: dict, central: Fraction = Fraction(0)):
        obj = super()._raw(terms)
        obj.central = central
        return obj

    def is_zero(self) -> bool:
        return not self._terms and not self.central

    def _rebuild(self, terms, other, factor):
        if other is not None:
            central = self.central + other.central
        else:
            central = self.central * factor
        return self._raw(terms, central)

    def _key(self):
        return (frozenset(self._terms.items()), self.central)

    def without_central(self):
        return self._raw(dict(self._terms), Fraction(0))
