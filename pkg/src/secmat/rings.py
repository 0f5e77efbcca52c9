"""Polynomial rings, exponent vectors, and term orders.

Variables are totally ordered by their position in the ring declaration:
the first variable is the largest.  All three supported term orders refine
this variable order; DegRevLex is the default everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .errors import RingMismatchError


@dataclass(frozen=True)
class Ring:
    """A polynomial ring over the rationals with named, ordered variables."""

    variables: tuple[str, ...]

    def __post_init__(self):
        if not self.variables:
            raise ValueError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise ValueError(f"duplicate variable names in {self.variables}")

    @classmethod
    def of(cls, *names: str) -> "Ring":
        return cls(tuple(names))

    @property
    def arity(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise KeyError(f"unknown variable {name!r}") from None

    def first_variables(self, i: int) -> "Ring":
        """The subring on the largest i variables."""
        if not 1 <= i <= self.arity:
            raise ValueError(f"need 1 <= i <= {self.arity}, got {i}")
        return Ring(self.variables[:i])

    def __str__(self):
        return "Q[" + ", ".join(self.variables) + "]"


class PowerProduct(tuple):
    """Exponent vector of a monomial; the atomic combinatorial object."""

    __slots__ = ()

    def __new__(cls, exponents: Iterable[int]):
        t = tuple.__new__(cls, exponents)
        if any(e < 0 for e in t):
            raise ValueError(f"negative exponent in {t}")
        return t

    @property
    def degree(self) -> int:
        return sum(self)

    def divides(self, other: "PowerProduct") -> bool:
        return len(self) == len(other) and all(a <= b for a, b in zip(self, other))

    def times(self, other: "PowerProduct") -> "PowerProduct":
        return PowerProduct(a + b for a, b in zip(self, other))

    def divided_by(self, other: "PowerProduct") -> "PowerProduct":
        return PowerProduct(a - b for a, b in zip(self, other))

    def lcm(self, other: "PowerProduct") -> "PowerProduct":
        return PowerProduct(max(a, b) for a, b in zip(self, other))

    def gcd(self, other: "PowerProduct") -> "PowerProduct":
        return PowerProduct(min(a, b) for a, b in zip(self, other))

    def support(self) -> tuple[int, ...]:
        """Indices of variables that occur."""
        return tuple(k for k, e in enumerate(self) if e)

    @classmethod
    def one(cls, arity: int) -> "PowerProduct":
        return cls((0,) * arity)

    @classmethod
    def variable(cls, arity: int, k: int, power: int = 1) -> "PowerProduct":
        return cls(power if j == k else 0 for j in range(arity))


def _key_lex(t):
    return tuple(t)


def _key_deglex(t):
    return (sum(t), tuple(t))


def _key_degrevlex(t):
    # Higher degree wins; ties: the last nonzero entry of the difference
    # decides, with a *smaller* trailing part winning.  Negating the
    # reversed exponents turns that rule into plain tuple comparison.
    return (sum(t), tuple(-e for e in reversed(t)))


def _heapkey_lex(t):
    return tuple(-e for e in t)


def _heapkey_deglex(t):
    return (-sum(t), tuple(-e for e in t))


def _heapkey_degrevlex(t):
    return (-sum(t), tuple(reversed(t)))


class TermOrder(Enum):
    """Total orders on power products, compatible with multiplication."""

    DEGREVLEX = "degrevlex"
    LEX = "lex"
    DEGLEX = "deglex"

    def sort_key(self, t):
        """Key that sorts power products ascending in this order."""
        return _SORT_KEYS[self](t)

    def heap_key(self, t):
        """Key that sorts power products descending (for min-heaps)."""
        return _HEAP_KEYS[self](t)

    def compare(self, a, b) -> int:
        """-1, 0, or 1 as a is below, equal to, or above b."""
        if len(a) != len(b):
            raise RingMismatchError(f"arity mismatch: {len(a)} vs {len(b)}")
        ka, kb = self.sort_key(a), self.sort_key(b)
        return (ka > kb) - (ka < kb)

    @classmethod
    def from_name(cls, name: str) -> "TermOrder":
        try:
            return cls(name.lower())
        except ValueError:
            raise ValueError(f"unknown term order {name!r}") from None


_SORT_KEYS = {
    TermOrder.DEGREVLEX: _key_degrevlex,
    TermOrder.LEX: _key_lex,
    TermOrder.DEGLEX: _key_deglex,
}

_HEAP_KEYS = {
    TermOrder.DEGREVLEX: _heapkey_degrevlex,
    TermOrder.LEX: _heapkey_lex,
    TermOrder.DEGLEX: _heapkey_deglex,
}

DEGREVLEX = TermOrder.DEGREVLEX
LEX = TermOrder.LEX
DEGLEX = TermOrder.DEGLEX


def compare(a: PowerProduct, b: PowerProduct, order: TermOrder) -> int:
    """Compare two power products of the same ring under the given order."""
    return order.compare(a, b)
