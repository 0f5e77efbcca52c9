"""Monomial-ideal combinatorics.

Minimal generators, strong stability (Borel moves), variable restriction,
Hilbert function and series data, colon/saturation, and a brute-force
counting oracle.  Three independent routes to the Hilbert function of P/J
coexist on purpose:

* ``hilbert_function_value`` - a colon/restriction recursion on counts,
* ``hilbert_numerator`` - the pivot splitting for the series numerator,
* ``count_monomials_oracle`` - plain enumeration (guarded).

Tests pin them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import EnumerationGuardError
from .rings import PowerProduct, Ring


def minimalize(pps) -> frozenset[PowerProduct]:
    """The divisibility antichain generating the same monomial ideal."""
    pps = sorted({PowerProduct(t) for t in pps}, key=lambda t: t.degree)
    kept: list[PowerProduct] = []
    for t in pps:
        if not any(u.divides(t) for u in kept):
            kept.append(t)
    return frozenset(kept)


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal stored by its minimal generators."""

    ring: Ring
    min_gens: frozenset[PowerProduct]

    def __post_init__(self):
        for t in self.min_gens:
            if len(t) != self.ring.arity:
                raise ValueError(f"generator {t} has wrong arity for {self.ring}")
        object.__setattr__(self, "min_gens", minimalize(self.min_gens))

    @classmethod
    def of(cls, ring: Ring, pps) -> "MonomialIdeal":
        return cls(ring, frozenset(PowerProduct(t) for t in pps))

    @classmethod
    def zero(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, frozenset())

    @classmethod
    def whole_ring(cls, ring: Ring) -> "MonomialIdeal":
        return cls(ring, frozenset({PowerProduct.one(ring.arity)}))

    @property
    def is_zero(self) -> bool:
        return not self.min_gens

    @property
    def is_whole_ring(self) -> bool:
        return PowerProduct.one(self.ring.arity) in self.min_gens

    @property
    def max_generator_degree(self) -> int:
        return max((t.degree for t in self.min_gens), default=0)

    def sorted_gens(self) -> tuple[PowerProduct, ...]:
        return tuple(sorted(self.min_gens, key=lambda t: (t.degree, t)))

    def __str__(self):
        if self.is_zero:
            return "(0)"
        names = self.ring.variables
        pieces = []
        for t in self.sorted_gens():
            mono = "*".join(
                v if e == 1 else f"{v}^{e}" for v, e in zip(names, t) if e
            )
            pieces.append(mono or "1")
        return "(" + ", ".join(pieces) + ")"


def is_member(t: PowerProduct, ideal: MonomialIdeal) -> bool:
    """Whether the monomial t lies in the ideal."""
    if len(t) != ideal.ring.arity:
        raise ValueError("arity mismatch")
    return any(g.divides(t) for g in ideal.min_gens)


def is_strongly_stable(ideal: MonomialIdeal) -> bool:
    """Borel-move closure: x_i * t / x_j stays inside for every i < j, x_j | t.

    Checking the moves on the minimal generators suffices.
    """
    for t in ideal.min_gens:
        for j, e in enumerate(t):
            if not e:
                continue
            for i in range(j):
                moved = list(t)
                moved[j] -= 1
                moved[i] += 1
                if not is_member(PowerProduct(moved), ideal):
                    return False
    return True


def restrict_to_first_vars(ideal: MonomialIdeal, i: int) -> MonomialIdeal:
    """Image of the ideal under x_{i+1}, ..., x_n -> 0, in the i-variable ring.

    Exactly the generators supported on the first i variables survive.  For a
    strongly stable ideal this computes the section by n-i generic hyperplanes.
    """
    small = ideal.ring.first_variables(i)
    kept = [t[:i] for t in ideal.min_gens if all(e == 0 for e in t[i:])]
    return MonomialIdeal.of(small, kept)


# ---------------------------------------------------------------------------
# Hilbert function: colon/restriction recursion on counts
# ---------------------------------------------------------------------------

@lru_cache(maxsize=1 << 16)
def _standard_count(gens: tuple, n: int, d: int) -> int:
    if d < 0:
        return 0
    if any(not any(g) for g in gens):
        return 0
    if not gens:
        return comb(d + n - 1, n - 1)
    if d == 0:
        return 1
    occurrences = [0] * n
    for g in gens:
        for k, e in enumerate(g):
            if e:
                occurrences[k] += 1
    k = max(range(n), key=lambda j: occurrences[j])
    # monomials with no x_k: drop the slot; monomials divisible by x_k: colon
    without = tuple(sorted(g[:k] + g[k + 1:] for g in gens if g[k] == 0))
    colon = tuple(sorted(minimalize(
        g[:k] + (g[k] - 1 if g[k] else 0,) + g[k + 1:] for g in gens
    )))
    return _standard_count(without, n - 1, d) + _standard_count(colon, n, d - 1)


def hilbert_function_value(ideal: MonomialIdeal, d: int) -> int:
    """dim_K (P/J)_d: the number of degree-d monomials outside J."""
    if d < 0:
        raise ValueError("degree must be non-negative")
    gens = tuple(sorted(tuple(t) for t in ideal.min_gens))
    return _standard_count(gens, ideal.ring.arity, d)


# ---------------------------------------------------------------------------
# Hilbert series numerator: pivot splitting
# ---------------------------------------------------------------------------

def _poly1_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] += x * y
    return out


def _poly1_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a or [0]


def _numerator(gens: frozenset[PowerProduct]) -> list[int]:
    if any(t.degree == 0 for t in gens):
        return [0]
    if not gens:
        return [1]
    if all(len(t.support()) == 1 for t in gens):
        out = [1]
        for t in gens:
            factor = [0] * (t.degree + 1)
            factor[0], factor[-1] = 1, -1
            out = _poly1_mul(out, factor)
        return _poly1_trim(out)
    n = len(next(iter(gens)))
    occurrences = [0] * n
    for g in gens:
        if len(g.support()) > 1:
            for k, e in enumerate(g):
                if e:
                    occurrences[k] += 1
    k = max(range(n), key=lambda j: occurrences[j])
    e = min(g[k] for g in gens if g[k] and len(g.support()) > 1)
    pivot = PowerProduct.variable(n, k, e)
    plus = minimalize(set(gens) | {pivot})
    colon = minimalize(
        PowerProduct(g[:k] + (max(g[k] - e, 0),) + g[k + 1:]) for g in gens
    )
    left = _numerator(plus)
    right = _numerator(colon)
    out = [0] * max(len(left), e + len(right))
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[e + i] += c
    return _poly1_trim(out)


@dataclass(frozen=True)
class HilbertNumerator:
    """N(t) with HS_{P/J}(t) = N(t)/(1-t)^n."""

    coefficients: tuple[int, ...]  # ascending powers of t
    arity: int

    def value_at(self, d: int) -> int:
        """Coefficient of t^d in the expanded series."""
        n = self.arity
        return sum(
            c * comb(d - k + n - 1, n - 1)
            for k, c in enumerate(self.coefficients)
            if k <= d
        )

    def values_up_to(self, max_degree: int) -> list[int]:
        return [self.value_at(d) for d in range(max_degree + 1)]


def hilbert_numerator(ideal: MonomialIdeal) -> HilbertNumerator:
    """Series numerator over (1-t)^n via recursive pivot splitting."""
    coeffs = _numerator(ideal.min_gens)
    return HilbertNumerator(tuple(coeffs), ideal.ring.arity)


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

def count_monomials_oracle(ideal: MonomialIdeal, d: int, guard: int = 10**7) -> int:
    """Count degree-d standard monomials by enumeration; guarded by size."""
    n = ideal.ring.arity
    total = comb(d + n - 1, n - 1)
    if total > guard:
        raise EnumerationGuardError(
            f"{total} monomials of degree {d} exceed the guard of {guard}"
        )
    gens = [tuple(t) for t in ideal.min_gens]
    count = 0
    stack = [(0, d, ())]
    while stack:
        k, rest, prefix = stack.pop()
        if k == n - 1:
            t = prefix + (rest,)
            if not any(all(a <= b for a, b in zip(g, t)) for g in gens):
                count += 1
            continue
        for e in range(rest + 1):
            stack.append((k + 1, rest - e, prefix + (e,)))
    return count


# ---------------------------------------------------------------------------
# colon and saturation
# ---------------------------------------------------------------------------

def _intersect_gens(a: frozenset[PowerProduct], b: frozenset[PowerProduct]):
    return minimalize(s.lcm(t) for s in a for t in b)


def colon_by_variable(ideal: MonomialIdeal, k: int) -> MonomialIdeal:
    """J : x_k, computed generator-wise."""
    gens = [
        PowerProduct(t[:k] + (max(t[k] - 1, 0),) + t[k + 1:])
        for t in ideal.min_gens
    ]
    return MonomialIdeal.of(ideal.ring, gens)


def colon_by_irrelevant(ideal: MonomialIdeal) -> MonomialIdeal:
    """J : m for the irrelevant maximal ideal m = (x_1, ..., x_n)."""
    if ideal.is_zero:
        return ideal
    n = ideal.ring.arity
    gens = colon_by_variable(ideal, 0).min_gens
    for k in range(1, n):
        gens = _intersect_gens(gens, colon_by_variable(ideal, k).min_gens)
    return MonomialIdeal(ideal.ring, gens)


def saturate_monomial(ideal: MonomialIdeal) -> MonomialIdeal:
    """Iterate J : m to its fixpoint J^sat."""
    current = ideal
    while True:
        bigger = colon_by_irrelevant(current)
        if bigger.min_gens == current.min_gens:
            return current
        current = bigger


def set_last_variable_to_zero(ideal: MonomialIdeal) -> MonomialIdeal:
    """Generators with x_n -> 0; for strongly stable ideals this is J^sat."""
    n = ideal.ring.arity
    gens = [t for t in ideal.min_gens if t[n - 1] == 0]
    return MonomialIdeal.of(ideal.ring, gens)


def max_standard_monomial_degree(ideal: MonomialIdeal) -> int | None:
    """Largest d with (P/J)_d nonzero, or None when no such maximum exists.

    Finite exactly when J contains a pure power of every variable.
    """
    if ideal.is_whole_ring:
        raise ValueError("the whole ring has no standard monomials")
    n = ideal.ring.arity
    bound = 0
    for k in range(n):
        powers = [t[k] for t in ideal.min_gens if t.support() == (k,)]
        if not powers:
            return None
        bound += min(powers) - 1
    numerator = hilbert_numerator(ideal)
    for d in range(bound, -1, -1):
        if numerator.value_at(d):
            return d
    return 0
