"""Randomized computation of the generic initial ideal rgin(I).

A trial applies one random invertible integer change of coordinates and takes
the DegRevLex leading-term ideal of the transformed ideal.  Two independent
trials must agree before a result is accepted; by Galligo's theorem the
agreed ideal is strongly stable (checked, failure aborts), and disagreement
is retried with fresh matrices up to five pairs.

Strongly stable monomial input is its own rgin, so for that case the result
is certified combinatorially without sampling.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from functools import lru_cache

from .errors import GenericityError, InvariantViolation, SemanticError
from .groebner import buchberger, leading_term_ideal
from .monomial_ideals import MonomialIdeal, is_strongly_stable
from .polynomials import (
    Ideal,
    Polynomial,
    _substitute_linear,
    determinant,
    poly_from_int_dict,
    primitive_int_dict,
)
from .rings import DEGREVLEX

MATRIX_ENTRY_BOUND = 1000
MAX_TRIAL_PAIRS = 5


@dataclass(frozen=True)
class GinResult:
    """Outcome of an rgin computation.

    ``method`` is "randomized" when two agreeing random trials produced the
    ideal, "borel-fixed" when the input was a strongly stable monomial ideal
    (its own rgin, no sampling needed), and "zero" for the zero ideal.
    """

    rgin: MonomialIdeal
    trials_used: int
    seed: int
    agreed: bool
    method: str = "randomized"

    @property
    def regularity(self) -> int:
        return self.rgin.max_generator_degree


def derive_rng(seed: int, *labels) -> random.Random:
    """A deterministic RNG derived from the seed and a label tuple."""
    material = repr((seed,) + labels).encode()
    digest = hashlib.sha256(material).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def random_invertible_matrix(rng: random.Random, n: int,
                             bound: int = MATRIX_ENTRY_BOUND) -> list[list[int]]:
    """A uniformly sampled integer matrix, resampled until invertible."""
    while True:
        mat = [[rng.randint(-bound, bound) for _ in range(n)] for _ in range(n)]
        if determinant(mat) != 0:
            return mat


def _transformed_ideal(ideal: Ideal, matrix) -> Ideal:
    n = ideal.ring.arity
    gens = []
    for g in ideal.generators:
        p, _ = primitive_int_dict(g)
        q = _substitute_linear(p, matrix, n)
        gens.append(poly_from_int_dict(ideal.ring, q))
    return Ideal(ideal.ring, tuple(gens))


def _leading_terms_of_trial(ideal: Ideal, seed: int, trial: int) -> MonomialIdeal:
    rng = derive_rng(seed, "rgin-trial", trial)
    matrix = random_invertible_matrix(rng, ideal.ring.arity)
    gb = buchberger(_transformed_ideal(ideal, matrix), DEGREVLEX)
    return leading_term_ideal(gb)


def _monomial_presentation(ideal: Ideal) -> MonomialIdeal | None:
    if not all(g.is_monomial for g in ideal.generators):
        return None
    return MonomialIdeal.of(
        ideal.ring, [g.leading_monomial() for g in ideal.generators]
    )


@lru_cache(maxsize=256)
def rgin(ideal: Ideal, seed: int) -> GinResult:
    """The generic initial ideal of I with respect to DegRevLex."""
    if not ideal.is_homogeneous:
        raise SemanticError("rgin needs homogeneous generators")
    if ideal.is_zero:
        return GinResult(MonomialIdeal.zero(ideal.ring), 0, seed, True, "zero")

    monomial = _monomial_presentation(ideal)
    if monomial is not None and is_strongly_stable(monomial):
        return GinResult(monomial, 0, seed, True, "borel-fixed")

    for attempt in range(MAX_TRIAL_PAIRS):
        first = _leading_terms_of_trial(ideal, seed, 2 * attempt)
        second = _leading_terms_of_trial(ideal, seed, 2 * attempt + 1)
        if first == second:
            if not is_strongly_stable(first):
                raise InvariantViolation(
                    f"agreed leading-term ideal {first} is not strongly stable; "
                    "this contradicts Galligo's theorem in characteristic 0"
                )
            return GinResult(first, 2 * (attempt + 1), seed, True, "randomized")
    raise GenericityError(
        f"genericity not reached: {MAX_TRIAL_PAIRS} pairs of random changes of "
        f"coordinates disagreed (seed {seed})"
    )


def regularity(ideal: Ideal, seed: int) -> int:
    """Castelnuovo-Mumford regularity: the top degree among rgin's generators."""
    if ideal.is_zero:
        raise SemanticError("the zero ideal has no regularity here")
    return rgin(ideal, seed).regularity


def is_saturated(ideal: Ideal, seed: int) -> bool:
    """Whether I = I : m, decided by rgin having no generator involving x_n.

    In characteristic 0 with DegRevLex this test is exact: killing x_n leaves
    rgin unchanged iff P/I and P/I^sat share their Hilbert function iff the
    ideals coincide.
    """
    result = rgin(ideal, seed)
    last = result.rgin.ring.arity - 1
    return all(t[last] == 0 for t in result.rgin.min_gens)
