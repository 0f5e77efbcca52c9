"""Shared fixtures: named example ideals, their published matrices, a corpus."""

from __future__ import annotations

import random
from pathlib import Path

import pytest

from secmat import Ideal, Ring, parse_document, parse_polynomial

FIXTURES = Path(__file__).parent / "fixtures"

SEED = 42

# Sectional matrices as published, keyed by fixture name.  Each value is the
# list of rows i = 1..n over the printed column range starting at degree 0.
GOLDEN_MATRICES = {
    "ex_first": [
        [1, 1, 1, 0, 0, 0, 0, 0],
        [1, 2, 3, 3, 2, 1, 0, 0],
        [1, 3, 6, 9, 11, 12, 12, 12],
    ],
    "ex_conca_lt": [
        [1, 1, 1, 0, 0, 0, 0, 0],
        [1, 2, 3, 3, 2, 1, 1, 0],
        [1, 3, 6, 9, 11, 12, 12, 12],
    ],
    "ex_regexampletrunc": [
        [1, 1, 1, 1, 0, 0, 0, 0, 0],
        [1, 2, 3, 4, 4, 3, 2, 1, 1],
        [1, 3, 6, 10, 14, 17, 19, 20, 21],
        [1, 4, 10, 20, 34, 51, 70, 90, 111],
    ],
    "ex_before_reg": [
        [1, 1, 0, 0, 0, 0],
        [1, 2, 1, 1, 1, 1],
        [1, 3, 4, 4, 5, 6],
        [1, 4, 8, 11, 15, 21],
    ],
    "ex_dim_deg": [
        [1, 1, 1, 0, 0, 0, 0, 0],
        [1, 2, 3, 1, 1, 1, 1, 1],
        [1, 3, 6, 7, 7, 8, 9, 10],
        [1, 4, 10, 17, 24, 32, 40, 50],
    ],
    "gcd_line": [
        [1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
        [1, 2, 2, 1, 1, 0, 0, 0, 0, 0],
        [1, 3, 5, 6, 6, 4, 3, 2, 1, 1],
    ],
    "stable5": [
        [1, 1, 1, 1, 1, 0, 0, 0, 0],
        [1, 2, 3, 4, 5, 1, 1, 1, 1],
        [1, 3, 6, 10, 15, 13, 14, 14, 15],
        [1, 4, 10, 20, 35, 47, 61, 75, 90],
        [1, 5, 15, 35, 70, 117, 178, 253, 343],
    ],
    "ex_8_1_i": [
        [1, 1, 0, 0, 0],
        [1, 2, 1, 0, 0],
        [1, 3, 3, 0, 0],
    ],
    "ex_8_1_j": [
        [1, 1, 0, 0, 0],
        [1, 2, 0, 0, 0],
        [1, 3, 3, 0, 0],
    ],
    "ex_8_2_i": [
        [1, 1, 1, 1, 1, 0, 0],
        [1, 2, 3, 4, 5, 1, 1],
        [1, 3, 6, 10, 15, 11, 12],
    ],
    "ex_8_3_i": [
        [1, 1, 1, 1, 1, 0, 0, 0],
        [1, 2, 3, 4, 5, 1, 1, 1],
        [1, 3, 6, 10, 15, 12, 12, 13],
    ],
    "ex_8_4": [
        [1, 1, 1, 1, 0, 0, 0, 0, 0],
        [1, 2, 3, 4, 2, 0, 0, 0, 0],
        [1, 3, 6, 10, 12, 12, 7, 0, 0],
    ],
}
GOLDEN_MATRICES["ex_8_2_j"] = GOLDEN_MATRICES["ex_8_2_i"]
GOLDEN_MATRICES["ex_8_3_j"] = GOLDEN_MATRICES["ex_8_3_i"]

# Published minimal generators of rgin, keyed by fixture name.
GOLDEN_RGINS = {
    "ex_first": "x^3, x^2*y^2, x*y^4, y^6",
    "z5_xyz3": "x^5, x^4*y, x^3*y^3",
    "ex_before_reg": "x^2, x*y, x*z^2, x*z*w, x*w^3",
    "ex_8_3_i": (
        "x^5, x^4*y, x^3*y^2, x^2*y^3, x*y^4, x^4*z, x^3*y*z, x^2*y^2*z, "
        "x^3*z^2, x^2*y*z^3"
    ),
    "ex_8_3_j": (
        "x^5, x^4*y, x^3*y^2, x^2*y^3, x*y^4, x^4*z, x^3*y*z, x^2*y^2*z, "
        "x*y^3*z, x^3*z^3"
    ),
}


def load_ideal(name: str) -> Ideal:
    text = (FIXTURES / f"{name}.ideal").read_text(encoding="utf-8")
    return parse_document(text).ideal()


def monomials_of(ring: Ring, listing: str):
    """Parse a comma-separated monomial listing into exponent tuples."""
    return {
        tuple(parse_polynomial(part.strip(), ring).leading_monomial())
        for part in listing.split(",")
    }


@pytest.fixture(scope="session")
def examples() -> dict[str, Ideal]:
    return {path.stem: load_ideal(path.stem) for path in FIXTURES.glob("*.ideal")}


def random_homogeneous_ideal(rng: random.Random) -> Ideal:
    """A small random homogeneous ideal: n <= 4, <= 4 generators, degrees <= 5."""
    n = rng.choice([2, 3, 3, 4])
    ring = Ring(tuple("xyzw"[:n]))
    count = rng.randint(2, 4)
    gens = []
    for _ in range(count):
        degree = rng.choice([1, 2, 2, 3, 3, 4, 5])
        terms = {}
        for _ in range(rng.randint(1, 3)):
            cuts = sorted(rng.randint(0, degree) for _ in range(n - 1))
            expo = tuple(
                b - a for a, b in zip([0] + cuts, cuts + [degree])
            )
            terms[expo] = terms.get(expo, 0) + rng.choice(
                [-3, -2, -1, 1, 1, 2, 3]
            )
        poly = parse_polynomial("0", ring)
        from secmat import Polynomial

        poly = Polynomial(ring, terms)
        if not poly.is_zero:
            gens.append(poly)
    if not gens:
        gens = [Polynomial.variable(ring, ring.variables[0])]
    return Ideal(ring, tuple(gens))


@pytest.fixture(scope="session")
def corpus() -> list[Ideal]:
    """50 seeded random homogeneous ideals for the property suites."""
    rng = random.Random(20250809)
    ideals = []
    while len(ideals) < 50:
        ideal = random_homogeneous_ideal(rng)
        if not ideal.is_zero:
            ideals.append(ideal)
    return ideals
