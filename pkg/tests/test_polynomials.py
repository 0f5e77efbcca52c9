"""Polynomial arithmetic, changes of coordinates, and the multivariate GCD."""

import random
from fractions import Fraction

import pytest

from secmat import (
    DEGREVLEX,
    Ideal,
    Polynomial,
    Ring,
    apply_linear_change,
    divides,
    gcd_of_polynomials,
    multivariate_gcd,
    parse_polynomial,
    try_divide,
)
from secmat.errors import RingMismatchError
from secmat.polynomials import determinant, primitive_int_dict

R3 = Ring.of("x", "y", "z")


def p(text, ring=R3):
    return parse_polynomial(text, ring)


def random_poly(rng, ring=R3, max_degree=4, max_terms=4):
    terms = {}
    n = ring.arity
    for _ in range(rng.randint(0, max_terms)):
        degree = rng.randint(0, max_degree)
        cuts = sorted(rng.randint(0, degree) for _ in range(n - 1))
        expo = tuple(b - a for a, b in zip([0] + cuts, cuts + [degree]))
        terms[expo] = terms.get(expo, 0) + rng.randint(-5, 5)
    return Polynomial(ring, terms)


class TestArithmetic:
    def test_difference_of_squares(self):
        assert p("x + y") * p("x - y") == p("x^2 - y^2")

    def test_additive_identity(self):
        f = p("x^2*y - 3*z + 1/2")
        assert f + Polynomial.zero(R3) == f

    def test_sum_of_cubes(self):
        # expand (x+y)(x^2-xy+y^2) by hand: cross terms cancel pairwise
        assert p("x + y") * p("x^2 - x*y + y^2") == p("x^3 + y^3")

    def test_ring_axioms_on_random_inputs(self):
        rng = random.Random(1234)
        for _ in range(1000):
            f, g, h = (random_poly(rng) for _ in range(3))
            assert (f + g) + h == f + (g + h)
            assert f + g == g + f
            assert f * g == g * f
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h

    def test_canonical_form(self):
        f = p("x*y + y*x")
        assert len(f.terms) == 1
        assert f == p("2*x*y")
        assert p("x - x").is_zero
        for (t1, _), (t2, _) in zip(f.terms, f.terms[1:]):
            assert DEGREVLEX.compare(t1, t2) == 1

    def test_scalar_operations(self):
        f = p("x^2 - y")
        assert f.scale(Fraction(1, 2)) == p("1/2*x^2 - 1/2*y")
        assert 2 * f == p("2*x^2 - 2*y")
        assert (f ** 2) == p("x^4 - 2*x^2*y + y^2")
        assert f - f == Polynomial.zero(R3)

    def test_ring_mismatch_rejected(self):
        other = Ring.of("a", "b")
        with pytest.raises(RingMismatchError):
            p("x") + parse_polynomial("a", other)

    def test_degree_and_homogeneity(self):
        assert p("0").degree == -1
        assert p("x^2*z + y^3").is_homogeneous
        assert not p("x^2 + y^3").is_homogeneous
        assert p("5").degree == 0

    def test_evaluation(self):
        f = p("x^2*y - 2*z")
        assert f.evaluate([1, 2, 3]) == 2 - 6
        assert f.evaluate([Fraction(1, 2), 4, 0]) == Fraction(1)

    def test_primitive_int_form(self):
        f = p("1/2*x^2 - 1/3*y^2")
        d, scale = primitive_int_dict(f)
        assert d == {(2, 0, 0): 3, (0, 2, 0): -2}
        assert scale == Fraction(1, 6)


class TestLinearChange:
    def test_identity(self):
        f = p("x^3 - 2*y*z + z^2")
        eye = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
        assert apply_linear_change(f, eye) == f

    def test_swap_variables(self):
        swap = [[0, 1, 0], [1, 0, 0], [0, 0, 1]]
        assert apply_linear_change(p("x^2"), swap) == p("y^2")

    def test_generic_matrix_by_evaluation(self):
        rng = random.Random(99)
        ring = Ring.of("x", "y")
        f = parse_polynomial("x*y", ring)
        matrix = [[3, 1], [2, 5]]
        image = apply_linear_change(f, matrix)
        assert len(image.terms) == 3
        for _ in range(5):
            point = [Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(2)]
            moved = [
                sum(Fraction(matrix[i][j]) * point[j] for j in range(2))
                for i in range(2)
            ]
            assert image.evaluate(point) == f.evaluate(moved)

    def test_is_ring_homomorphism(self):
        rng = random.Random(7)
        matrix = [[2, 1, 0], [1, 1, 1], [0, 3, 1]]
        assert determinant(matrix) != 0
        for _ in range(25):
            f, g = random_poly(rng), random_poly(rng)
            assert apply_linear_change(f * g, matrix) == apply_linear_change(
                f, matrix
            ) * apply_linear_change(g, matrix)
            assert apply_linear_change(f + g, matrix) == apply_linear_change(
                f, matrix
            ) + apply_linear_change(g, matrix)
            assert apply_linear_change(f, matrix).degree == f.degree

    def test_singular_matrix_rejected(self):
        with pytest.raises(ValueError):
            apply_linear_change(p("x"), [[1, 1, 0], [1, 1, 0], [0, 0, 1]])

    def test_determinant(self):
        assert determinant([[2, 0], [0, 3]]) == 6
        assert determinant([[0, 1], [1, 0]]) == -1
        assert determinant([[1, 2], [2, 4]]) == 0
        assert determinant([[0, 2, 1], [1, 0, 0], [3, 0, 1]]) == -2


class TestGcd:
    def test_common_linear_factor(self):
        g = multivariate_gcd(p("x + y"), p("x^2 - y^2"))
        assert g == p("x + y")
        for f in (p("x + y"), p("x^2 - y^2")):
            assert try_divide(f, g) is not None

    def test_gcd_with_zero(self):
        assert multivariate_gcd(p("2*x + 2*y"), p("0")) == p("x + y")
        assert multivariate_gcd(p("0"), p("0")).is_zero

    def test_coprime(self):
        assert multivariate_gcd(p("x + y"), p("x + z")) == p("1")
        assert multivariate_gcd(p("x"), p("7")) == p("1")

    def test_monomial_gcd(self):
        assert multivariate_gcd(p("x^5"), p("x^4*y")) == p("x^4")

    def test_normalization(self):
        # content cleared, leading coefficient positive
        g = multivariate_gcd(p("-2*x - 2*y"), p("-4*x^2 + -4*x*y"))
        assert g == p("x + y")

    def test_divisor_property_on_random_products(self):
        rng = random.Random(555)
        cases = 0
        while cases < 30:
            d = random_poly(rng, max_degree=2, max_terms=2)
            u = random_poly(rng, max_degree=2, max_terms=2)
            v = random_poly(rng, max_degree=2, max_terms=2)
            if d.is_zero or u.is_zero or v.is_zero:
                continue
            if multivariate_gcd(u, v).degree != 0:
                continue  # keep gcd(u, v) constant so gcd(du, dv) ~ d
            cases += 1
            g = multivariate_gcd(d * u, d * v)
            assert divides(g, d * u) and divides(g, d * v)
            assert try_divide(g, d) is not None or try_divide(d, g) is not None
            # any common divisor (here: d) divides the gcd
            assert divides(d, g)

    def test_iterated_gcd(self):
        polys = [p("x^2 + x*y"), p("x*y + y^2"), p("x*z + y*z")]
        assert gcd_of_polynomials(polys) == p("x + y")

    def test_exact_division(self):
        q = try_divide(p("x^3 + y^3"), p("x + y"))
        assert q == p("x^2 - x*y + y^2")
        assert try_divide(p("x^3 + y^3 + 1"), p("x + y")) is None
        with pytest.raises(ZeroDivisionError):
            try_divide(p("x"), p("0"))


class TestIdeal:
    def test_zero_generators_dropped(self):
        ideal = Ideal(R3, (p("x"), p("0"), p("y")))
        assert len(ideal.generators) == 2
        assert not ideal.is_zero

    def test_zero_ideal(self):
        z = Ideal.zero(R3)
        assert z.is_zero
        assert z.is_homogeneous
        assert z.max_generator_degree == 0

    def test_degree_summaries(self):
        ideal = Ideal.of(p("x^2"), p("y^3 - x^2*z"))
        assert ideal.max_generator_degree == 3
        assert ideal.min_generator_degree == 2
        assert ideal.is_homogeneous
