"""The expression grammar, document parsing, and print/parse round trips."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from secmat import ParseError, Polynomial, Ring, parse_document, parse_polynomial

R3 = Ring.of("x", "y", "z")


def p(text):
    return parse_polynomial(text, R3)


class TestExpressions:
    def test_running_example_generator(self):
        f = p("x^4 - y^2*z^2")
        assert len(f.terms) == 2
        assert f.degree == 4
        assert f.leading_monomial() == (4, 0, 0)

    def test_zero(self):
        assert p("0").is_zero
        assert str(p("0")) == "0"

    def test_term_collection(self):
        assert p("x*y + y*x") == p("2*x*y")

    def test_precedence_power_over_times(self):
        assert p("2*x^3") == Polynomial.monomial(R3, (3, 0, 0), 2)
        assert p("x*y^2") == Polynomial.monomial(R3, (1, 2, 0))

    def test_unary_minus(self):
        assert p("-x^2") == Polynomial.monomial(R3, (2, 0, 0), -1)
        assert p("-x + y") == p("y - x")
        assert p("- 3") == Polynomial.constant(R3, -3)

    def test_parentheses(self):
        assert p("(x + y)^2") == p("x^2 + 2*x*y + y^2")
        assert p("x*(y + z)") == p("x*y + x*z")
        assert p("3*(x - (y - z))") == p("3*x - 3*y + 3*z")

    def test_rational_literals(self):
        assert p("1/2*x").leading_coefficient() == Fraction(1, 2)
        assert p("5/10") == Polynomial.constant(R3, Fraction(1, 2))

    def test_mandatory_star(self):
        with pytest.raises(ParseError):
            p("x y")

    def test_whitespace_and_comments_in_documents(self):
        doc = parse_document(
            "# heading\nring x, y;  # trailing\nideal\n  x^2\n  + y^2 ;"
        )
        assert doc.ring.variables == ("x", "y")
        assert len(doc.generators) == 1

    def test_unknown_variable_with_position(self):
        with pytest.raises(ParseError) as err:
            p("x + w")
        assert err.value.column == 5
        assert "w" in str(err.value)

    def test_syntax_error_position(self):
        with pytest.raises(ParseError) as err:
            p("x + * y")
        assert (err.value.line, err.value.column) == (1, 5)

    def test_zero_denominator(self):
        with pytest.raises(ParseError) as err:
            p("1/0*x")
        assert "denominator" in str(err.value)

    def test_trailing_garbage(self):
        with pytest.raises(ParseError):
            p("x + y)")


class TestDocuments:
    def test_basic(self):
        doc = parse_document("ring x, y, z; ideal x^2 - y*z, z^3;")
        ideal = doc.ideal()
        assert ideal.ring == R3
        assert len(ideal.generators) == 2

    def test_zero_generators_become_zero_ideal(self):
        doc = parse_document("ring x, y; ideal 0;")
        assert doc.ideal().is_zero

    def test_variable_order_is_declaration_order(self):
        doc = parse_document("ring b, a; ideal a + b;")
        assert doc.ring.variables == ("b", "a")
        assert doc.generators[0].leading_monomial() == (1, 0)

    def test_duplicate_variable_rejected(self):
        with pytest.raises(ParseError):
            parse_document("ring x, x; ideal x;")

    def test_keyword_as_variable_rejected(self):
        with pytest.raises(ParseError):
            parse_document("ring x, ideal; ideal x;")

    def test_missing_semicolon(self):
        with pytest.raises(ParseError):
            parse_document("ring x, y ideal x;")

    def test_document_directives_default_to_none(self):
        doc = parse_document("ring x; ideal x;")
        assert doc.order is None and doc.seed is None
        assert doc.max_degree is None and doc.truncate is None


coefficients = st.integers(min_value=-9, max_value=9).filter(bool)
exponents = st.tuples(
    st.integers(0, 4), st.integers(0, 4), st.integers(0, 4)
)


@given(st.dictionaries(exponents, coefficients, max_size=6))
@settings(max_examples=200, deadline=None)
def test_print_parse_round_trip(terms):
    f = Polynomial(R3, terms)
    assert parse_polynomial(str(f), R3) == f


@given(
    st.dictionaries(
        exponents,
        st.fractions(
            min_value=-5, max_value=5, max_denominator=7
        ).filter(bool),
        max_size=5,
    )
)
@settings(max_examples=200, deadline=None)
def test_round_trip_with_rational_coefficients(terms):
    f = Polynomial(R3, terms)
    assert parse_polynomial(str(f), R3) == f
