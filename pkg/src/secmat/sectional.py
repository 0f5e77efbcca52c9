"""Sectional matrices and the diagnostics read off from them.

The matrix M(i, d) tabulates the Hilbert functions of P/I cut by n-i generic
hyperplanes.  Everything here routes through rgin(I): sectioning a strongly
stable ideal by generic hyperplanes is the same as killing its smallest
variables, so one randomized computation serves every entry, and the
random-linear-forms definition survives only as the cross-checking oracle
``sectional_matrix_direct_oracle``.

Derived quantities: binomial-expansion growth bounds, maximal growth and its
persistence, Hilbert polynomial/series of sections, dimension and degree,
truncation and GCD diagnostics, reduction numbers, and saturation checks,
aggregated by ``analyze``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial

from .errors import (
    EnumerationGuardError,
    InconclusiveError,
    InfiniteReductionNumberError,
    InvariantViolation,
    PreconditionError,
    SemanticError,
)
from .gin import GinResult, derive_rng, is_saturated, regularity, rgin
from .groebner import truncation_ideal
from .monomial_ideals import (
    MonomialIdeal,
    hilbert_numerator,
    max_standard_monomial_degree,
    restrict_to_first_vars,
)
from .polynomials import (
    Ideal,
    Polynomial,
    _substitute_linear,
    gcd_of_polynomials,
    primitive_int_dict,
    try_divide,
)
from .rings import DEGREVLEX, Ring

ORACLE_SPACE_GUARD = 6000
ORACLE_CANDIDATE_GUARD = 60000


# ---------------------------------------------------------------------------
# binomial expansions and the shift operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BinomialExpansion:
    """The unique i-binomial expansion h = sum of C(top_k, bottom_k)."""

    value: int
    index: int
    terms: tuple[tuple[int, int], ...]

    def __post_init__(self):
        total = sum(comb(a, b) for a, b in self.terms)
        tops = [a for a, _ in self.terms]
        bottoms = [b for _, b in self.terms]
        if (
            total != self.value
            or tops != sorted(tops, reverse=True)
            or len(set(tops)) != len(tops)
            or bottoms != list(range(self.index, self.index - len(bottoms), -1))
            or (bottoms and bottoms[-1] < 1)
            or any(a < b for a, b in self.terms)
        ):
            raise InvariantViolation(f"malformed binomial expansion {self.terms}")


def binomial_expansion(h: int, i: int) -> BinomialExpansion:
    """Greedy i-binomial expansion of a positive integer h."""
    if h <= 0:
        raise ValueError(f"need h >= 1, got {h}")
    if i <= 0:
        raise ValueError(f"need i >= 1, got {i}")
    terms = []
    bottom = i
    rest = h
    while rest > 0:
        top = bottom
        while comb(top + 1, bottom) <= rest:
            top += 1
        terms.append((top, bottom))
        rest -= comb(top, bottom)
        bottom -= 1
    return BinomialExpansion(h, i, tuple(terms))


def expansion_shift(expansion: BinomialExpansion, s: int, t: int) -> int:
    """Evaluate sum of C(top+s, bottom+t); C(a, b) counts 0 when a < b."""
    total = 0
    for top, bottom in expansion.terms:
        b = bottom + t
        if b < 0:
            raise ValueError(f"shift t={t} makes a bottom index negative")
        a = top + s
        total += comb(a, b) if a >= b else 0
    return total


def _growth_bound_up(h: int, d: int) -> int:
    """Macaulay bound for the next value: (h_d)^+_+, with 0 for h = 0."""
    if h == 0:
        return 0
    return expansion_shift(binomial_expansion(h, d), 1, 1)


def _growth_bound_down(h: int, d: int) -> int:
    """Green bound for a section: (h_d)^-, with 0 for h = 0."""
    if h == 0:
        return 0
    return expansion_shift(binomial_expansion(h, d), -1, 0)


# ---------------------------------------------------------------------------
# the sectional matrix
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SectionalMatrix:
    """M(i, d) for 1 <= i <= n and 0 <= d <= max_degree, plus provenance."""

    ring: Ring
    rows: tuple[tuple[int, ...], ...]
    reg: int
    source: MonomialIdeal  # the rgin the entries were computed from
    gen_max_degree: int  # top degree in the presented generators
    seed: int

    @property
    def arity(self) -> int:
        return self.ring.arity

    @property
    def max_degree(self) -> int:
        return len(self.rows[0]) - 1

    @property
    def generation_bound(self) -> int:
        """A degree by which the ideal is certainly generated."""
        return min(self.reg, self.gen_max_degree)

    def entry(self, i: int, d: int) -> int:
        if not 1 <= i <= self.arity:
            raise ValueError(f"row index {i} out of range 1..{self.arity}")
        if not 0 <= d <= self.max_degree:
            raise ValueError(f"degree {d} out of range 0..{self.max_degree}")
        return self.rows[i - 1][d]

    def row(self, i: int) -> tuple[int, ...]:
        return self.rows[i - 1]

    def column(self, d: int) -> tuple[int, ...]:
        return tuple(r[d] for r in self.rows)


def _validate_for_analysis(ideal: Ideal):
    if not ideal.is_homogeneous:
        raise SemanticError("sectional analysis needs homogeneous generators")
    if any(g.degree == 0 for g in ideal.generators):
        raise SemanticError("the ideal contains a unit; P/I is trivial")


def sectional_matrix(ideal: Ideal, seed: int, extra_degrees: int = 1) -> SectionalMatrix:
    """Compute M via rgin and variable restriction, for 0 <= d <= reg + extra."""
    if extra_degrees < 1:
        raise ValueError("extra_degrees must be at least 1")
    _validate_for_analysis(ideal)
    gin_result = rgin(ideal, seed)
    if gin_result.rgin.is_whole_ring:
        raise SemanticError("the ideal is the whole ring")
    reg = gin_result.regularity
    top = reg + extra_degrees
    rows = []
    for i in range(1, ideal.ring.arity + 1):
        restricted = restrict_to_first_vars(gin_result.rgin, i)
        rows.append(tuple(hilbert_numerator(restricted).values_up_to(top)))
    matrix = SectionalMatrix(
        ring=ideal.ring,
        rows=tuple(rows),
        reg=reg,
        source=gin_result.rgin,
        gen_max_degree=ideal.max_generator_degree,
        seed=seed,
    )
    violations = check_bounds(matrix)
    if violations:
        raise InvariantViolation(
            f"sectional matrix violates growth bounds: {violations[:3]}"
        )
    return matrix


def sectional_matrix_direct_oracle(
    ideal: Ideal,
    i: int,
    d: int,
    seed: int,
    space_guard: int = ORACLE_SPACE_GUARD,
    candidate_guard: int = ORACLE_CANDIDATE_GUARD,
) -> int:
    """dim (P/(I + (L_1, ..., L_{n-i})))_d by exact linear algebra.

    The generic forms are realized as substitutions x_k -> random combination
    of x_1, ..., x_i for k > i, which is the reduced-echelon shape of n-i
    generic linear forms; the degree-d rank is then computed exactly.  Test
    oracle only: guarded against large spaces.
    """
    _validate_for_analysis(ideal)
    n = ideal.ring.arity
    if not 1 <= i <= n:
        raise ValueError(f"need 1 <= i <= {n}")
    if d < 0:
        raise ValueError("degree must be non-negative")
    space = comb(d + i - 1, i - 1)
    if space > space_guard:
        raise EnumerationGuardError(f"degree-{d} space of dimension {space} over guard")
    rng = derive_rng(seed, "section-oracle", i, d)
    rows = []
    for k in range(n):
        if k < i:
            rows.append([1 if j == k else 0 for j in range(n)])
        else:
            rows.append(
                [rng.randint(-1000, 1000) if j < i else 0 for j in range(n)]
            )
    substituted = []
    for g in ideal.generators:
        if g.degree > d:
            continue
        p, _ = primitive_int_dict(g)
        q = _substitute_linear(p, rows, n)
        q = {t[:i]: c for t, c in q.items()}
        if q:
            substituted.append((g.degree, q))
    total_candidates = sum(comb(d - dg + i - 1, i - 1) for dg, _ in substituted)
    if total_candidates > candidate_guard:
        raise EnumerationGuardError(f"{total_candidates} candidate rows over guard")

    key = DEGREVLEX.sort_key
    echelon: dict[tuple, dict] = {}

    def monomials(degree: int, arity: int):
        if arity == 1:
            yield (degree,)
            return
        for e in range(degree + 1):
            for rest in monomials(degree - e, arity - 1):
                yield (e,) + rest

    from math import gcd as _gcd

    for dg, q in substituted:
        for m in monomials(d - dg, i):
            vec = {tuple(a + b for a, b in zip(t, m)): c for t, c in q.items()}
            while vec:
                lt = max(vec, key=key)
                pivot = echelon.get(lt)
                if pivot is None:
                    g0 = 0
                    for c in vec.values():
                        g0 = _gcd(g0, c)
                        if g0 == 1:
                            break
                    echelon[lt] = {t: c // g0 for t, c in vec.items()}
                    break
                a, b = pivot[lt], vec[lt]
                g0 = _gcd(a, b)
                sa, sb = a // g0, b // g0
                new = {}
                for t, c in vec.items():
                    w = sa * c - sb * pivot.get(t, 0)
                    if w:
                        new[t] = w
                for t, c in pivot.items():
                    if t not in vec and c:
                        w = -sb * c
                        if w:
                            new[t] = w
                vec = new
    return space - len(echelon)


# ---------------------------------------------------------------------------
# growth bounds and maximal growth
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundViolation:
    rule: str  # 'sum', 'macaulay', 'difference', 'green'
    i: int
    d: int
    lhs: int
    rhs: int


def check_bounds(matrix: SectionalMatrix) -> list[BoundViolation]:
    """All four growth inequalities at every computed (i, d); empty when sound."""
    n = matrix.arity
    top = matrix.max_degree
    entry = matrix.entry
    violations = []
    for i in range(1, n + 1):
        for d in range(top):
            lhs = entry(i, d + 1)
            rhs = sum(entry(j, d) for j in range(1, i + 1))
            if lhs > rhs:
                violations.append(BoundViolation("sum", i, d, lhs, rhs))
        for d in range(1, top):
            lhs = entry(i, d + 1)
            rhs = _growth_bound_up(entry(i, d), d)
            if lhs > rhs:
                violations.append(BoundViolation("macaulay", i, d, lhs, rhs))
    for i in range(2, n + 1):
        for d in range(1, top + 1):
            lhs = entry(i - 1, d)
            rhs = _growth_bound_down(entry(i, d), d)
            if lhs > rhs:
                violations.append(BoundViolation("green", i, d, lhs, rhs))
    # The row differences M(i, d) - M(i-1, d) count monomials with x_i
    # present, i.e. a Hilbert value in degree d-1 after dividing by x_i, so
    # the Green-type bound on them expands with respect to d-1.
    for i in range(3, n + 1):
        for d in range(1, top + 1):
            lhs = entry(i - 1, d) - entry(i - 2, d)
            h = entry(i, d) - entry(i - 1, d)
            rhs = h if d == 1 else _growth_bound_down(h, d - 1)
            if lhs > rhs:
                violations.append(BoundViolation("difference", i, d, lhs, rhs))
    return violations


def maximal_growth(matrix: SectionalMatrix, i: int, d: int) -> bool:
    """Whether M(i, d+1) equals the column sum M(1, d) + ... + M(i, d)."""
    if d + 1 > matrix.max_degree:
        raise PreconditionError(
            f"need degree {d + 1} <= computed extent {matrix.max_degree}"
        )
    return matrix.entry(i, d + 1) == sum(
        matrix.entry(j, d) for j in range(1, i + 1)
    )


def no_new_generators_check(
    matrix: SectionalMatrix, gin_ideal: MonomialIdeal, i: int, d: int
) -> bool:
    """i-maximal growth at d iff rgin has no degree-(d+1) generator in x_1..x_i."""
    growth = maximal_growth(matrix, i, d)
    no_gens = not any(
        t.degree == d + 1 and all(e == 0 for e in t[i:])
        for t in gin_ideal.min_gens
    )
    return growth == no_gens


def growth_flags(matrix: SectionalMatrix) -> tuple[tuple[bool, ...], ...]:
    return tuple(
        tuple(maximal_growth(matrix, i, d) for d in range(matrix.max_degree))
        for i in range(1, matrix.arity + 1)
    )


# ---------------------------------------------------------------------------
# persistence: closed forms, Hilbert polynomial and series of sections
# ---------------------------------------------------------------------------

def _require_persistence_hypotheses(matrix: SectionalMatrix, delta: int, i: int):
    if not 1 <= i <= matrix.arity:
        raise ValueError(f"row index {i} out of range")
    if matrix.generation_bound > delta + 1:
        raise PreconditionError(
            f"generators may live above degree {delta + 1}; persistence needs "
            f"generation in degree <= delta+1 (bound {matrix.generation_bound})"
        )
    if not maximal_growth(matrix, i, delta):
        raise PreconditionError(f"no {i}-maximal growth in degree {delta}")


def persistence_extend(matrix: SectionalMatrix, delta: int, i: int, d: int) -> int:
    """M(i, delta+d) from column delta alone, valid under i-maximal growth."""
    if d < 1:
        raise ValueError("need d >= 1")
    _require_persistence_hypotheses(matrix, delta, i)
    return sum(
        comb(i - j + d - 1, i - j) * matrix.entry(j, delta)
        for j in range(1, i + 1)
    )


def _binomial_in_x(offset: int, k: int) -> tuple[Fraction, ...]:
    """C(x + offset, k) as a polynomial in x (coefficients ascending)."""
    coeffs = [Fraction(1)]
    for r in range(k):
        shift = offset - r
        coeffs = [Fraction(0)] + coeffs[:]  # multiply by x
        for idx in range(len(coeffs) - 1):
            coeffs[idx] += shift * coeffs[idx + 1]
    inv = Fraction(1, factorial(k))
    return tuple(c * inv for c in coeffs)


def unipoly_value(coeffs, x) -> Fraction:
    """Evaluate a univariate polynomial given by ascending coefficients."""
    total = Fraction(0)
    for c in reversed(tuple(coeffs)):
        total = total * Fraction(x) + c
    return total


def hilbert_polynomial_of_section(
    matrix: SectionalMatrix, delta: int, i: int
) -> tuple[Fraction, ...]:
    """The Hilbert polynomial of the i-variable section, as ascending coefficients.

    p_i(x) agrees with M(i, x) for every x > delta; its leading term is
    M(k, delta)/(i-k)! * x^(i-k) for the least nonzero row k at delta.
    """
    _require_persistence_hypotheses(matrix, delta, i)
    coeffs = [Fraction(0)] * (i + 1)
    for j in range(1, i + 1):
        m = matrix.entry(j, delta)
        if not m:
            continue
        piece = _binomial_in_x(i - j - delta - 1, i - j)
        for idx, c in enumerate(piece):
            coeffs[idx] += m * c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@dataclass(frozen=True)
class SectionHilbertSummary:
    """Hilbert data of the section R_i = P/(I + n-i generic forms)."""

    polynomial: tuple[Fraction, ...]
    numerator: tuple[int, ...]  # of the reduced series, ascending in t
    denominator_power: int  # exponent of (1-t) after reduction
    dim: int
    deg: int

    def series_values(self, max_degree: int) -> list[int]:
        e = self.denominator_power
        out = []
        for d in range(max_degree + 1):
            if e:
                out.append(
                    sum(
                        c * comb(d - k + e - 1, e - 1)
                        for k, c in enumerate(self.numerator)
                        if k <= d
                    )
                )
            else:
                out.append(self.numerator[d] if d < len(self.numerator) else 0)
        return out


def hilbert_series_of_section(
    matrix: SectionalMatrix, delta: int, i: int
) -> SectionHilbertSummary:
    """Closed-form Hilbert series of the section, reduced over (1-t)^dim."""
    _require_persistence_hypotheses(matrix, delta, i)
    # numerator over (1-t)^i:
    #   (sum_{d<=delta} M(i,d) t^d) (1-t)^i + t^(delta+1) sum_j M(j,delta) (1-t)^(j-1)
    one_minus_t = [1, -1]

    def poly_mul(a, b):
        out = [0] * (len(a) + len(b) - 1)
        for p, x in enumerate(a):
            if x:
                for q, y in enumerate(b):
                    out[p + q] += x * y
        return out

    power = [1]
    powers = [power]
    for _ in range(i):
        power = poly_mul(power, one_minus_t)
        powers.append(power)
    head = [matrix.entry(i, d) for d in range(delta + 1)]
    numerator = poly_mul(head, powers[i]) if any(head) else [0]
    for j in range(1, i + 1):
        m = matrix.entry(j, delta)
        if not m:
            continue
        piece = poly_mul([m], powers[j - 1])
        shift = delta + 1
        need = shift + len(piece)
        if len(numerator) < need:
            numerator += [0] * (need - len(numerator))
        for idx, c in enumerate(piece):
            numerator[shift + idx] += c
    while len(numerator) > 1 and numerator[-1] == 0:
        numerator.pop()
    power_left = i
    while power_left > 0 and sum(numerator) == 0:
        # divide by (1-t): running prefix sums
        quotient = []
        acc = 0
        for c in numerator[:-1]:
            acc += c
            quotient.append(acc)
        numerator = quotient or [0]
        while len(numerator) > 1 and numerator[-1] == 0:
            numerator.pop()
        power_left -= 1
    return SectionHilbertSummary(
        polynomial=hilbert_polynomial_of_section(matrix, delta, i),
        numerator=tuple(numerator),
        denominator_power=power_left,
        dim=power_left,
        deg=sum(numerator),
    )


# ---------------------------------------------------------------------------
# dimension, degree, truncation diagnostics
# ---------------------------------------------------------------------------

def dim_deg(matrix: SectionalMatrix, delta: int) -> tuple[int, int]:
    """(dim P/I, deg P/I) read from column delta of the matrix.

    Needs I generated in degree <= delta+1, a nonzero quotient in degree
    delta, and the minimal nonzero row constant from delta to delta+1;
    otherwise the detection is inconclusive at this degree.
    """
    n = matrix.arity
    if delta + 1 > matrix.max_degree:
        raise PreconditionError(
            f"need column {delta + 1}; matrix stops at {matrix.max_degree}"
        )
    if matrix.generation_bound > delta + 1:
        raise InconclusiveError(
            f"inconclusive at delta={delta}: generators may appear above "
            f"degree {delta + 1}"
        )
    if matrix.entry(n, delta) == 0:
        raise InconclusiveError(
            f"inconclusive at delta={delta}: I equals the whole degree-{delta} piece"
        )
    i = next(j for j in range(1, n + 1) if matrix.entry(j, delta))
    if matrix.entry(i, delta) != matrix.entry(i, delta + 1):
        raise InconclusiveError(
            f"inconclusive at delta={delta}: row {i} still moving "
            f"({matrix.entry(i, delta)} -> {matrix.entry(i, delta + 1)})"
        )
    return n - i + 1, matrix.entry(i, delta)


def _matrix_through(ideal: Ideal, seed: int, degree: int) -> SectionalMatrix:
    """A sectional matrix whose columns reach at least the given degree."""
    matrix = sectional_matrix(ideal, seed)
    if matrix.max_degree < degree:
        matrix = sectional_matrix(
            ideal, seed, extra_degrees=degree - matrix.reg
        )
    return matrix


def truncation_dim_deg(ideal: Ideal, delta: int, seed: int) -> tuple[int, int, bool]:
    """dim/deg of P/<I_{<=delta}> and P/<I_{<=delta+1}> from M_{P/I} alone.

    Uses i = min{j > 1 | M(j, delta) != 0}; both claims are re-verified by
    analyzing the truncation ideals directly.
    """
    n = ideal.ring.arity
    matrix = _matrix_through(ideal, seed, delta + 1)
    if matrix.entry(n, delta) == 0:
        raise InconclusiveError(f"I fills degree {delta} entirely")
    i = next((j for j in range(2, n + 1) if matrix.entry(j, delta)), None)
    if i is None:
        raise InconclusiveError(f"no nonzero row beyond the first at degree {delta}")
    if matrix.entry(i, delta) != matrix.entry(i, delta + 1):
        raise InconclusiveError(
            f"row {i} is not constant from degree {delta} to {delta + 1}"
        )
    expected = (n - i + 1, matrix.entry(i, delta))
    for cut in (delta, delta + 1):
        piece = truncation_ideal(ideal, cut)
        sub_matrix = sectional_matrix(piece, seed)
        found = dim_deg(sub_matrix, sub_matrix.reg)
        if found != expected:
            raise InvariantViolation(
                f"truncation at {cut} has (dim, deg) = {found}, matrix "
                f"predicted {expected}"
            )
    return expected[0], expected[1], True


def truncation_regularity_check(ideal: Ideal, delta: int, seed: int) -> bool:
    """Under n-maximal growth at delta, reg(<I_{<=delta}>) <= delta must hold."""
    matrix = _matrix_through(ideal, seed, delta + 1)
    if not maximal_growth(matrix, matrix.arity, delta):
        raise PreconditionError(f"no {matrix.arity}-maximal growth in degree {delta}")
    piece = truncation_ideal(ideal, delta)
    if piece.is_zero:
        return True
    return regularity(piece, seed) <= delta


def potential_gcd_degree(matrix: SectionalMatrix, delta: int) -> int:
    """The M-potential degree of the GCD of I_delta: the entry M(2, delta)."""
    if matrix.arity < 2:
        raise ValueError("needs at least two variables")
    if matrix.entry(1, delta) != 0:
        raise PreconditionError(
            f"I has no elements in degree {delta}; no GCD to speak of"
        )
    return matrix.entry(2, delta)


def gcd_of_truncation(ideal: Ideal, delta: int, seed: int) -> Polynomial:
    """The GCD of <I_{<=delta}> under 2-maximal growth at delta.

    Its degree must equal M(2, delta), and it must divide every generator of
    <I_{<=delta+1}>; both facts are enforced, and a mismatch is an internal
    error rather than a soft failure.
    """
    matrix = _matrix_through(ideal, seed, delta + 1)
    k = potential_gcd_degree(matrix, delta)
    if not maximal_growth(matrix, 2, delta):
        raise PreconditionError(f"no 2-maximal growth in degree {delta}")
    piece = truncation_ideal(ideal, delta)
    result = gcd_of_polynomials(piece.generators)
    if result.degree != k:
        raise InvariantViolation(
            f"GCD of the truncation has degree {result.degree}, but the "
            f"matrix potential degree is {k}"
        )
    bigger = truncation_ideal(ideal, delta + 1)
    for g in bigger.generators:
        if try_divide(g, result) is None:
            raise InvariantViolation(
                f"GCD {result} does not divide the degree-{delta + 1} truncation"
            )
    return result


# ---------------------------------------------------------------------------
# reduction numbers
# ---------------------------------------------------------------------------

def reduction_number(ideal: Ideal, s: int, seed: int) -> int:
    """r_s(P/I): the last degree with M(n-s, d) nonzero.

    Reads the top standard-monomial degree of rgin restricted to the first
    n-s variables; if that restriction is not Artinian the row never
    vanishes and the reduction number is infinite (raised, not returned).
    """
    _validate_for_analysis(ideal)
    n = ideal.ring.arity
    if not 0 <= s <= n - 1:
        raise ValueError(f"need 0 <= s <= {n - 1}")
    gin_result = rgin(ideal, seed)
    restricted = restrict_to_first_vars(gin_result.rgin, n - s)
    top = max_standard_monomial_degree(restricted)
    if top is None:
        raise InfiniteReductionNumberError(n - s)
    return top


# ---------------------------------------------------------------------------
# saturation diagnostics
# ---------------------------------------------------------------------------

def saturated_growth_equivalence(ideal: Ideal, delta: int, seed: int) -> bool:
    """For saturated I: n-maximal and (n-1)-maximal growth agree at delta."""
    n = ideal.ring.arity
    if n < 2:
        raise ValueError("needs at least two variables")
    if not is_saturated(ideal, seed):
        raise PreconditionError("the ideal is not saturated")
    matrix = _matrix_through(ideal, seed, delta + 1)
    return maximal_growth(matrix, n, delta) == maximal_growth(matrix, n - 1, delta)


def truncation_saturation(ideal: Ideal, delta: int, seed: int) -> bool:
    """Whether <I_{<=delta}> is saturated (I itself must be).

    Under (n-1)-maximal growth at delta the answer must be yes, and a
    negative there is an internal error; without that hypothesis the verdict
    is informational.
    """
    n = ideal.ring.arity
    if not is_saturated(ideal, seed):
        raise PreconditionError("the ideal is not saturated")
    piece = truncation_ideal(ideal, delta)
    verdict = piece.is_zero or is_saturated(piece, seed)
    matrix = _matrix_through(ideal, seed, delta + 1)
    if n >= 2 and maximal_growth(matrix, n - 1, delta) and not verdict:
        raise InvariantViolation(
            f"({n - 1})-maximal growth at {delta} forces a saturated truncation"
        )
    return verdict
