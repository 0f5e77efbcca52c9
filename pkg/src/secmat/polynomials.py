"""Exact multivariate polynomials over the rationals.

Polynomials are immutable values: every operation returns a fresh object in
canonical form (terms strictly descending under the active term order, no
zero coefficients).  Coefficients are `fractions.Fraction`, i.e. reduced
arbitrary-precision rationals; floating point never appears.

The module also hosts the plain exponent-dict arithmetic (`_dict_*`) used by
the Groebner and gin engines, where wrapping every monomial in a class would
be too slow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping, Sequence, Union

from .errors import RingMismatchError, SecmatError
from .rings import DEGREVLEX, PowerProduct, Ring, TermOrder

Scalar = Union[int, Fraction]


# ---------------------------------------------------------------------------
# exponent-dict arithmetic (internal; exponents are plain tuples)
# ---------------------------------------------------------------------------

def _dict_iadd(acc: dict, other: Mapping, scale=1) -> dict:
    for t, c in other.items():
        v = acc.get(t, 0) + scale * c
        if v:
            acc[t] = v
        else:
            acc.pop(t, None)
    return acc


def _dict_mul(a: Mapping, b: Mapping) -> dict:
    if len(a) > len(b):
        a, b = b, a
    out: dict = {}
    for ta, ca in a.items():
        for tb, cb in b.items():
            t = tuple(x + y for x, y in zip(ta, tb))
            v = out.get(t, 0) + ca * cb
            if v:
                out[t] = v
            else:
                del out[t]
    return out


def _dict_scale(a: Mapping, c) -> dict:
    if c == 0:
        return {}
    return {t: c * v for t, v in a.items()}


def _dict_content(a: Mapping) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, int(c))
        if g == 1:
            return 1
    return g


def _dict_clear_content(a: dict) -> dict:
    g = _dict_content(a)
    if g > 1:
        for t in a:
            a[t] //= g
    return a


def _substitute_linear(fdict: Mapping, rows: Sequence[Sequence], n: int) -> dict:
    """Simultaneously substitute x_k -> sum_j rows[k][j] * x_j into fdict.

    Works variable by variable (Horner in each), writing into a shadow set
    of n extra exponent slots so the substitutions never alias.  rows need
    not be invertible; a zero row simply kills the variable.
    """
    zeros = (0,) * n
    cur: dict = {tuple(t) + zeros: c for t, c in fdict.items()}
    for k in range(n):
        form = {}
        for j, m in enumerate(rows[k]):
            if m:
                unit = [0] * (2 * n)
                unit[n + j] = 1
                form[tuple(unit)] = m
        layers: dict[int, dict] = {}
        for key, c in cur.items():
            e = key[k]
            base = key[:k] + (0,) + key[k + 1:]
            layers.setdefault(e, {})[base] = layers.get(e, {}).get(base, 0) + c
        top = max(layers) if layers else 0
        acc: dict = {}
        for e in range(top, -1, -1):
            if acc:
                acc = _dict_mul(acc, form) if form else {}
            if e in layers:
                _dict_iadd(acc, layers[e])
        cur = {t: c for t, c in acc.items() if c}
    return {key[n:]: c for key, c in cur.items()}


# ---------------------------------------------------------------------------
# Polynomial
# ---------------------------------------------------------------------------

class Polynomial:
    """An exact polynomial with order-sorted terms."""

    __slots__ = ("ring", "order", "_terms")

    def __init__(self, ring: Ring, terms: Iterable, order: TermOrder = DEGREVLEX):
        collected: dict = {}
        n = ring.arity
        for t, c in dict(terms).items() if isinstance(terms, Mapping) else terms:
            if len(t) != n:
                raise RingMismatchError(f"exponent vector {t} has wrong arity for {ring}")
            c = Fraction(c)
            if c:
                t = t if isinstance(t, PowerProduct) else PowerProduct(t)
                v = collected.get(t, Fraction(0)) + c
                if v:
                    collected[t] = v
                else:
                    del collected[t]
        key = order.sort_key
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "order", order)
        object.__setattr__(
            self,
            "_terms",
            tuple(sorted(collected.items(), key=lambda tc: key(tc[0]), reverse=True)),
        )

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, ring: Ring, order: TermOrder = DEGREVLEX) -> "Polynomial":
        return cls(ring, {}, order)

    @classmethod
    def constant(cls, ring: Ring, c: Scalar, order: TermOrder = DEGREVLEX) -> "Polynomial":
        return cls(ring, {PowerProduct.one(ring.arity): Fraction(c)}, order)

    @classmethod
    def variable(cls, ring: Ring, name: str, order: TermOrder = DEGREVLEX) -> "Polynomial":
        t = PowerProduct.variable(ring.arity, ring.index(name))
        return cls(ring, {t: Fraction(1)}, order)

    @classmethod
    def monomial(cls, ring: Ring, exponents, c: Scalar = 1,
                 order: TermOrder = DEGREVLEX) -> "Polynomial":
        return cls(ring, {PowerProduct(exponents): Fraction(c)}, order)

    # -- structure ----------------------------------------------------------

    @property
    def terms(self) -> tuple:
        """(PowerProduct, Fraction) pairs, strictly descending."""
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((t.degree for t, _ in self._terms), default=-1)

    @property
    def is_homogeneous(self) -> bool:
        degrees = {t.degree for t, _ in self._terms}
        return len(degrees) <= 1

    @property
    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def leading_term(self) -> tuple[PowerProduct, Fraction]:
        if not self._terms:
            raise ValueError("the zero polynomial has no leading term")
        return self._terms[0]

    def leading_monomial(self) -> PowerProduct:
        return self.leading_term()[0]

    def leading_coefficient(self) -> Fraction:
        return self.leading_term()[1]

    def coefficient(self, t) -> Fraction:
        t = PowerProduct(t)
        for u, c in self._terms:
            if u == t:
                return c
        return Fraction(0)

    def as_dict(self) -> dict:
        return dict(self._terms)

    def with_order(self, order: TermOrder) -> "Polynomial":
        return Polynomial(self.ring, self._terms, order) if order is not self.order else self

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other, self.order)
        self._check(other)
        acc = dict(self._terms)
        _dict_iadd(acc, dict(other._terms))
        return Polynomial(self.ring, acc, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {t: -c for t, c in self._terms}, self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(self.ring, other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        self._check(other)
        prod = _dict_mul(dict(self._terms), dict(other._terms))
        return Polynomial(self.ring, prod, self.order)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.ring, self.order)
        return Polynomial(self.ring, {t: c * v for t, v in self._terms}, self.order)

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponents are not supported")
        out = Polynomial.constant(self.ring, 1, self.order)
        for _ in range(e):
            out = out * self
        return out

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        """Exact evaluation at a rational point (test oracle helper)."""
        if len(point) != self.ring.arity:
            raise RingMismatchError("point has wrong arity")
        point = [Fraction(v) for v in point]
        total = Fraction(0)
        for t, c in self._terms:
            v = c
            for x, e in zip(point, t):
                if e:
                    v *= x ** e
            total += v
        return total

    # -- comparison / display ------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (int, Fraction)):
                return self == Polynomial.constant(self.ring, other, self.order)
            return NotImplemented
        return self.ring == other.ring and dict(self._terms) == dict(other._terms)

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms)))

    def __bool__(self):
        return bool(self._terms)

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k, (t, c) in enumerate(self._terms):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.variables, t)
                if e
            )
            a = abs(c)
            if mono:
                body = mono if a == 1 else f"{a}*{mono}"
            else:
                body = str(a)
            if k == 0:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if c > 0 else '-'} {body}")
        return " ".join(parts)

    def __repr__(self):
        return f"Polynomial({self})"


# ---------------------------------------------------------------------------
# primitive integer form (engine boundary)
# ---------------------------------------------------------------------------

def primitive_int_dict(f: Polynomial) -> tuple[dict, Fraction]:
    """Express f as scale * p with p an integer exponent-dict of content 1.

    The leading coefficient of p (under f's active order) is positive; the
    zero polynomial gives ({}, 1).
    """
    if f.is_zero:
        return {}, Fraction(1)
    den = 1
    for _, c in f.terms:
        den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for _, c in f.terms:
        num = gcd(num, c.numerator * (den // c.denominator))
    sign = 1 if f.leading_coefficient() > 0 else -1
    scale = Fraction(sign * num, den)
    p = {tuple(t): int(c / scale) for t, c in f.terms}
    return p, scale


def poly_from_int_dict(ring: Ring, p: Mapping, order: TermOrder = DEGREVLEX) -> Polynomial:
    return Polynomial(ring, {t: Fraction(c) for t, c in p.items()}, order)


# ---------------------------------------------------------------------------
# change of coordinates
# ---------------------------------------------------------------------------

def determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    a = [[int(v) for v in r] for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def apply_linear_change(f: Polynomial, matrix: Sequence[Sequence[int]]) -> Polynomial:
    """Substitute x_i -> sum_j matrix[i][j] * x_j; the matrix must be invertible."""
    n = f.ring.arity
    if len(matrix) != n or any(len(r) != n for r in matrix):
        raise ValueError(f"matrix must be {n}x{n}")
    if determinant(matrix) == 0:
        raise ValueError("singular change of coordinates")
    out = _substitute_linear(dict(f.terms), matrix, n)
    return Polynomial(f.ring, out, f.order)


# ---------------------------------------------------------------------------
# exact division and GCD
# ---------------------------------------------------------------------------

def _int_dict_try_divide(f: Mapping, d: Mapping) -> dict | None:
    """Quotient f/d over Q for integer dicts, or None if not divisible."""
    if not d:
        raise ZeroDivisionError("division by the zero polynomial")
    if not f:
        return {}
    key = DEGREVLEX.sort_key
    lt_d = max(d, key=key)
    lc_d = d[lt_d]
    rem = {t: Fraction(c) for t, c in f.items()}
    quo: dict = {}
    while rem:
        lt_r = max(rem, key=key)
        m = tuple(a - b for a, b in zip(lt_r, lt_d))
        if any(e < 0 for e in m):
            return None
        c = rem[lt_r] / lc_d
        quo[m] = c
        for t, v in d.items():
            u = tuple(a + b for a, b in zip(t, m))
            w = rem.get(u, Fraction(0)) - c * v
            if w:
                rem[u] = w
            else:
                rem.pop(u, None)
    return quo


def try_divide(f: Polynomial, d: Polynomial) -> Polynomial | None:
    """f / d when the division is exact, else None."""
    f._check(d)
    if d.is_zero:
        raise ZeroDivisionError("division by the zero polynomial")
    q = _int_dict_try_divide(dict(f.terms), dict(d.terms))
    if q is None:
        return None
    return Polynomial(f.ring, q, f.order)


def divides(d: Polynomial, f: Polynomial) -> bool:
    return try_divide(f, d) is not None


def _main_variable(f: Mapping, g: Mapping) -> int | None:
    """Largest variable index occurring in f or g, or None for constants."""
    best = None
    for p in (f, g):
        for t in p:
            for k in range(len(t) - 1, -1, -1):
                if t[k]:
                    if best is None or k > best:
                        best = k
                    break
    return best


def _coeffs_in(f: Mapping, v: int) -> dict[int, dict]:
    """Split f as a polynomial in x_v with exponent-dict coefficients."""
    layers: dict[int, dict] = {}
    for t, c in f.items():
        e = t[v]
        base = t[:v] + (0,) + t[v + 1:]
        layer = layers.setdefault(e, {})
        layer[base] = layer.get(base, 0) + c
    return {e: {t: c for t, c in layer.items() if c} for e, layer in layers.items()}


def _from_coeffs(layers: Mapping[int, Mapping], v: int) -> dict:
    out: dict = {}
    for e, layer in layers.items():
        for t, c in layer.items():
            out[t[:v] + (e,) + t[v + 1:]] = c
    return out


def _gcd_int_dicts(f: dict, g: dict) -> dict:
    """GCD of integer exponent-dicts, primitive with positive leading coeff."""
    f = _normalize_int_dict(dict(f))
    g = _normalize_int_dict(dict(g))
    if not f:
        return g
    if not g:
        return f
    one = {(0,) * _dict_arity(f): 1}
    if f == one or g == one:
        return one
    v = _main_variable(f, g)
    if v is None:
        return one
    fc, fp = _content_and_primitive(f, v)
    gc, gp = _content_and_primitive(g, v)
    cont = _gcd_int_dicts(fc, gc)

    big, small = (fp, gp) if _deg_in(fp, v) >= _deg_in(gp, v) else (gp, fp)
    while True:
        if not small:
            gcd_pp = big
            break
        if _deg_in(small, v) == 0:
            # a primitive part free of x_v is a unit: the pp's are coprime
            gcd_pp = one
            break
        r = _pseudo_rem(big, small, v)
        if not r:
            gcd_pp = small
            break
        big, small = small, _primitive_wrt(r, v)
    return _normalize_int_dict(_dict_mul(cont, gcd_pp))


def _dict_arity(f: Mapping) -> int:
    return len(next(iter(f)))


def _deg_in(f: Mapping, v: int) -> int:
    return max((t[v] for t in f), default=-1)


def _content_and_primitive(f: dict, v: int) -> tuple[dict, dict]:
    layers = _coeffs_in(f, v)
    cont: dict = {}
    for layer in layers.values():
        cont = _gcd_int_dicts(cont, dict(layer))
        if cont == {(0,) * _dict_arity(f): 1}:
            break
    prim_layers = {e: _int_dict_exact(layer, cont) for e, layer in layers.items()}
    return cont, _from_coeffs(prim_layers, v)


def _int_dict_exact(f: Mapping, d: Mapping) -> dict:
    q = _int_dict_try_divide(f, d)
    if q is None:
        raise SecmatError("internal error: inexact content division")
    out = {t: int(c) if c.denominator == 1 else c for t, c in q.items()}
    if any(isinstance(c, Fraction) for c in out.values()):
        raise SecmatError("internal error: non-integral content quotient")
    return out


def _pseudo_rem(f: dict, g: dict, v: int) -> dict:
    """Pseudo-remainder of f by g in the variable x_v."""
    dg = _deg_in(g, v)
    g_layers = _coeffs_in(g, v)
    lc_g = g_layers[dg]
    rem = dict(f)
    while rem:
        dr = _deg_in(rem, v)
        if dr < dg:
            break
        r_layers = _coeffs_in(rem, v)
        lc_r = r_layers[dr]
        shift = dr - dg
        scaled = _dict_mul(rem, lc_g)
        sub = _dict_mul(_from_coeffs({shift: lc_r}, v), g)
        rem = _dict_iadd(scaled, sub, -1)
        _dict_clear_content(rem)
    return rem


def _primitive_wrt(f: dict, v: int) -> dict:
    _, p = _content_and_primitive(f, v)
    return p


def _normalize_int_dict(f: dict) -> dict:
    if not f:
        return f
    _dict_clear_content(f)
    lt = max(f, key=DEGREVLEX.sort_key)
    if f[lt] < 0:
        f = {t: -c for t, c in f.items()}
    return f


def multivariate_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """GCD over Q, normalized to integer content 1 and positive leading coefficient."""
    f._check(g)
    pf, _ = primitive_int_dict(f)
    pg, _ = primitive_int_dict(g)
    return poly_from_int_dict(f.ring, _gcd_int_dicts(pf, pg), f.order)


def gcd_of_polynomials(polys: Sequence[Polynomial]) -> Polynomial:
    """Iterated multivariate GCD; zero for an empty or all-zero list."""
    if not polys:
        raise ValueError("need at least one polynomial")
    out = polys[0]
    for p in polys[1:]:
        out = multivariate_gcd(out, p)
        if out.degree == 0:
            break
    if out.is_zero:
        return out
    d, _ = primitive_int_dict(out)
    return poly_from_int_dict(out.ring, d, out.order)


# ---------------------------------------------------------------------------
# ideal presentations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Ideal:
    """A homogeneous-or-not ideal given by a list of generators.

    The zero ideal is the unique presentation with no generators; zero
    generators are dropped at construction so the invariant "every stored
    generator is nonzero" always holds.
    """

    ring: Ring
    generators: tuple[Polynomial, ...]

    def __post_init__(self):
        gens = tuple(g for g in self.generators if not g.is_zero)
        for g in gens:
            if g.ring != self.ring:
                raise RingMismatchError("generator from a different ring")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def of(cls, *gens: Polynomial) -> "Ideal":
        if not gens:
            raise ValueError("use Ideal.zero(ring) for the zero ideal")
        return cls(gens[0].ring, tuple(gens))

    @classmethod
    def zero(cls, ring: Ring) -> "Ideal":
        return cls(ring, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    @property
    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous for g in self.generators)

    @property
    def max_generator_degree(self) -> int:
        return max((g.degree for g in self.generators), default=0)

    @property
    def min_generator_degree(self) -> int:
        return min((g.degree for g in self.generators), default=0)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.generators) + ")"
