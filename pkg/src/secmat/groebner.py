"""Buchberger's algorithm with degree truncation, plus ideal-level utilities.

The engine works on primitive integer exponent-dicts and pseudo-reduces with
aggressive content clearing, so no rational arithmetic happens in the hot
loop.  Pair selection is the normal strategy (lowest lcm degree first, ties
by the term order), pruned by Buchberger's coprimality and chain criteria.
Homogeneous inputs are processed degree by degree, which makes the
``degree_cap`` truncation sound: the capped basis spans I_d for every
d <= cap.

All public entry points speak `Polynomial`/`Ideal`; outputs are interreduced,
content-normalized, and deterministically sorted.
"""

from __future__ import annotations

import heapq
from bisect import bisect_left
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

from .errors import PreconditionError, RingMismatchError
from .monomial_ideals import MonomialIdeal
from .polynomials import (
    Ideal,
    Polynomial,
    _dict_clear_content,
    _normalize_int_dict,
    poly_from_int_dict,
    primitive_int_dict,
)
from .rings import DEGREVLEX, LEX, PowerProduct, Ring, TermOrder


@dataclass(frozen=True)
class GroebnerBasis:
    """An interreduced Groebner basis, possibly truncated at degree_cap."""

    ring: Ring
    order: TermOrder
    elements: tuple[Polynomial, ...]
    degree_cap: int | None = None

    @property
    def leading_terms(self) -> tuple[PowerProduct, ...]:
        return tuple(g.leading_monomial() for g in self.elements)

    @property
    def contains_unit(self) -> bool:
        return any(g.degree == 0 for g in self.elements)

    @property
    def is_zero(self) -> bool:
        return not self.elements


# ---------------------------------------------------------------------------
# internal reduction machinery (integer exponent-dicts)
# ---------------------------------------------------------------------------

class _Reducers:
    """Basis elements prepared for division, sorted ascending by leading term."""

    __slots__ = ("keys", "recs", "order", "by_degree")

    def __init__(self, order: TermOrder):
        self.order = order
        self.keys: list = []
        self.recs: list = []  # (lt, lc, tail, deg)
        self.by_degree = order is not LEX

    def insert(self, p: dict):
        lt = max(p, key=self.order.sort_key)
        tail = tuple((t, c) for t, c in p.items() if t != lt)
        rec = (lt, p[lt], tail, sum(lt))
        key = self.order.sort_key(lt)
        pos = bisect_left(self.keys, key)
        self.keys.insert(pos, key)
        self.recs.insert(pos, rec)

    def find_divisor(self, t: tuple, deg_t: int):
        for rec in self.recs:
            if self.by_degree and rec[3] > deg_t:
                return None
            lt = rec[0]
            ok = True
            for a, b in zip(lt, t):
                if a > b:
                    ok = False
                    break
            if ok:
                return rec
        return None


def _reduce_scaled(p: dict, reducers: _Reducers, order: TermOrder,
                   clear_every: int = 1) -> dict:
    """Full normal form up to a nonzero rational factor (content kept small)."""
    heapkey = order.heap_key
    heap = [(heapkey(t), t) for t in p]
    heapq.heapify(heap)
    steps = 0
    while heap:
        _, t = heapq.heappop(heap)
        c = p.get(t)
        if not c:
            p.pop(t, None)
            continue
        rec = reducers.find_divisor(t, sum(t))
        if rec is None:
            continue  # t is irreducible and final; smaller terms never recreate it
        lt, lc, tail, _ = rec
        g0 = gcd(c, lc)
        sp = lc // g0
        sg = c // g0
        if sp != 1:
            for u in p:
                p[u] *= sp
        del p[t]
        shift = tuple(a - b for a, b in zip(t, lt))
        for tm, tc in tail:
            u = tuple(a + b for a, b in zip(tm, shift))
            v = p.get(u)
            if v is None:
                p[u] = -sg * tc
                heapq.heappush(heap, (heapkey(u), u))
            else:
                v -= sg * tc
                if v:
                    p[u] = v
                else:
                    del p[u]
        steps += 1
        if sp != 1 and steps % clear_every == 0:
            _dict_clear_content(p)
    _dict_clear_content(p)
    return p


def _reduce_exact(p: dict, reducers: _Reducers, order: TermOrder) -> tuple[dict, int]:
    """Full normal form; returns (r, m) with m*f - r in the ideal of the reducers."""
    heapkey = order.heap_key
    heap = [(heapkey(t), t) for t in p]
    heapq.heapify(heap)
    multiplier = 1
    while heap:
        _, t = heapq.heappop(heap)
        c = p.get(t)
        if not c:
            p.pop(t, None)
            continue
        rec = reducers.find_divisor(t, sum(t))
        if rec is None:
            continue
        lt, lc, tail, _ = rec
        g0 = gcd(c, lc)
        sp = lc // g0
        sg = c // g0
        if sp != 1:
            multiplier *= sp
            for u in p:
                p[u] *= sp
        del p[t]
        shift = tuple(a - b for a, b in zip(t, lt))
        for tm, tc in tail:
            u = tuple(a + b for a, b in zip(tm, shift))
            v = p.get(u)
            if v is None:
                p[u] = -sg * tc
                heapq.heappush(heap, (heapkey(u), u))
            else:
                v -= sg * tc
                if v:
                    p[u] = v
                else:
                    del p[u]
    return p, multiplier


def _spair_dict(pi: dict, lt_i: tuple, lc_i: int,
                pj: dict, lt_j: tuple, lc_j: int) -> dict:
    lcm = tuple(max(a, b) for a, b in zip(lt_i, lt_j))
    mi = tuple(a - b for a, b in zip(lcm, lt_i))
    mj = tuple(a - b for a, b in zip(lcm, lt_j))
    g0 = gcd(lc_i, lc_j)
    a = lc_j // g0
    b = lc_i // g0
    out: dict = {}
    for t, c in pi.items():
        out[tuple(x + y for x, y in zip(t, mi))] = a * c
    for t, c in pj.items():
        u = tuple(x + y for x, y in zip(t, mj))
        v = out.get(u, 0) - b * c
        if v:
            out[u] = v
        else:
            out.pop(u, None)
    return out


def _core(polys: list[dict], order: TermOrder, cap: int | None) -> list[dict]:
    """Buchberger loop on primitive integer dicts; returns the reduced basis."""
    sort_key = order.sort_key
    basis: list[dict] = []
    lts: list[tuple] = []
    lcs: list[int] = []
    reducers = _Reducers(order)
    pending: set[tuple[int, int]] = set()
    heap: list = []

    def push_pairs(new_index: int):
        lt_new = lts[new_index]
        for k in range(new_index):
            lcm = tuple(max(a, b) for a, b in zip(lts[k], lt_new))
            deg = sum(lcm)
            if cap is not None and deg > cap:
                continue
            if all(a == 0 or b == 0 for a, b in zip(lts[k], lt_new)):
                continue  # coprime leading terms: S-pair reduces to zero
            pending.add((k, new_index))
            heapq.heappush(heap, (deg, sort_key(lcm), k, new_index))

    def add(p: dict):
        p = _normalize_int_dict(p)
        lt = max(p, key=sort_key)
        basis.append(p)
        lts.append(lt)
        lcs.append(p[lt])
        reducers.insert(p)
        push_pairs(len(basis) - 1)

    for p in sorted(polys, key=lambda q: sort_key(max(q, key=sort_key))):
        q = _reduce_scaled(dict(p), reducers, order)
        if q:
            add(q)

    while heap:
        _, _, i, j = heapq.heappop(heap)
        if (i, j) not in pending:
            continue
        pending.discard((i, j))
        lcm = tuple(max(a, b) for a, b in zip(lts[i], lts[j]))
        chained = False
        for k in range(len(basis)):
            if k == i or k == j:
                continue
            if all(a <= b for a, b in zip(lts[k], lcm)):
                ik = (i, k) if i < k else (k, i)
                jk = (j, k) if j < k else (k, j)
                if ik not in pending and jk not in pending:
                    chained = True
                    break
        if chained:
            continue
        s = _spair_dict(basis[i], lts[i], lcs[i], basis[j], lts[j], lcs[j])
        r = _reduce_scaled(s, reducers, order)
        if r:
            add(r)

    # minimalize: drop elements whose leading term another one divides
    indices = sorted(range(len(basis)), key=lambda k: sort_key(lts[k]))
    kept: list[int] = []
    for k in indices:
        if not any(all(a <= b for a, b in zip(lts[m], lts[k])) for m in kept):
            kept.append(k)
    # tail-reduce each survivor against the others
    out = []
    for k in kept:
        others = _Reducers(order)
        for m in kept:
            if m != k:
                others.insert(basis[m])
        out.append(_normalize_int_dict(_reduce_scaled(dict(basis[k]), others, order)))
    out.sort(key=lambda q: sort_key(max(q, key=sort_key)))
    return out


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

@lru_cache(maxsize=256)
def buchberger(ideal: Ideal, order: TermOrder = DEGREVLEX,
               degree_cap: int | None = None) -> GroebnerBasis:
    """Interreduced Groebner basis of the ideal under the given order."""
    if degree_cap is not None:
        if degree_cap < 0:
            raise ValueError("degree_cap must be non-negative")
        if not ideal.is_homogeneous:
            raise PreconditionError(
                "a degree cap is only sound for homogeneous generators"
            )
    polys = []
    for g in ideal.generators:
        p, _ = primitive_int_dict(g.with_order(order))
        if degree_cap is not None and g.degree > degree_cap:
            continue
        polys.append(p)
    reduced = _core(polys, order, degree_cap)
    elements = tuple(poly_from_int_dict(ideal.ring, p, order) for p in reduced)
    return GroebnerBasis(ideal.ring, order, elements, degree_cap)


def normal_form(f: Polynomial, basis, order: TermOrder | None = None) -> Polynomial:
    """Remainder of f on division by the given polynomials.

    No term of the result is divisible by any of their leading terms, and
    f - result lies in the ideal they generate.
    """
    if isinstance(basis, GroebnerBasis):
        order = basis.order if order is None else order
        gens = basis.elements
    else:
        gens = tuple(basis)
    if order is None:
        order = f.order
    for g in gens:
        if g.ring != f.ring:
            raise RingMismatchError("reducer from a different ring")
    reducers = _Reducers(order)
    for g in gens:
        if not g.is_zero:
            p, _ = primitive_int_dict(g.with_order(order))
            reducers.insert(p)
    p, scale = primitive_int_dict(f.with_order(order))
    r, multiplier = _reduce_exact(p, reducers, order)
    factor = scale / multiplier
    return Polynomial(f.ring, {t: Fraction(c) * factor for t, c in r.items()}, order)


def s_polynomial(f: Polynomial, g: Polynomial, order: TermOrder = DEGREVLEX) -> Polynomial:
    """The S-polynomial of f and g (cross-multiplied to cancel leading terms)."""
    f = f.with_order(order)
    g = g.with_order(order)
    lt_f, lc_f = f.leading_term()
    lt_g, lc_g = g.leading_term()
    lcm = lt_f.lcm(lt_g)
    mf = Polynomial.monomial(f.ring, lcm.divided_by(lt_f), 1 / lc_f, order)
    mg = Polynomial.monomial(g.ring, lcm.divided_by(lt_g), 1 / lc_g, order)
    return mf * f - mg * g


def leading_term_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    """Minimal monomial generators of LT(I), from a full (uncapped) basis."""
    if gb.degree_cap is not None:
        raise PreconditionError(
            "leading terms of a degree-capped basis do not determine LT(I)"
        )
    return MonomialIdeal.of(gb.ring, [t for t in gb.leading_terms])


def truncation_ideal(ideal: Ideal, delta: int) -> Ideal:
    """The ideal generated by all elements of I of degree at most delta."""
    if delta < 0:
        raise ValueError("truncation degree must be non-negative")
    if not ideal.is_homogeneous:
        raise PreconditionError("truncation needs a homogeneous ideal")
    if ideal.is_zero:
        return ideal
    gb = buchberger(ideal, DEGREVLEX, degree_cap=delta)
    return Ideal(ideal.ring, gb.elements)


def ideal_equal(a: Ideal, b: Ideal) -> bool:
    """Whether two presentations generate the same ideal."""
    if a.ring != b.ring:
        raise RingMismatchError(f"{a.ring} vs {b.ring}")
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    gb_a = buchberger(a)
    gb_b = buchberger(b)
    if MonomialIdeal.of(a.ring, gb_a.leading_terms) != MonomialIdeal.of(
        b.ring, gb_b.leading_terms
    ):
        return False
    return all(normal_form(g, gb_a).is_zero for g in b.generators) and all(
        normal_form(g, gb_b).is_zero for g in a.generators
    )
