"""Hilbert series of graded modules via their leading monomial modules.

A series is kept as Q(t) / (1 - t)^n with Q a Laurent polynomial with integer
coefficients, stored as a dict ``{exponent: coeff}``.
"""
from __future__ import annotations

from functools import lru_cache
from math import comb

from .ring import NEG_INF, POS_INF


def _minimalize(gens):
    gens = sorted(set(gens), key=sum)
    out = []
    for g in gens:
        if not any(all(a <= b for a, b in zip(h, g)) for h in out):
            out.append(g)
    return tuple(sorted(out))


def _poly_mul(a, b):
    out = {}
    for i, x in a.items():
        for j, y in b.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return {k: v for k, v in out.items() if v}


def _poly_add(a, b, sign=1, shift=0):
    out = dict(a)
    for k, v in b.items():
        out[k + shift] = out.get(k + shift, 0) + sign * v
    return {k: v for k, v in out.items() if v}


@lru_cache(maxsize=200000)
def _numerator(gens):
    """Numerator of the Hilbert series of k[x]/(gens) for minimal monomial gens."""
    if not gens:
        return ((0, 1),)
    if any(sum(g) == 0 for g in gens):
        return ()
    support = [frozenset(i for i, e in enumerate(g) if e) for g in gens]
    coprime = all(not (support[i] & support[j])
                  for i in range(len(gens)) for j in range(i + 1, len(gens)))
    if coprime:
        num = {0: 1}
        for g in gens:
            num = _poly_mul(num, {0: 1, sum(g): -1})
        return tuple(sorted(num.items()))
    # pivot on the variable occurring in most non-pure-power generators
    n = len(gens[0])
    mixed = [g for g, s in zip(gens, support) if len(s) > 1]
    counts = [sum(1 for g in mixed if g[i]) for i in range(n)]
    var = max(range(n), key=lambda i: (counts[i], -i))
    exps = sorted(g[var] for g in mixed if g[var])
    e = exps[len(exps) // 2]
    pivot = tuple(e if i == var else 0 for i in range(n))
    plus = _minimalize(gens + (pivot,))
    colon = _minimalize(tuple(tuple(max(a - b, 0) for a, b in zip(g, pivot)) for g in gens))
    # HS(R/I) = HS(R/(I + p)) + t^deg(p) HS(R/(I : p))
    out = _poly_add(dict(_numerator(plus)), dict(_numerator(colon)), shift=e)
    return tuple(sorted(out.items()))


def monomial_numerator(gens):
    return dict(_numerator(_minimalize(tuple(tuple(g) for g in gens))))


class HilbertSeries:
    def __init__(self, numerator, nvars):
        self.numerator = {k: v for k, v in numerator.items() if v}
        self.nvars = nvars

    def __sub__(self, other):
        return HilbertSeries(_poly_add(self.numerator, other.numerator, sign=-1), self.nvars)

    def __add__(self, other):
        return HilbertSeries(_poly_add(self.numerator, other.numerator), self.nvars)

    def shift(self, s):
        return HilbertSeries({k + s: v for k, v in self.numerator.items()}, self.nvars)

    def is_zero(self):
        return not self.numerator

    def __call__(self, d):
        n = self.nvars
        return sum(c * comb(d - k + n - 1, n - 1) for k, c in self.numerator.items() if d - k >= 0)

    def values(self, lo, hi):
        return {d: self(d) for d in range(lo, hi + 1)}

    def _reduced(self):
        """(h, k): numerator divided by (1-t)^k with h(1) != 0."""
        if not self.numerator:
            return None, 0
        lo = min(self.numerator)
        hi = max(self.numerator)
        coeffs = [self.numerator.get(lo + i, 0) for i in range(hi - lo + 1)]
        k = 0
        while sum(coeffs) == 0:
            acc = 0
            quot = []
            for c in coeffs[:-1]:
                acc += c
                quot.append(acc)
            coeffs = quot
            k += 1
        return {lo + i: c for i, c in enumerate(coeffs) if c}, k

    def dimension(self):
        """Krull dimension; -inf for the zero module."""
        h, k = self._reduced()
        if h is None:
            return NEG_INF
        return self.nvars - k

    def multiplicity(self):
        h, _ = self._reduced()
        return sum(h.values()) if h else 0

    def initial_degree(self):
        """Smallest degree with a nonzero value; +inf for the zero series."""
        if not self.numerator:
            return POS_INF
        return min(self.numerator)

    def top_degree(self, hi):
        """Largest degree <= hi with a nonzero value (finite-length modules)."""
        for d in range(hi, self.initial_degree() - 1, -1):
            if self(d):
                return d
        return NEG_INF

    def __eq__(self, other):
        return isinstance(other, HilbertSeries) and self.numerator == other.numerator and self.nvars == other.nvars

    def __repr__(self):
        return f"HilbertSeries({sorted(self.numerator.items())}, n={self.nvars})"


def module_hilbert_series(leads_by_pos, twists, nvars):
    """Series of F/L where F has the given twists and L is a monomial submodule."""
    num = {}
    for pos, tw in enumerate(twists):
        part = monomial_numerator(leads_by_pos.get(pos, []))
        num = _poly_add(num, part, shift=tw)
    return HilbertSeries(num, nvars)
