"""Homogeneous ideals of S = R/J and their basic operations."""
from __future__ import annotations

from . import groebner as gb
from .modules import GradedModule, ideal_vectors
from .ring import NEG_INF, POS_INF, Polynomial


class UnsupportedCharacteristic(ValueError):
    pass


class Ideal:
    """A homogeneous ideal of ``ring`` (a PolyRing or QuotientRing).

    Generators are kept in normal form modulo J; the reduced Groebner basis
    of the preimage I + J in the ambient ring is computed on demand.
    """

    def __init__(self, ring, gens):
        self.ring = ring
        out = []
        for g in gens:
            if not isinstance(g, Polynomial):
                g = ring.ambient(g)
            if not g.is_homogeneous():
                raise ValueError(f"generator {g} is not homogeneous")
            g = ring.reduce(g)
            if not g.is_zero():
                out.append(g)
        self.gens = out
        self._gb = None

    def groebner(self):
        """Reduced Groebner basis of I + J in the ambient ring."""
        if self._gb is None:
            self._gb = gb.ideal_groebner(self.gens + list(self.ring.defining_ideal), self.ring)
        return self._gb

    def contains(self, f):
        return gb.reduce_polynomial(f, self.groebner()).is_zero()

    def is_subset(self, other):
        return all(other.contains(g) for g in self.gens)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.groebner() == other.groebner()

    def __hash__(self):
        return hash(tuple(self.groebner()))

    def is_zero(self):
        return not self.gens

    def is_unit(self):
        return any(g.is_constant() for g in self.groebner())

    def minimal_generators(self):
        gens = sorted(self.gens, key=lambda g: g.degree())
        keep = gb.mingens(ideal_vectors(gens), (0,), self.ring)
        return [gens[i] for i in keep]

    def degrees(self):
        """Degrees of a minimal generating set, largest first."""
        return sorted((g.degree() for g in self.minimal_generators()), reverse=True)

    def quotient_module(self):
        """S/I."""
        return GradedModule.cyclic(self.ring, self.gens)

    def as_module(self):
        """I as an S-module."""
        return GradedModule.from_ideal(self.ring, self.gens)

    # operations
    def __add__(self, other):
        other = _as_ideal(self.ring, other)
        return Ideal(self.ring, self.gens + other.gens)

    def __mul__(self, other):
        other = _as_ideal(self.ring, other)
        return Ideal(self.ring, [a * b for a in self.gens for b in other.gens]).trimmed()

    def trimmed(self):
        return Ideal(self.ring, self.minimal_generators())

    def power(self, m):
        if m < 0:
            raise ValueError("negative power")
        out = Ideal(self.ring, [self.ring.one()])
        for _ in range(m):
            out = out * self
        return out

    def bracket_power(self, q):
        p = self.ring.characteristic
        if p == 0:
            raise UnsupportedCharacteristic("bracket powers need a prime characteristic")
        k = q
        while k % p == 0 and k > 1:
            k //= p
        if k != 1:
            raise ValueError(f"{q} is not a power of {p}")
        return Ideal(self.ring, [g ** q for g in self.gens])

    def quotient(self, other):
        """(I : K) for an ideal or polynomial K."""
        other = _as_ideal(self.ring, other)
        fs = other.gens
        if not fs:
            return Ideal(self.ring, [self.ring.one()])
        amb = self.ring.ambient
        k = len(fs)
        # kernel of S -> (S/I)^k, a -> (a f_1, ..., a f_k)
        tgt = [-f.degree() for f in fs]
        cols = [{(i, m): c for i, f in enumerate(fs) for m, c in f.terms.items()}]
        src = [0]
        for i in range(k):
            for g in self.gens:
                cols.append({(i, m): c for m, c in g.terms.items()})
                src.append(tgt[i] + g.degree())
        syz = gb.syzygy_vectors(cols, src, tgt, self.ring, minimal=False)
        out = []
        for v in syz:
            terms = {m: c for (pos, m), c in v.items() if pos == 0}
            if terms:
                out.append(Polynomial(amb, terms, clean=False))
        return Ideal(self.ring, out).trimmed()

    def saturation(self):
        """(I : S_+^infinity) by iterated quotients until the basis stabilizes."""
        m = Ideal(self.ring, self.ring.gens())
        cur = self
        while True:
            nxt = cur.quotient(m)
            if nxt.groebner() == cur.groebner():
                return cur
            cur = nxt

    def intersect(self, other):
        other = _as_ideal(self.ring, other)
        if not self.gens or not other.gens:
            return Ideal(self.ring, [])
        # a in I and in K: syzygies of [[1, I, 0], [1, 0, K]]
        cols = [{(0, (0,) * self.ring.nvars): 1, (1, (0,) * self.ring.nvars): 1}]
        src = [0]
        for g in self.gens:
            cols.append({(0, m): c for m, c in g.terms.items()})
            src.append(g.degree())
        for g in other.gens:
            cols.append({(1, m): c for m, c in g.terms.items()})
            src.append(g.degree())
        syz = gb.syzygy_vectors(cols, src, (0, 0), self.ring, minimal=False)
        amb = self.ring.ambient
        out = []
        for v in syz:
            terms = {m: c for (pos, m), c in v.items() if pos == 0}
            if terms:
                out.append(Polynomial(amb, terms, clean=False))
        return Ideal(self.ring, out).trimmed()

    def __repr__(self):
        return f"Ideal({', '.join(map(str, self.gens))})"


def _as_ideal(ring, x):
    if isinstance(x, Ideal):
        if x.ring != ring:
            raise ValueError("ideals over different rings")
        return x
    if isinstance(x, Polynomial):
        return Ideal(ring, [x])
    return Ideal(ring, list(x))


def ideal_ops(a, b=None, op="sum", m=None, q=None):
    """Dispatch for sum, product, power, bracket_power, quotient, saturation."""
    if op == "sum":
        return a + b
    if op == "product":
        return a * b
    if op == "power":
        return a.power(m)
    if op == "bracket_power":
        return a.bracket_power(q)
    if op == "quotient":
        return a.quotient(b)
    if op in ("saturation", "saturation_wrt_irrelevant"):
        return a.saturation()
    raise ValueError(f"unknown ideal operation {op!r}")


class HilbertData:
    def __init__(self, series, lo, hi):
        self.series = series
        self.values = series.values(lo, hi)
        self.dimension = series.dimension()
        self.indeg = series.initial_degree()

    def __repr__(self):
        return f"HilbertData(dim={self.dimension}, indeg={self.indeg}, values={self.values})"


def hilbert_data(obj, window=None):
    """Hilbert function on a window, Krull dimension and initial degree.

    An Ideal stands for its quotient ring S/I.
    """
    if isinstance(obj, Ideal):
        obj = obj.quotient_module()
    hs = obj.hilbert_series()
    if window is None:
        lo = hs.initial_degree()
        lo = 0 if lo == POS_INF else lo
        hi = max(hs.numerator, default=0) + obj.ring.nvars + 2
        window = (lo, hi)
    return HilbertData(hs, window[0], window[1])


__all__ = ["HilbertData", "Ideal", "NEG_INF", "UnsupportedCharacteristic", "hilbert_data", "ideal_ops"]
