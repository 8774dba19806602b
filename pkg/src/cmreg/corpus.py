"""Seeded random inputs and small curated families used by the bench and tests."""
from __future__ import annotations

import random

from .ideals import Ideal
from .modules import GradedModule
from .ring import GF, QQ, PolyRing, Polynomial, QuotientRing, monomials_of_degree


def random_monomial(rng, n, d):
    return rng.choice(monomials_of_degree(n, d))


def random_binomial_ideal(rng, ring, max_gens=4, max_degree=4, binomial_rate=0.4):
    """Ideal with 1..max_gens generators, each a monomial or a binomial m1 - c*m2."""
    n = ring.nvars
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        d = rng.randint(1, max_degree)
        m1 = random_monomial(rng, n, d)
        terms = {m1: 1}
        if rng.random() < binomial_rate:
            m2 = random_monomial(rng, n, d)
            if m2 != m1:
                c = rng.choice([1, -1, 2]) % (ring.characteristic or 3)
                if c:
                    terms[m2] = -c
        gens.append(Polynomial(ring.ambient, terms))
    return Ideal(ring, gens)


def random_ideal_corpus(seed, count=200, max_vars=4, max_degree=4, fields=(0, 2, 3, 5)):
    """``count`` random monomial/binomial ideals in 2..max_vars variables."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, max_vars)
        p = rng.choice(fields)
        ring = PolyRing(GF(p) if p else QQ, n)
        out.append((f"rand-{seed}-{k}", random_binomial_ideal(rng, ring, max_degree=max_degree)))
    return out


def random_monomial_ideal(rng, ring, max_gens=3, max_degree=3):
    return random_binomial_ideal(rng, ring, max_gens, max_degree, binomial_rate=0.0)


def random_module_tuples(seed, count=100, max_vars=3, max_degree=3):
    """Pairs and triples of cyclic modules R/I_k over a common polynomial ring."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(1, max_vars)
        ring = PolyRing(QQ, n)
        s = rng.choice([2, 2, 3])
        mods = [random_binomial_ideal(rng, ring, 2, max_degree).quotient_module() for _ in range(s)]
        out.append((f"tuple-{seed}-{k}", mods))
    return out


def parse_ideal(ring, text):
    return Ideal(ring, [ring.parse(t) for t in text.split(",") if t.strip()])


def quadric_rings(p=0):
    """Quotients of polynomial rings by one quadric, in 3 and 4 variables."""
    field = GF(p) if p else QQ
    r3 = PolyRing(field, 3)
    r4 = PolyRing(field, 4)
    return [
        ("smooth-conic-cone", QuotientRing(r3, [r3.parse("x0^2 + x1^2 + x2^2")])),
        ("xz-y2", QuotientRing(r3, [r3.parse("x0*x2 - x1^2")])),
        ("quadric-surface", QuotientRing(r4, [r4.parse("x0*x3 - x1*x2")])),
        ("rank3-quadric", QuotientRing(r4, [r4.parse("x0*x1 - x2^2")])),
        ("reducible-conic", QuotientRing(r3, [r3.parse("x0*x1")])),
    ]


def quadric_corpus(p=0):
    """(name, S, M) triples with M a cyclic S-module S/I."""
    out = []
    for name, S in quadric_rings(p):
        n = S.nvars
        cands = ["x0", f"x{n - 1}", "x0, x1", "x0 + x1", f"x1^2, x0*x{n - 1}", "x0, x1, x2"]
        out.append((f"{name}:S", S, GradedModule.free(S, [0])))
        for c in cands:
            I = parse_ideal(S, c)
            out.append((f"{name}:S/({c})", S, I.quotient_module()))
    return out


def dim2_generic_ci_corpus():
    """Monomial ideals I with dim R/I = 2 that are complete intersections at each minimal prime."""
    out = []
    for n, texts in [(3, ["x0", "x0^2", "x0^2, x0*x1", "x0*x1", "x0^2*x1", "x0^2, x0*x1, x0*x2",
                          "x0^2*x1, x0*x1^2"]),
                     (4, ["x0, x1", "x0^2, x1^3", "x0*x1, x2^2", "x0*x1*x2, x3",
                          "x0*x2, x0*x3, x1*x2, x1*x3", "x0*x2 - x1^2, x3"])]:
        ring = PolyRing(QQ, n)
        for t in texts:
            out.append((f"dim2-{n}:({t})", parse_ideal(ring, t)))
    return out


def cd1_corpus():
    """Ideals I with cd(S/I) <= 1, i.e. dim S/I <= 1, over polynomial and quadric rings."""
    out = []
    r2 = PolyRing(QQ, 2)
    for t in ["x0^2, x0*x1", "x0", "x0, x1", "x0^2, x1^2", "x0^2*x1, x0*x1^2", "x0^3, x0*x1"]:
        out.append((f"cd1-2:({t})", parse_ideal(r2, t)))
    r3 = PolyRing(QQ, 3)
    for t in ["x0, x1", "x0*x1, x0*x2, x1*x2", "x0^2, x1"]:
        out.append((f"cd1-3:({t})", parse_ideal(r3, t)))
    S = QuotientRing(r3, [r3.parse("x0*x2 - x1^2")])
    for t in ["x0", "x1", "x0, x1"]:
        out.append((f"cd1-conic:({t})", parse_ideal(S, t)))
    return out


def proper_intersection_pairs():
    """Curated pairs of cyclic modules over polynomial rings, proper and improper."""
    specs = [
        (2, "x0", "x1"), (2, "x0", "x0"), (2, "x0^2, x0*x1", "x1"), (2, "x0^2", "x1^2"),
        (2, "x0^2, x0*x1", "x0^2, x0*x1"), (2, "x0*x1", "x0 + x1"), (2, "x0, x1", "x0"),
        (2, "x0^2, x1^2", "x0 - x1"), (2, "x0*x1", "x0*x1"), (2, "x0^3", "x1^2"),
        (3, "x0", "x1"), (3, "x0", "x1, x2"), (3, "x0, x1", "x1, x2"), (3, "x0, x1", "x2"),
        (3, "x0*x1", "x2"), (3, "x0*x1", "x0"), (3, "x0^2, x0*x1", "x2"), (3, "x0^2, x0*x1", "x1"),
        (3, "x0*x1, x0*x2", "x1, x2"), (3, "x0*x2 - x1^2", "x0"), (3, "x0*x2 - x1^2", "x1"),
        (3, "x0*x2 - x1^2", "x0, x2"), (3, "x0, x1", "x0 + x2, x1"),
        (3, "x0*x1, x0*x2, x1*x2", "x0 + x1 + x2"), (3, "x0*x1, x0*x2, x1*x2", "x0"),
        (3, "x0^2, x1^2", "x2^2"), (3, "x0^2, x1^2", "x1^2, x2^2"), (3, "x0", "x0^2, x1"),
        (3, "x0 - x1", "x1 - x2"), (3, "x0*x1", "x1*x2"), (3, "x0*x1 - x2^2", "x0"),
        (3, "x0*x1 - x2^2", "x2"), (3, "x0*x1 - x2^2", "x0, x1"), (3, "x0^2 - x1*x2", "x0, x1 + x2"),
        (3, "x0^2, x0*x1, x1^2", "x2"), (3, "x0^2, x0*x1, x1^2", "x0"),
        (4, "x0, x1", "x2, x3"), (4, "x0, x1", "x1, x2"), (4, "x0*x3 - x1*x2", "x0, x3"),
        (4, "x0*x3 - x1*x2", "x0, x1"), (4, "x0*x3 - x1*x2", "x1, x2, x0 - x3"),
        (4, "x0*x1, x0*x2", "x3"), (4, "x0*x1, x0*x2", "x1, x2"), (4, "x0*x1", "x2*x3"),
        (4, "x0*x1", "x1*x2"), (4, "x0^2, x1^2", "x2^2, x3^2"), (4, "x0, x1, x2", "x3"),
        (4, "x0, x1, x2", "x2, x3"), (4, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", "x0, x3"),
        (4, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2", "x1, x2"),
    ]
    out = []
    rings = {}
    for n, a, b in specs:
        ring = rings.setdefault(n, PolyRing(QQ, n))
        out.append((f"pair-{n}:({a})|({b})", [parse_ideal(ring, a).quotient_module(),
                                               parse_ideal(ring, b).quotient_module()]))
    return out


def ideal_tuples(seed, count=30):
    """Tuples of 2 or 3 ideals for the Tor_1 cycle description."""
    rng = random.Random(seed)
    out = []
    for k in range(count):
        n = rng.randint(2, 3)
        ring = PolyRing(QQ, n)
        s = 2 if k % 2 == 0 else 3
        ideals = [random_binomial_ideal(rng, ring, 2, 2) for _ in range(s)]
        out.append((f"ideals-{seed}-{k}", ideals))
    return out
