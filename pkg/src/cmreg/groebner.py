"""Buchberger's algorithm for graded submodules of free modules.

Vectors of a free module R^r are dictionaries ``{(pos, exps): coeff}``.
Internally each term is encoded as the tuple
``(-pos, deg, -e[n-1], ..., -e[0])`` so that native tuple comparison is the
position-over-term order (lower positions dominate) refined by grevlex, and
monomial multiplication is componentwise addition.

All inputs are homogeneous, so the algorithm runs degree by degree.  This
also yields minimal generating sets: an input whose normal form modulo the
part of the basis built in lower degrees is nonzero is a minimal generator.
"""
from __future__ import annotations

from operator import add

from .ring import Polynomial


# -- encoding ----------------------------------------------------------------

def encode(pos, exps):
    return (-pos, sum(exps)) + tuple(-e for e in reversed(exps))


def decode(key):
    return -key[0], tuple(-e for e in reversed(key[2:]))


def encode_vec(vec):
    return {encode(pos, m): c for (pos, m), c in vec.items()}


def decode_vec(vec):
    return {decode(k): c for k, c in vec.items()}


def _divides(s, t):
    # s, t are encoded keys; exponents are negated so divisibility flips
    if s[0] != t[0] or s[1] > t[1]:
        return False
    for a, b in zip(s[2:], t[2:]):
        if a < b:
            return False
    return True


def _quotient(t, s):
    return (0,) + tuple(map(int.__sub__, t[1:], s[1:]))


def _lcm(s, t):
    neg = tuple(map(min, s[2:], t[2:]))
    return (s[0], -sum(neg)) + neg


# -- engine ------------------------------------------------------------------

class _Basis:
    """Growing list of monic basis elements with a per-position index."""

    def __init__(self, field):
        self.p = field.p
        self.field = field
        self.elems = []      # monic encoded vectors
        self.leads = []
        self.by_pos = {}     # -pos -> list of indices

    def find_divisor(self, t):
        for i in self.by_pos.get(t[0], ()):
            if _divides(self.leads[i], t):
                return i
        return None

    def reduce(self, v, full=True):
        """Normal form of ``v`` (a fresh dict that may be consumed)."""
        p = self.p
        out = {}
        leads = self.leads
        elems = self.elems
        while v:
            t = max(v)
            c = v[t]
            i = None
            for j in self.by_pos.get(t[0], ()):
                if _divides(leads[j], t):
                    i = j
                    break
            if i is None:
                if not full:
                    v.update(out)
                    return v
                out[t] = v.pop(t)
                continue
            q = _quotient(t, leads[i])
            g = elems[i]
            if p:
                for k, a in g.items():
                    k2 = tuple(map(add, k, q))
                    b = (v.get(k2, 0) - c * a) % p
                    if b:
                        v[k2] = b
                    else:
                        v.pop(k2, None)
            else:
                for k, a in g.items():
                    k2 = tuple(map(add, k, q))
                    b = v.get(k2, 0) - c * a
                    if b:
                        v[k2] = b
                    else:
                        v.pop(k2, None)
        return out

    def make_monic(self, v):
        t = max(v)
        c = v[t]
        if c == 1:
            return v, t
        inv = self.field.inv(c)
        norm = self.field.normalize
        return {k: norm(a * inv) for k, a in v.items()}, t

    def add(self, v):
        v, t = self.make_monic(v)
        self.elems.append(v)
        self.leads.append(t)
        idx = len(self.elems) - 1
        self.by_pos.setdefault(t[0], []).append(idx)
        return idx


def _spoly(f, lf, g, lg, lcm, p):
    qf = _quotient(lcm, lf)
    qg = _quotient(lcm, lg)
    v = {tuple(map(add, k, qf)): a for k, a in f.items()}
    if p:
        for k, a in g.items():
            k2 = tuple(map(add, k, qg))
            b = (v.get(k2, 0) - a) % p
            if b:
                v[k2] = b
            else:
                v.pop(k2, None)
    else:
        for k, a in g.items():
            k2 = tuple(map(add, k, qg))
            b = v.get(k2, 0) - a
            if b:
                v[k2] = b
            else:
                v.pop(k2, None)
    return v


def _vec_degree(v, twists):
    t = next(iter(v))
    return t[1] + twists[-t[0]]


class GBResult:
    def __init__(self, basis, minimal):
        self.basis = basis
        self.minimal = minimal


def run_buchberger(inputs, twists, field, background=(), rank_one=False, max_degree=None):
    """Degree-by-degree Buchberger on encoded homogeneous vectors.

    ``background`` vectors are processed before ``inputs`` of the same degree;
    ``minimal`` in the result lists the indices of ``inputs`` that survived
    reduction, i.e. a minimal generating set modulo the background.
    """
    p = field.p
    basis = _Basis(field)
    pending_inputs = {}
    for idx, v in enumerate(background):
        if v:
            pending_inputs.setdefault(_vec_degree(v, twists), []).append((0, idx, v))
    for idx, v in enumerate(inputs):
        if v:
            pending_inputs.setdefault(_vec_degree(v, twists), []).append((1, idx, v))
    pairs = {}       # degree -> list of (i, j, lcm)
    pending = set()
    minimal = []

    def insert(v):
        j = basis.add(v)
        lj = basis.leads[j]
        for i in basis.by_pos[lj[0]]:
            if i == j:
                continue
            li = basis.leads[i]
            lcm = _lcm(li, lj)
            if rank_one:
                # coprime leading monomials: the pair reduces to zero
                if lcm[1] == li[1] + lj[1]:
                    continue
            d = lcm[1] + twists[-lcm[0]]
            pairs.setdefault(d, []).append((i, j, lcm))
            pending.add((i, j))

    while pairs or pending_inputs:
        d = min(list(pairs) + list(pending_inputs))
        if max_degree is not None and d > max_degree:
            break
        batch = pairs.pop(d, [])
        batch.sort(key=lambda x: x[2])
        for i, j, lcm in batch:
            pending.discard((i, j))
            # chain criterion
            skip = False
            for k in basis.by_pos[lcm[0]]:
                if k == i or k == j:
                    continue
                if not _divides(basis.leads[k], lcm):
                    continue
                a, b = (i, k) if i < k else (k, i)
                c, e = (j, k) if j < k else (k, j)
                if (a, b) not in pending and (c, e) not in pending:
                    skip = True
                    break
            if skip:
                continue
            s = _spoly(basis.elems[i], basis.leads[i], basis.elems[j], basis.leads[j], lcm, p)
            r = basis.reduce(s)
            if r:
                insert(r)
        for kind, idx, v in sorted(pending_inputs.pop(d, []), key=lambda x: (x[0], x[1])):
            r = basis.reduce(dict(v))
            if r:
                insert(r)
                if kind == 1:
                    minimal.append(idx)
    return GBResult(basis, minimal)


def interreduce(basis):
    """Reduced Groebner basis from a Groebner basis."""
    order = sorted(range(len(basis.elems)), key=lambda i: basis.leads[i])
    keep = []
    for i in order:
        if not any(_divides(basis.leads[j], basis.leads[i]) for j in keep):
            keep.append(i)
    red = _Basis(basis.field)
    for i in keep:
        red.add(basis.elems[i])
    for idx, (v, t) in enumerate(zip(red.elems, red.leads)):
        tail = dict(v)
        del tail[t]
        tail = red.reduce(tail)
        tail[t] = 1
        red.elems[idx] = tail
    return red


# -- public helpers on ambient vectors -----------------------------------------

class ModuleGB:
    """Groebner basis of a graded submodule U of the free module with given twists.

    ``U`` is generated by the given vectors, all over the ambient polynomial ring.
    """

    def __init__(self, vectors, twists, ring, reduced=True):
        self.ring = ring.ambient
        self.twists = tuple(twists)
        enc = [encode_vec(v) for v in vectors if v]
        res = run_buchberger(enc, self.twists, self.ring.field, rank_one=len(self.twists) == 1)
        self._basis = interreduce(res.basis) if reduced else res.basis

    def __len__(self):
        return len(self._basis.elems)

    def vectors(self):
        return [decode_vec(v) for v in self._basis.elems]

    def leading_monomials(self):
        """Dict pos -> list of leading exponent tuples."""
        out = {pos: [] for pos in range(len(self.twists))}
        for t in self._basis.leads:
            pos, m = decode(t)
            out[pos].append(m)
        return out

    def reduce(self, vec):
        return decode_vec(self._basis.reduce(encode_vec(vec)))

    def contains(self, vec):
        return not self._basis.reduce(encode_vec(vec))

    def key(self):
        """Canonical hashable form of the reduced basis."""
        return tuple(sorted(tuple(sorted(v.items())) for v in self._basis.elems))

    def hilbert_series(self):
        from .hilbert import module_hilbert_series
        return module_hilbert_series(self.leading_monomials(), self.twists, self.ring.nvars)


def background_vectors(ring, rank):
    """Vectors g*e_i for g in the reduced basis of J, i < rank."""
    if not ring.defining_ideal:
        return []
    gb = ring.groebner()
    return [{(i, m): c for m, c in g.terms.items()} for i in range(rank) for g in gb]


def submodule_gb(vectors, twists, ring):
    """Groebner basis over the ambient ring of the preimage of <vectors> in S^r."""
    return ModuleGB(list(vectors) + background_vectors(ring, len(twists)), twists, ring)


def mingens(vectors, twists, ring, background=()):
    """Indices of a minimal generating subset of ``vectors`` over ``ring``.

    Minimality is modulo the submodule generated by ``background`` and by J.
    """
    bg = [encode_vec(v) for v in background] + [encode_vec(v) for v in background_vectors(ring, len(twists))]
    enc = [encode_vec(v) for v in vectors]
    res = run_buchberger(enc, tuple(twists), ring.field, background=bg, rank_one=len(twists) == 1)
    return sorted(res.minimal)


def syzygy_vectors(columns, source_twists, target_twists, ring, minimal=True):
    """Generators of the kernel of the map S^c -> S^r given by ``columns``.

    Uses the augmented module {(m_j, e_j)} under position-over-term order in
    which the target block dominates: basis elements with vanishing target
    block generate the syzygies.  Over S = R/J the target block also gets
    J*e_i, and the result is pruned modulo J*S^c.
    """
    r = len(target_twists)
    c = len(source_twists)
    if c == 0:
        return []
    twists = tuple(target_twists) + tuple(source_twists)
    enc = []
    for j, col in enumerate(columns):
        v = {encode(pos, m): a for (pos, m), a in col.items()}
        v[encode(r + j, (0,) * ring.nvars)] = 1
        enc.append(v)
    bg = [encode_vec(v) for v in background_vectors(ring, r)]
    res = run_buchberger(enc, twists, ring.field, background=bg)
    basis = res.basis
    syz = []
    for v, t in zip(basis.elems, basis.leads):
        if -t[0] >= r:
            syz.append({(pos - r, m): a for (pos, m), a in decode_vec(v).items()})
    syz.sort(key=lambda v: _plain_degree(v, source_twists))
    if not minimal:
        return syz
    keep = mingens(syz, source_twists, ring)
    return [syz[i] for i in keep]


def _plain_degree(vec, twists):
    (pos, m) = next(iter(vec))
    return sum(m) + twists[pos]


def vector_degree(vec, twists):
    return _plain_degree(vec, twists)


# -- ideals --------------------------------------------------------------------

def ideal_groebner(gens, ring):
    """Reduced Groebner basis (list of monic Polynomials) of an ideal of ``ring.ambient``."""
    amb = ring.ambient
    vecs = [{(0, m): c for m, c in g.terms.items()} for g in gens if not g.is_zero()]
    gb = ModuleGB(vecs, (0,), amb)
    out = [Polynomial(amb, {m: c for (_, m), c in v.items()}, clean=False) for v in gb.vectors()]
    out.sort(key=lambda f: encode(0, f.leading_monomial()), reverse=True)
    return out


def reduce_polynomial(f, gb):
    """Normal form of ``f`` modulo a list of monic Polynomials forming a Groebner basis."""
    if f.is_zero() or not gb:
        return f
    basis = _Basis(f.ring.field)
    for g in gb:
        basis.add({encode(0, m): c for m, c in g.terms.items()})
    out = basis.reduce({encode(0, m): c for m, c in f.terms.items()})
    return Polynomial(f.ring, {decode(k)[1]: c for k, c in out.items()}, clean=False)


def normal_form(f, gb):
    """Normal form of a polynomial or vector against a Groebner basis.

    ``gb`` is a list of Polynomials (ideal case) or a ModuleGB.
    """
    if isinstance(gb, ModuleGB):
        return gb.reduce(f)
    return reduce_polynomial(f, gb)


def satisfies_buchberger_criterion(vectors, twists, field):
    """True when every S-vector of ``vectors`` reduces to zero modulo them."""
    basis = _Basis(field)
    for v in vectors:
        if v:
            basis.add(encode_vec(v))
    n = len(basis.elems)
    for i in range(n):
        for j in range(i + 1, n):
            li, lj = basis.leads[i], basis.leads[j]
            if li[0] != lj[0]:
                continue
            s = _spoly(basis.elems[i], li, basis.elems[j], lj, _lcm(li, lj), field.p)
            if basis.reduce(s):
                return False
    return True
