"""Subquotients, homology of complexes tensored with modules, Tor, Ext."""
from __future__ import annotations

from . import groebner as gb
from .complexes import ChainComplex, koszul_complex, tensor_complexes
from .modules import FreeModule, GradedMatrix, GradedModule, hstack, kronecker
from .resolution import free_resolution
from .ring import POS_INF


class Subquotient:
    """N/D with D, N submodules of a free S-module, given by generating vectors.

    Vectors are ambient vectors ``{(pos, exps): coeff}``; J*F is always added to
    the denominator so the quotient is an S-module.
    """

    def __init__(self, free, numerator, denominator, truncated=False):
        self.free = free
        self.ring = free.ring
        self.twists = free.twists
        self.numerator = [v for v in numerator if v]
        self.denominator = [v for v in denominator if v]
        self.truncated = truncated
        self._cache = {}

    def denominator_gb(self):
        if "den" not in self._cache:
            self._cache["den"] = gb.submodule_gb(self.denominator, self.twists, self.ring)
        return self._cache["den"]

    def total_gb(self):
        if "tot" not in self._cache:
            self._cache["tot"] = gb.submodule_gb(self.numerator + self.denominator, self.twists, self.ring)
        return self._cache["tot"]

    def hilbert_series(self):
        if "hs" not in self._cache:
            self._cache["hs"] = self.denominator_gb().hilbert_series() - self.total_gb().hilbert_series()
        return self._cache["hs"]

    def hilbert_function(self, lo, hi):
        return self.hilbert_series().values(lo, hi)

    def dimension(self):
        return self.hilbert_series().dimension()

    def is_zero(self):
        return self.initial_degree() == POS_INF

    def initial_degree(self):
        """Least degree of a numerator generator not in D; +inf when N/D = 0."""
        if "indeg" not in self._cache:
            den = self.denominator_gb()
            best = POS_INF
            for v in sorted(self.numerator, key=lambda v: gb.vector_degree(v, self.twists)):
                d = gb.vector_degree(v, self.twists)
                if d >= best:
                    break
                if not den.contains(v):
                    best = d
            self._cache["indeg"] = best
        return self._cache["indeg"]

    def to_module(self):
        """A presentation of N/D as a GradedModule over S."""
        if "module" in self._cache:
            return self._cache["module"]
        ring = self.ring
        nums = sorted(self.numerator, key=lambda v: gb.vector_degree(v, self.twists))
        keep = gb.mingens(nums, self.twists, ring, background=self.denominator)
        gens = [nums[i] for i in keep]
        gtw = [gb.vector_degree(v, self.twists) for v in gens]
        cols = gens + self.denominator + gb.background_vectors(ring, len(self.twists))
        ctw = [gb.vector_degree(v, self.twists) for v in cols]
        syz = gb.syzygy_vectors(cols, ctw, self.twists, ring.ambient, minimal=False)
        k = len(gens)
        rel = []
        for v in syz:
            w = {(pos, m): a for (pos, m), a in v.items() if pos < k}
            if w:
                rel.append(w)
        tgt = FreeModule(ring, gtw)
        rel = [{key: a for key, a in _reduce_vec(w, ring).items()} for w in rel]
        rel = [w for w in rel if w]
        rel.sort(key=lambda v: gb.vector_degree(v, gtw))
        keep = gb.mingens(rel, gtw, ring) if rel else []
        rel = [rel[i] for i in keep]
        src = FreeModule(ring, [gb.vector_degree(v, gtw) for v in rel])
        mod = GradedModule(GradedMatrix.from_columns(src, tgt, rel))
        self._cache["module"] = mod
        return mod

    def __repr__(self):
        return f"Subquotient(rank={len(self.twists)}, num={len(self.numerator)}, den={len(self.denominator)})"


def _reduce_vec(vec, ring):
    if not ring.defining_ideal:
        return vec
    by_pos = {}
    for (pos, m), a in vec.items():
        by_pos.setdefault(pos, {})[m] = a
    out = {}
    amb = ring.ambient
    from .ring import Polynomial
    for pos, terms in by_pos.items():
        f = ring.reduce(Polynomial(amb, terms, clean=False))
        for m, a in f.terms.items():
            out[(pos, m)] = a
    return out


def _identity_vectors(rank, nvars):
    zero = (0,) * nvars
    return [{(i, zero): 1} for i in range(rank)]


def homology(complex_, i, module=None):
    """H_i(C (x)_S M) as a Subquotient; M defaults to S itself."""
    ring = complex_.ring
    amb = ring.ambient
    if module is None:
        module = GradedModule.free(ring, [0])
    pres = module.ambient_presentation()
    m_twists = pres.target.twists
    f_i = complex_.module(i)
    twists = [s + t for s in f_i.twists for t in m_twists]
    free = FreeModule(ring, twists)
    if not twists:
        return Subquotient(free, [], [], complex_.truncated and i >= complex_.length)
    m_free = FreeModule(amb, m_twists)
    ident_m = GradedMatrix.identity(m_free)

    def amb_mat(d):
        return d.with_ring(amb)

    def relation_block(fm):
        return kronecker(GradedMatrix.identity(FreeModule(amb, fm.twists)), pres)

    # cycles: x with (d_i (x) 1) x in the relations of F_{i-1} (x) M
    if i == 0 or complex_.module(i - 1).rank == 0:
        cycles = _identity_vectors(len(twists), amb.nvars)
    else:
        d = kronecker(amb_mat(complex_.differential(i)), ident_m)
        rel = relation_block(complex_.module(i - 1))
        big = hstack(d.target, [d, rel])
        syz = gb.syzygy_vectors(big.columns(), big.source.twists, big.target.twists, amb, minimal=False)
        n = len(twists)
        cycles = []
        for v in syz:
            w = {(pos, mm): a for (pos, mm), a in v.items() if pos < n}
            if w:
                cycles.append(w)
    bounds = relation_block(f_i).columns()
    if complex_.module(i + 1).rank:
        bounds += kronecker(amb_mat(complex_.differential(i + 1)), ident_m).columns()
    # H_i is only reliable below the truncation length
    truncated = complex_.truncated and i >= complex_.length
    return Subquotient(free, cycles, bounds, truncated)


def tor_multi(modules, i, length_cap=None):
    """Tor_i^S(M_1, ..., M_s): resolve all but the last, tensor, take H_i."""
    if len(modules) < 2:
        raise ValueError("need at least two modules")
    resolutions = [free_resolution(m, length_cap) for m in modules[:-1]]
    cx = tensor_complexes(*resolutions)
    h = homology(cx, i, modules[-1])
    if any(r.truncated and i >= r.length for r in resolutions):
        h.truncated = True
    return h


def tor_all(modules, length_cap=None, top=None):
    """All Tor_i for i = 0..top (default: length of the tensor complex)."""
    resolutions = [free_resolution(m, length_cap) for m in modules[:-1]]
    cx = tensor_complexes(*resolutions)
    top = cx.length if top is None else top
    out = []
    for i in range(top + 1):
        h = homology(cx, i, modules[-1])
        if any(r.truncated and i >= r.length for r in resolutions):
            h.truncated = True
        out.append(h)
    return out


def tor1_cycles(ideals):
    """Tor_1(S/I_1, ..., S/I_s) as M/P, M the zero-sum tuples of I_1 + ... + I_s."""
    if len(ideals) < 2:
        raise ValueError("need at least two ideals")
    ring = ideals[0].ring
    s = len(ideals)
    free = FreeModule(ring, [0] * s)
    gens = [[g for g in I.gens if not g.is_zero()] for I in ideals]
    flat = [(k, g) for k in range(s) for g in gens[k]]
    if not flat:
        return Subquotient(free, [], [])
    tw = [g.degree() for _, g in flat]
    row = [{(0, m): c for m, c in g.terms.items()} for _, g in flat]
    syz = gb.syzygy_vectors(row, tw, (0,), ring, minimal=False)
    amb = ring.ambient
    from .ring import Polynomial
    numerator = []
    for v in syz:
        parts = [amb.zero() for _ in range(s)]
        coeffs = {}
        for (pos, m), a in v.items():
            coeffs.setdefault(pos, {})[m] = a
        for pos, terms in coeffs.items():
            k, g = flat[pos]
            parts[k] = parts[k] + Polynomial(amb, terms, clean=False) * g
        vec = {}
        for k, f in enumerate(parts):
            f = ring.reduce(f)
            for m, a in f.terms.items():
                vec[(k, m)] = a
        if vec:
            numerator.append(vec)
    denominator = []
    for i in range(s):
        for j in range(i + 1, s):
            for u in gens[i]:
                for w in gens[j]:
                    f = ring.reduce(u * w)
                    vec = {(i, m): a for m, a in f.terms.items()}
                    vec.update({(j, m): -a for m, a in f.terms.items()})
                    if vec:
                        denominator.append(vec)
    return Subquotient(free, numerator, denominator)


def koszul_homology(forms, i, module=None, ring=None):
    """H_i(f_1..f_s; M)."""
    ring = ring if ring is not None else module.ring
    return homology(koszul_complex(ring, forms), i, module)


def dual_complex_homology(res, shift):
    """Ext^k(M, R(shift)) for k = 0..length of the resolution ``res`` over R."""
    out = []
    L = res.length
    for k in range(L + 1):
        fk = res.module(k)
        dual = fk.dual(shift)
        if k < L:
            dt = res.differential(k + 1).transpose(shift)
            syz = gb.syzygy_vectors(dt.columns(), dt.source.twists, dt.target.twists, res.ring.ambient,
                                    minimal=False)
            numerator = syz
        else:
            numerator = _identity_vectors(fk.rank, res.ring.nvars)
        denominator = res.differential(k).transpose(shift).columns() if k >= 1 else []
        out.append(Subquotient(dual, numerator, denominator))
    return out


def ext_modules(module, shift=0):
    """[Ext^k_R(M, R(shift)) for k = 0..pd_R M], R the ambient polynomial ring."""
    key = ("ext", shift)
    if key not in module._cache:
        amb_mod = module.over_ambient() if module.ring.is_quotient() else module
        res = free_resolution(amb_mod)
        module._cache[key] = dual_complex_homology(res, shift)
    return module._cache[key]
