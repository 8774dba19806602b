"""Degree-by-degree linear algebra, independent of the Groebner engine.

Every graded piece is a finite-dimensional vector space, so Hilbert
functions, leading-term spans, kernels and homology can be checked with
Macaulay matrices alone.  These routines serve as oracles for the tests and
for cross-checks in the theorem bench.
"""
from __future__ import annotations

from itertools import combinations

from .linalg import RowSpace
from .ring import mono_mul, monomials_of_degree


def _shift_vec(vec, mono):
    return {(pos, mono_mul(m, mono)): c for (pos, m), c in vec.items()}


class DegreePiece:
    """(R^r / U)_d for U spanned by the given homogeneous vectors."""

    def __init__(self, twists, relations, rel_twists, d, ring):
        self.d = d
        n = ring.nvars
        self.basis = [(pos, m) for pos, t in enumerate(twists) for m in monomials_of_degree(n, d - t)]
        self.index = {b: k for k, b in enumerate(self.basis)}
        self.space = RowSpace(ring.field)
        for vec, t in zip(relations, rel_twists):
            for mono in monomials_of_degree(n, d - t):
                self.space.add(self.coords(_shift_vec(vec, mono)))
        piv = self.space.pivots()
        self.free_coords = [k for k in range(len(self.basis)) if k not in piv]
        self.free_index = {k: i for i, k in enumerate(self.free_coords)}

    @property
    def dim(self):
        return len(self.free_coords)

    def coords(self, vec):
        return {self.index[key]: c for key, c in vec.items() if c}

    def quotient_coords(self, vec):
        """Coordinates of the class of ``vec`` in the basis of non-pivot monomials."""
        red = self.space.reduce(self.coords(vec))
        return {self.free_index[k]: c for k, c in red.items()}

    def class_vector(self, i):
        return {self.basis[self.free_coords[i]]: 1}


def leading_monomials_in_degree(gens, ring, d):
    """Leading monomials of I_d by row reduction of the degree-d Macaulay matrix."""
    vecs = [{(0, m): c for m, c in g.terms.items()} for g in gens]
    piece = DegreePiece((0,), vecs, [g.degree() for g in gens], d, ring)
    return {piece.basis[k][1] for k in piece.space.pivots()}


def module_hf(module, d):
    """dim M_d for a GradedModule M, from its ambient presentation."""
    pres = module.ambient_presentation()
    piece = DegreePiece(pres.target.twists, pres.columns(), pres.source.twists, d, module.ring.ambient)
    return piece.dim


def kernel_dim(matrix, d):
    """dim ker(F -> G)_d for a map of free modules over the ambient ring."""
    ring = matrix.ring.ambient
    n = ring.nvars
    src = matrix.source.twists
    cols = matrix.columns()
    tgt = DegreePiece(matrix.target.twists, [], [], d, ring)
    space = RowSpace(ring.field)
    total = 0
    for c, t in enumerate(src):
        for mono in monomials_of_degree(n, d - t):
            total += 1
            space.add(tgt.coords(_shift_vec(cols[c], mono)))
    return total - space.rank


def _poly_times_vec(poly, vec):
    out = {}
    for (pos, m), c in vec.items():
        for pm, pc in poly.terms.items():
            key = (pos, mono_mul(m, pm))
            out[key] = out.get(key, 0) + c * pc
    return {k: v for k, v in out.items() if v}


def homology_dim(complex_, i, module, d):
    """dim H_i(C (x) M)_d via ranks of the induced maps on degree-d pieces."""
    ring = complex_.ring.ambient
    pres = module.ambient_presentation()
    field = ring.field
    pieces = {}

    def piece(e):
        if e not in pieces:
            pieces[e] = DegreePiece(pres.target.twists, pres.columns(), pres.source.twists, e, ring)
        return pieces[e]

    def term_dim(k):
        return sum(piece(d - t).dim for t in complex_.module(k).twists)

    def map_rank(k):
        # rank of (d_k (x) 1) from (C_k (x) M)_d to (C_{k-1} (x) M)_d
        if k < 1 or k > complex_.length:
            return 0
        dk = complex_.differential(k)
        tgt_tw = complex_.module(k - 1).twists
        offsets = []
        acc = 0
        for t in tgt_tw:
            offsets.append(acc)
            acc += piece(d - t).dim
        space = RowSpace(field)
        for c, t in enumerate(complex_.module(k).twists):
            src_piece = piece(d - t)
            for b in range(src_piece.dim):
                v = src_piece.class_vector(b)
                row = {}
                for r, tt in enumerate(tgt_tw):
                    e = dk.rows[r][c]
                    if e.is_zero():
                        continue
                    img = piece(d - tt).quotient_coords(_poly_times_vec(e, v))
                    for kk, val in img.items():
                        row[offsets[r] + kk] = val
                space.add(row)
        return space.rank

    return term_dim(i) - map_rank(i) - map_rank(i + 1)


def koszul_betti(module, degrees, max_i=None):
    """Graded Betti numbers dim Tor_i(M, k)_j from Koszul homology on the variables."""
    from .complexes import koszul_complex
    ring = module.ring.ambient
    amb_mod = module.over_ambient() if module.ring.is_quotient() else module
    kc = koszul_complex(ring, ring.gens())
    top = ring.nvars if max_i is None else max_i
    out = {}
    for i in range(top + 1):
        for j in degrees:
            b = homology_dim(kc, i, amb_mod, j)
            if b:
                out[(i, j)] = b
    return out


def subsets(n, k):
    return list(combinations(range(n), k))
