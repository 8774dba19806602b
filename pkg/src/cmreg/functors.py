"""Frobenius powers, kernels of multiplication on powers, Kaehler differentials,
and the Jacobian estimate of the singular locus."""
from __future__ import annotations

from itertools import combinations

from . import groebner as gb
from .homology import Subquotient, homology
from .ideals import Ideal, UnsupportedCharacteristic
from .modules import FreeModule, GradedMatrix, GradedModule
from .resolution import free_resolution


def _frobenius_q(ring, e):
    p = ring.characteristic
    if p == 0:
        raise UnsupportedCharacteristic("Frobenius needs a prime characteristic")
    if e < 0:
        raise ValueError("e must be non-negative")
    return p ** e


def frobenius_matrix(mat, q):
    ring = mat.ring
    src = FreeModule(ring, [q * t for t in mat.source.twists])
    tgt = FreeModule(ring, [q * t for t in mat.target.twists])
    return mat.map_entries(lambda f: ring.reduce(f ** q), src, tgt)


def frobenius_power(module, e):
    """F^e(coker A) = coker(A^[q]): entries to the q = p^e power, twists times q."""
    q = _frobenius_q(module.ring, e)
    return GradedModule(frobenius_matrix(module.presentation, q))


def frobenius_complex(complex_, e):
    q = _frobenius_q(complex_.ring, e)
    ring = complex_.ring
    return complex_.map_entries(lambda f: ring.reduce(f ** q), lambda t: q * t)


def frobenius_tor(module, e, i, length_cap=None):
    """H_i of F^e applied to the minimal resolution, i.e. Tor_i^S(M, S^[e])."""
    res = free_resolution(module, length_cap)
    fc = frobenius_complex(res, e)
    h = homology(fc, i)
    # H_i needs F_{i+1}; a truncated resolution only provides it below its length
    if res.truncated and i >= res.length:
        h.truncated = True
    return h


class PowerKernel:
    def __init__(self, ell, T):
        self.ell = ell
        self.T = T

    def __repr__(self):
        return f"PowerKernel(ell={self.ell}, {self.T})"


def power_kernel(ideal, ell):
    """T_ell = ker(I (x) I^{ell-1} -> I^ell) as a Subquotient of the free cover."""
    if ell < 2:
        raise ValueError("ell must be at least 2")
    ring = ideal.ring
    fa = ideal.minimal_generators()
    fb = ideal.power(ell - 1).minimal_generators()
    ma = GradedModule.from_ideal(ring, fa)
    mb = GradedModule.from_ideal(ring, fb)
    tw = [f.degree() + g.degree() for f in fa for g in fb]
    free = FreeModule(ring, tw)
    row = [ring.reduce(f * g) for f in fa for g in fb]
    zero = (0,) * ring.nvars
    # a product that vanishes in S leaves its basis vector in the kernel
    numerator = [{(k, zero): 1} for k, h in enumerate(row) if h.is_zero()]
    nonzero = [k for k, h in enumerate(row) if not h.is_zero()]
    if nonzero:
        cols = [{(0, m): c for m, c in row[k].terms.items()} for k in nonzero]
        syz = gb.syzygy_vectors(cols, [tw[k] for k in nonzero], (0,), ring, minimal=False)
        for v in syz:
            numerator.append({(nonzero[pos], m): c for (pos, m), c in v.items()})
    denominator = ma.tensor(mb).presentation.columns()
    return PowerKernel(ell, Subquotient(free, numerator, denominator))


class KahlerModule:
    def __init__(self, ring, omega, K, conormal):
        self.ring = ring
        self.omega = omega
        self.K = K
        self.conormal = conormal

    def __repr__(self):
        return f"KahlerModule({self.omega})"


def jacobian(gens, ring):
    n = ring.nvars
    return [[g.derivative(i) for g in gens] for i in range(n)]


def kahler_module(B):
    """Omega_B = coker(Jacobian: I/I^2 -> B(-1)^n) and K = ker of that map.

    ``B`` is a QuotientRing R/I over a polynomial ring R.
    """
    amb = B.ambient
    n = amb.nvars
    I = Ideal(amb, list(B.defining_ideal))
    fs = I.minimal_generators()
    degs = [f.degree() for f in fs]
    jac = jacobian(fs, amb)
    tgt = FreeModule(B, [1] * n)
    src = FreeModule(B, degs)
    psi = GradedMatrix(src, tgt, jac)
    omega = GradedModule(psi)
    # conormal module I/I^2 = I (x) B, presented over B
    conormal = GradedModule(GradedModule.from_ideal(amb, fs).presentation.with_ring(B))
    # K: x in B^s with psi(x) = 0 in B(-1)^n, modulo the relations of I/I^2
    if fs:
        syz = gb.syzygy_vectors(psi.columns(), degs, [1] * n, B, minimal=False)
    else:
        syz = []
    denominator = conormal.presentation.columns()
    K = Subquotient(FreeModule(B, degs), syz, denominator)
    return KahlerModule(B, omega, K, conormal)


def minors_ideal(matrix, size, ring):
    """Ideal of size x size minors, by Laplace expansion with memoization."""
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    if size == 0:
        return Ideal(ring, [ring.one()])
    if size > min(rows, cols):
        return Ideal(ring, [])
    memo = {}

    def det(rs, cs):
        key = (rs, cs)
        if key in memo:
            return memo[key]
        if len(rs) == 1:
            val = matrix[rs[0]][cs[0]]
        else:
            val = ring.zero()
            for k, c in enumerate(cs):
                a = matrix[rs[0]][c]
                if a.is_zero():
                    continue
                sub = det(rs[1:], cs[:k] + cs[k + 1:])
                term = a * sub
                val = val + term if k % 2 == 0 else val - term
        memo[key] = val
        return val

    gens = [det(rs, cs) for rs in combinations(range(rows), size) for cs in combinations(range(cols), size)]
    return Ideal(ring, [g for g in gens if not g.is_zero()])


class SingularLocus:
    def __init__(self, dim, codim, caveat, equidimensional):
        self.dim = dim
        self.codim = codim
        self.inseparability_caveat = caveat
        self.equidimensional = equidimensional

    def __repr__(self):
        return f"SingularLocus(dim={self.dim}, codim={self.codim}, caveat={self.inseparability_caveat})"


class NotEquidimensional(ValueError):
    pass


def singular_locus(S, assert_equidimensional=False):
    amb = S.ambient
    J = Ideal(amb, list(S.defining_ideal))
    fs = J.minimal_generators()
    dim_s = J.quotient_module().dimension()
    codim = amb.nvars - dim_s
    # principal ideals and complete intersections are unmixed
    verified = len(fs) == codim
    if not verified and not assert_equidimensional:
        raise NotEquidimensional(
            "cannot verify that J is equidimensional (not a complete intersection); "
            "pass an explicit assertion to proceed")
    jac = [[f.derivative(i) for i in range(amb.nvars)] for f in fs]
    minors = minors_ideal(jac, codim, amb) if fs else Ideal(amb, [amb.one()])
    dim = (J + minors).quotient_module().dimension()
    p = S.characteristic
    caveat = bool(p) and p <= max((f.degree() for f in fs), default=0)
    return SingularLocus(dim, codim, caveat, "verified" if verified else "asserted")


def sing_locus_dim(S, assert_equidimensional=False):
    """Krull dimension of V(J + c x c Jacobian minors), c = codim J; -inf if empty."""
    return singular_locus(S, assert_equidimensional).dim


__all__ = ["KahlerModule", "NotEquidimensional", "PowerKernel", "SingularLocus", "frobenius_complex",
           "frobenius_power", "frobenius_tor", "jacobian", "kahler_module", "minors_ideal",
           "power_kernel", "sing_locus_dim", "singular_locus"]
