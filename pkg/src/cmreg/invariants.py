"""Local cohomology end degrees, regularity and complex bounds.

a_i(M) = max{mu : H^i_m(M)_mu != 0} is computed by graded local duality over
the ambient polynomial ring R with n variables:
a_i(M) = -indeg Ext^{n-i}_R(M, R(-n)), and -inf when that Ext vanishes.
"""
from __future__ import annotations

from .complexes import BettiTable
from .homology import Subquotient, ext_modules
from .modules import GradedModule
from .resolution import free_resolution
from .ring import NEG_INF, POS_INF


class RouteUnavailable(Exception):
    """The requested computation route does not apply to this input."""


class RouteMismatch(AssertionError):
    """Two independent routes produced different values."""


def _fmt(x):
    if x == NEG_INF:
        return "-inf"
    if x == POS_INF:
        return "+inf"
    return int(x)


class AInvariants:
    """The end degrees a_0..a_n of the local cohomology modules."""

    def __init__(self, values):
        self.values = dict(values)

    def __getitem__(self, i):
        return self.values.get(i, NEG_INF)

    def __eq__(self, other):
        return isinstance(other, AInvariants) and self.finite() == other.finite()

    def finite(self):
        return {i: a for i, a in self.values.items() if a != NEG_INF}

    @property
    def reg(self):
        return max((a + i for i, a in self.finite().items()), default=NEG_INF)

    def reg_from(self, start):
        """max_{i >= start} (a_i + i); start = 1 gives the regularity of Proj."""
        return max((a + i for i, a in self.finite().items() if i >= start), default=NEG_INF)

    @property
    def cd(self):
        return max(self.finite(), default=NEG_INF)

    @property
    def depth(self):
        return min(self.finite(), default=POS_INF)

    def shifted(self, s):
        return AInvariants({i: a + s for i, a in self.values.items()})

    def to_json(self):
        return {"a": {str(i): int(a) for i, a in sorted(self.finite().items())},
                "reg": _fmt(self.reg), "cd": _fmt(self.cd)}

    def __repr__(self):
        return f"AInvariants({self.finite()})"


def _as_module(m):
    if isinstance(m, Subquotient):
        return m.to_module()
    return m


def a_invariants(module):
    module = _as_module(module)
    if "ainv" in module._cache:
        return module._cache["ainv"]
    n = module.ring.nvars
    exts = ext_modules(module, shift=-n)
    vals = {}
    for i in range(n + 1):
        k = n - i
        vals[i] = -exts[k].initial_degree() if k < len(exts) else NEG_INF
    out = AInvariants(vals)
    module._cache["ainv"] = out
    return out


def ring_module(ring):
    return GradedModule.free(ring, [0])


def regularity_of_ring(ring):
    """reg(S) for S = R/J, from the R-resolution of S."""
    amb = ring.ambient
    res = free_resolution(GradedModule.cyclic(amb, list(ring.defining_ideal)))
    return res.betti_table().reg()


def regularity(module, route="duality"):
    """Castelnuovo-Mumford regularity.

    route="duality": max(a_i + i), checked against the Betti route over a
    polynomial ring.  route="betti": reg^S(M) (+ reg(S) over a quotient ring,
    which needs finite projective dimension).  route="both": compute both and
    insist they agree.
    """
    module = _as_module(module)
    if route not in ("duality", "betti", "both"):
        raise ValueError(f"unknown route {route!r}")
    ring = module.ring
    if route == "betti" or route == "both":
        res = free_resolution(module)
        if ring.is_quotient():
            if res.truncated:
                raise RouteUnavailable("resolution over the quotient ring is infinite")
            betti = res.betti_table().reg()
            if betti != NEG_INF:
                betti = betti + regularity_of_ring(ring)
        else:
            betti = res.betti_table().reg()
        if route == "betti":
            return betti
    dual = a_invariants(module).reg
    if route == "duality" and not ring.is_quotient():
        betti = free_resolution(module).betti_table().reg()
    elif route == "duality":
        return dual
    if dual != betti:
        raise RouteMismatch(f"duality route gives {dual}, Betti route gives {betti}")
    return dual


def depth(module):
    return a_invariants(module).depth


def dimension(module):
    return _as_module(module).dimension()


def is_cohen_macaulay(module):
    module = _as_module(module)
    if module.is_zero():
        return True
    return depth(module) == module.dimension()


def free_tensor_ainv(ainv, free):
    """a_p(F (x) M) = a_p(M) + b_0(F) for F free and nonzero."""
    if free.rank == 0:
        return AInvariants({})
    return ainv.shifted(max(free.twists))


def complex_bounds(terms):
    """(delta, epsilon) of a complex D_0 <- D_1 <- ... from the a-invariants of its terms.

    delta_p = max_i a_{p+i}(D_i), epsilon_q = max_i a_i(D_{q+i}).
    """
    terms = list(terms)
    top = max([max(t.finite(), default=0) for t in terms] + [0])
    delta = {}
    for p in range(top + 1):
        delta[p] = max((t[p + i] for i, t in enumerate(terms)), default=NEG_INF)
    eps = {}
    for q in range(len(terms)):
        eps[q] = max((terms[q + i][i] for i in range(len(terms) - q)), default=NEG_INF)
    return delta, eps


def betti_of(module, length_cap=None):
    res = free_resolution(_as_module(module), length_cap)
    return res.betti_table(), res.truncated


__all__ = ["AInvariants", "BettiTable", "RouteMismatch", "RouteUnavailable", "a_invariants",
           "complex_bounds", "depth", "dimension", "free_tensor_ainv", "is_cohen_macaulay",
           "regularity", "regularity_of_ring", "ring_module"]
