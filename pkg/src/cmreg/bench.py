"""Theorem checkers: compute both sides of each bound on concrete inputs.

Every checker returns a TheoremReport.  Hypotheses are verified by
computation when the engine can decide them and recorded as user
assertions otherwise; a failing inequality under verified hypotheses is a
"violated" verdict, under asserted ones only a "counterexample-candidate".
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product

from .complexes import koszul_complex, tensor_b_bound, tensor_complexes
from .functors import (NotEquidimensional, frobenius_matrix, frobenius_power, kahler_module, minors_ideal,
                       power_kernel, singular_locus)
from .homology import homology, tor_all
from .ideals import Ideal
from .invariants import a_invariants, complex_bounds, free_tensor_ainv, regularity, regularity_of_ring, ring_module
from .modules import FreeModule, GradedMatrix, GradedModule
from .resolution import free_resolution
from .ring import NEG_INF, POS_INF, PolyRing

HOLDS = "holds"
VIOLATED = "violated"
VACUOUS = "vacuous"
TRUNCATED = "truncated"
CANDIDATE = "counterexample-candidate"


# -inf arithmetic -----------------------------------------------------------

def add(*xs):
    if any(x == NEG_INF for x in xs):
        return NEG_INF
    return sum(xs)


def scale(k, x):
    """k * x with 0 * (-inf) = 0."""
    if k == 0:
        return 0
    return k * x


def vmax(*xs):
    xs = [x for x in xs if x is not None]
    return max(xs, default=NEG_INF)


def jsonable(x):
    if x == NEG_INF:
        return "-inf"
    if x == POS_INF:
        return "+inf"
    if isinstance(x, float) and x.is_integer():
        return int(x)
    if isinstance(x, dict):
        return {str(k): jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [jsonable(v) for v in x]
    return x


# report types ----------------------------------------------------------------

@dataclass
class Hypothesis:
    name: str
    status: str                 # verified | asserted | failed
    detail: str = ""
    scope: str | None = None    # None: the whole report; else a check-name prefix

    def to_json(self):
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.scope:
            out["scope"] = self.scope
        return out


@dataclass
class Check:
    name: str
    lhs: object
    rhs: object
    relation: str = "<="

    @property
    def holds(self):
        if self.relation == "<=":
            return self.lhs <= self.rhs
        return self.lhs == self.rhs

    def to_json(self):
        return {"name": self.name, "lhs": jsonable(self.lhs), "rhs": jsonable(self.rhs),
                "relation": self.relation, "holds": self.holds}


@dataclass
class TheoremReport:
    id: str
    input: str
    hypotheses: list = field(default_factory=list)
    checks: list = field(default_factory=list)
    headline: str | None = None
    truncated: bool = False
    extras: dict = field(default_factory=dict)
    seed: int | None = None

    def _main(self):
        for c in self.checks:
            if c.name == self.headline:
                return c
        return self.checks[0] if self.checks else None

    @property
    def lhs(self):
        c = self._main()
        return c.lhs if c else None

    @property
    def rhs(self):
        c = self._main()
        return c.rhs if c else None

    @property
    def relation(self):
        c = self._main()
        return c.relation if c else None

    def hypothesis(self, name):
        for h in self.hypotheses:
            if h.name == name:
                return h
        return None

    def failing(self):
        return [c for c in self.checks if not c.holds]

    @property
    def verdict(self):
        if any(h.status == "failed" and h.scope is None for h in self.hypotheses):
            return VACUOUS
        if self.truncated:
            return TRUNCATED
        bad = self.failing()
        if not bad:
            return HOLDS
        relevant = [h for h in self.hypotheses
                    if h.scope is None or any(c.name.startswith(h.scope) for c in bad)]
        if all(h.status == "verified" for h in relevant):
            return VIOLATED
        return CANDIDATE

    def to_json(self):
        out = {"id": self.id, "input": self.input,
               "hypotheses": [h.to_json() for h in self.hypotheses],
               "lhs": jsonable(self.lhs), "rhs": jsonable(self.rhs), "relation": self.relation,
               "verdict": self.verdict, "checks": [c.to_json() for c in self.checks]}
        if self.extras:
            out["extras"] = jsonable(self.extras)
        if self.seed is not None:
            out["seed"] = self.seed
        return out


def _gate(report, name, ok, detail="", asserted=False, scope=None):
    status = "verified" if ok else ("asserted" if asserted else "failed")
    report.hypotheses.append(Hypothesis(name, status, detail, scope))
    return ok or asserted


# shared computations ---------------------------------------------------------

def _describe(obj):
    if isinstance(obj, GradedModule):
        pres = obj.presentation
        if pres.target.twists == (0,):
            gens = [str(e) for e in pres.rows[0] if not e.is_zero()]
            return f"{obj.ring}/({', '.join(gens)})"
        return f"coker {pres.target.rank}x{pres.source.rank} over {obj.ring}"
    if isinstance(obj, Ideal):
        return f"({', '.join(map(str, obj.gens))}) in {obj.ring}"
    return str(obj)


def ring_depth(ring):
    return a_invariants(ring_module(ring)).depth


def projective_dimension(module):
    """pd over the module's own ring; +inf when infinite.

    Over a quotient S a finite pd is at most depth S (Auslander-Buchsbaum), so a
    resolution still running at index depth S + 1 certifies infinite pd.
    """
    if module.is_zero():
        return NEG_INF
    res = finite_resolution(module)
    return POS_INF if res is None else res.length


def finite_resolution(module):
    """The complete minimal resolution, or None when the projective dimension is infinite."""
    ring = module.ring
    if not ring.is_quotient():
        return free_resolution(module)
    res = free_resolution(module, ring_depth(ring))
    return None if res.truncated else res


def betti_upto(module, k):
    """Betti table valid in homological degrees 0..k."""
    cap = None if not module.ring.is_quotient() else max(k, 0)
    return free_resolution(module, cap).betti_table()


def proj_reg(module):
    """Regularity of the associated sheaf: max_{p >= 1} (a_p + p)."""
    return a_invariants(module).reg_from(1)


def reg(module):
    if module.ring.is_quotient():
        return a_invariants(module).reg
    return regularity(module)       # also cross-checks the Betti route


def cyclic_ideal(module):
    """The ideal I when the module is presented as S/I, else None."""
    pres = module.presentation
    if pres.target.twists != (0,):
        return None
    return Ideal(module.ring, [e for e in pres.rows[0] if not e.is_zero()])


def quotient_by_forms(module, forms):
    """M / (f_1, ..., f_s) M."""
    pres = module.presentation
    target = pres.target
    cols = list(pres.columns())
    tw = list(pres.source.twists)
    for f in forms:
        for i, t in enumerate(target.twists):
            cols.append({(i, m): c for m, c in f.terms.items()})
            tw.append(t + f.degree())
    return GradedModule(GradedMatrix.from_columns(FreeModule(module.ring, tw), target, cols))


def codim(module):
    return module.ring.nvars - module.dimension()


def is_cm(module):
    if module.is_zero():
        return True
    return a_invariants(module).depth == module.dimension()


def regular_ring(ring):
    """S = R/J is regular (a polynomial ring) iff J is generated by linear forms."""
    if not ring.is_quotient():
        return True
    J = Ideal(ring.ambient, list(ring.defining_ideal))
    return all(d == 1 for d in J.degrees())


def b0_of_defining_ideal(ring):
    if not ring.is_quotient():
        return NEG_INF
    return max(Ideal(ring.ambient, list(ring.defining_ideal)).degrees(), default=NEG_INF)


def _tor_regs(tors):
    return [a_invariants(t).reg if not t.is_zero() else NEG_INF for t in tors]


# Betti numbers over the ring and over a quotient ----------------------------

def check_regfpd(S, M):
    """reg M = reg^S M + reg S for M of finite projective dimension over S."""
    rep = TheoremReport("regfpd", _describe(M))
    res = finite_resolution(M) if not M.is_zero() else None
    ok = _gate(rep, "finite projective dimension", res is not None,
               "resolution terminates within depth(S)" if res is not None else "resolution passes depth(S)")
    lhs = a_invariants(M).reg
    if not ok:
        rep.checks.append(Check("reg = reg^S + reg(S)", lhs, NEG_INF, "="))
        return rep
    bt = res.betti_table()
    reg_s = regularity_of_ring(S)
    rhs = add(bt.reg(), reg_s)
    rep.checks.append(Check("reg = reg^S + reg(S)", lhs, rhs, "="))
    rep.headline = "reg = reg^S + reg(S)"
    if not M.is_zero():
        indeg = M.initial_degree()
        rep.checks.append(Check("reg >= indeg + reg(S)", add(indeg, reg_s), lhs))
        linear = all(j == indeg + i for (i, j) in bt.table)
        rep.checks.append(Check("linear resolution iff reg - indeg = reg(S)", linear, lhs - indeg == reg_s, "="))
        rep.extras["pdim"] = res.length
    rep.extras["reg_S"] = reg_s
    return rep


def check_regpolring(M):
    """Over a polynomial ring reg M = reg^S M = max_i (b_0(F_i) - i) = reg_p^S(M)."""
    rep = TheoremReport("regpolring", _describe(M))
    _gate(rep, "ring is a polynomial ring", not M.ring.is_quotient())
    res = free_resolution(M)
    bt = res.betti_table()
    rep.checks.append(Check("reg (duality) = reg^S (Betti)", a_invariants(M).reg, bt.reg(), "="))
    rep.checks.append(Check("reg^S = reg_n^S", bt.reg(), bt.reg_upto(M.ring.nvars), "="))
    return rep


def _e_table(bS_R, pmax):
    """E_p^R(S) = max over j_1 + ... + j_l = p, all j_t >= 2, of sum b_{j_t - 1}^R(S); 0 for p < 2."""
    E = {}
    for p in range(pmax + 1):
        if p < 2:
            E[p] = 0
            continue
        best = NEG_INF
        # compositions of p into parts >= 2, by dynamic programming on the sum
        dp = {0: 0}
        for total in range(1, p + 1):
            cands = [add(dp.get(total - j, NEG_INF), bS_R(j - 1)) for j in range(2, total + 1)
                     if total - j in dp]
            val = vmax(*cands)
            if val != NEG_INF:
                dp[total] = val
        best = dp.get(p, NEG_INF)
        E[p] = best
    return E


def check_betti_transfer(S, M, i_max=4):
    """Betti numbers over S against Betti numbers over the ambient ring R."""
    rep = TheoremReport("betti-transfer", _describe(M))
    R = S.ambient
    _gate(rep, "S = R/J with R a polynomial ring", True)
    if M.is_zero():
        _gate(rep, "M nonzero", False)
        return rep
    btS = betti_upto(M, i_max + 1)
    btR = free_resolution(M.over_ambient() if S.is_quotient() else M).betti_table()
    btRS = free_resolution(GradedModule.cyclic(R, list(S.defining_ideal))).betti_table()

    def regS(i):
        return btS.reg_upto(i)

    def regR(i):
        return btR.reg_upto(i)

    def regRS(i):
        return btRS.reg_upto(i)

    E = _e_table(btRS.b, i_max)
    for i in range(i_max + 1):
        diff = regS(i) - regR(i)
        rep.checks.append(Check(f"sandwich-left i={i}", -regRS(i), diff))
        rep.checks.append(Check(f"sandwich-right i={i}", diff, vmax(0, scale(i // 2, add(regRS(i - 1), -1)))))
        line1 = add(vmax(*[add(btR.b(i - p), E[p]) for p in range(i + 1)]), -i)
        line2 = add(vmax(*[add(btR.b(i - p), p, vmax(*[scale(l, add(regRS(p - 2 * l + 1), -1))
                                                        for l in range(p // 2 + 1)]))
                           for p in range(i + 1)]), -i)
        line3 = vmax(*[add(regR(i - p), scale(p // 2, vmax(0, add(regRS(p - 1), -1)))) for p in range(i + 1)])
        lhs = add(btS.b(i), -i)
        rep.checks.append(Check(f"E-bound i={i}", lhs, line1))
        rep.checks.append(Check(f"E-chain-2 i={i}", line1, line2))
        rep.checks.append(Check(f"E-chain-3 i={i}", line2, line3))
    rep.extras["E"] = {p: E[p] for p in E}
    reg_s = btRS.reg()
    rep.extras["reg_S"] = reg_s
    if reg_s == 1:
        _gate(rep, "reg(S) = 1", True, scope="minimal-degree")
        for j in range(i_max + 1):
            rep.checks.append(Check(f"minimal-degree lower j={j}", add(regR(j), -1), regS(j)))
            rep.checks.append(Check(f"minimal-degree upper j={j}", regS(j), regR(j)))
        r = reg(M)
        for i in range(i_max + 1):
            rep.checks.append(Check(f"minimal-degree b_i <= reg + i, i={i}", btS.b(i), add(r, i)))
    I = cyclic_ideal(M)
    if I is not None and S.is_quotient():
        for i in range(1, i_max + 1):
            rhs = add(vmax(regR(i), add(regRS(i - 1), -1)), scale((i - 1) // 2, add(regRS(i - 2), -1)))
            rep.checks.append(Check(f"ideal variant i={i}", regS(i), rhs))
    rep.headline = f"sandwich-right i={i_max}"
    _estbetti_checks(rep, M, i_max)
    return rep


def _estbetti_checks(rep, M, i_max):
    """reg_i^S(M) <= max_{p <= d} (a_p + p + reg_{i+p}^S(k)) <= reg M + reg_{d+i}^S(k)."""
    S = M.ring
    d = M.dimension()
    if d == NEG_INF:
        return
    d = int(d)
    k = GradedModule.cyclic(S, S.gens())
    btk = betti_upto(k, d + i_max + 1)
    btM = betti_upto(M, i_max + 1)
    ainv = a_invariants(M)
    for i in range(i_max + 1):
        mid = vmax(*[add(ainv[p], p, btk.reg_upto(i + p)) for p in range(d + 1)])
        rep.checks.append(Check(f"estbetti i={i}", btM.reg_upto(i), mid))
        rep.checks.append(Check(f"estbetti-chain i={i}", mid, add(ainv.reg, btk.reg_upto(d + i))))


# Tor modules -----------------------------------------------------------------

def check_regtor(modules):
    """max_i (reg Tor_i - i) = sum reg M_j - (s-1) reg S."""
    modules = list(modules)
    S = modules[0].ring
    s = len(modules)
    rep = TheoremReport("regtor", " ; ".join(_describe(m) for m in modules))
    pds = [projective_dimension(m) for m in modules]
    finite = [k for k in range(s) if pds[k] != POS_INF]
    ok = _gate(rep, "at least s-1 modules of finite projective dimension", len(finite) >= s - 1,
               f"pdims {jsonable(pds)}")
    rep.extras["pdims"] = pds
    if not ok:
        return rep
    # resolve the finite-pd modules, keep a possibly infinite one last
    order = finite[:s - 1] + [k for k in range(s) if k not in finite[:s - 1]]
    mods = [modules[k] for k in order]
    cap = ring_depth(S) if S.is_quotient() else None
    tors = tor_all(mods, cap)
    dims = [t.dimension() for t in tors]
    bad = [i for i in range(1, len(tors)) if dims[i] > 1]
    ok = _gate(rep, "dim Tor_i <= 1 for i > 0", not bad,
               f"Tor_{bad[0]} has dimension {jsonable(dims[bad[0]])}" if bad else "")
    regs = _tor_regs(tors)
    lhs = vmax(*[add(r, -i) for i, r in enumerate(regs)])
    rhs = add(sum_or_neg([reg(m) for m in modules]), -(s - 1) * regularity_of_ring(S))
    rep.checks.append(Check("max_i reg Tor_i - i = sum reg - (s-1) reg S", lhs, rhs, "="))
    rep.extras["tor_reg"] = regs
    rep.extras["attaining"] = [i for i, r in enumerate(regs) if add(r, -i) == rhs]
    return rep


def sum_or_neg(xs):
    return add(*xs) if xs else 0


def check_rigidity_and_proper(modules):
    """Rigidity of multiple Tor and the three-way properness criterion over a polynomial ring."""
    modules = list(modules)
    R = modules[0].ring
    n = R.nvars
    s = len(modules)
    rep = TheoremReport("rigidity", " ; ".join(_describe(m) for m in modules))
    _gate(rep, "polynomial ring", not R.is_quotient())
    _gate(rep, "modules nonzero", all(not m.is_zero() for m in modules))
    if rep.verdict == VACUOUS:
        return rep
    tors = tor_all(modules)
    zero = [t.is_zero() for t in tors]
    zero += [True] * (n * (s - 1) + 1 - len(zero))
    first = next((i for i, z in enumerate(zero) if z), None)
    rigid = first is None or all(zero[first:])
    rep.checks.append(Check("rigidity: Tor_i = 0 forces Tor_j = 0 for j >= i", rigid, True, "="))
    j = max(i for i, z in enumerate(zero) if not z)
    pds = [projective_dimension(m) for m in modules]
    T0 = tors[0]
    codim_t = n - T0.dimension()
    rep.checks.append(Check("codim of tensor <= sum of pdims", codim_t, sum(pds)))
    rep.headline = "codim of tensor <= sum of pdims"
    # pdim sum = n + j - eps, 0 <= eps <= dim Tor_j, eps >= eps0, equal when eps0 = depth Tor_j
    eps = n + j - sum(pds)
    depths = [a_invariants(t).depth if not t.is_zero() else POS_INF for t in tors[:j + 1]]
    eps0 = min(depths[j - i] + i for i in range(j + 1))
    rep.checks.append(Check("eps >= 0", 0, eps))
    rep.checks.append(Check("eps <= dim Tor_j", eps, tors[j].dimension()))
    rep.checks.append(Check("eps >= eps0", eps0, eps))
    if eps0 == depths[j]:
        rep.checks.append(Check("eps = eps0 when eps0 = depth Tor_j", eps, eps0, "="))
    cond1 = tors[1].is_zero() if len(tors) > 1 else True
    cond1 = cond1 and is_cm(T0.to_module())
    cond2 = codim_t == sum(pds)
    cond3 = codim_t == sum(codim(m) for m in modules) and all(is_cm(m) for m in modules)
    rep.checks.append(Check("(i) iff (ii)", cond1, cond2, "="))
    rep.checks.append(Check("(ii) iff (iii)", cond2, cond3, "="))
    rep.extras.update({"conditions": [cond1, cond2, cond3], "top_tor": j, "pdims": pds,
                       "eps": eps, "eps0": eps0, "graded_reinterpretation": True})
    return rep


def _b_partial(tables, ell):
    """max over i_1 + ... + i_s <= ell of sum b_{i_k}(M_k)."""
    best = NEG_INF
    for idx in product(range(ell + 1), repeat=len(tables)):
        if sum(idx) <= ell:
            best = vmax(best, add(*[t.b(i) for t, i in zip(tables, idx)]))
    return best


def check_regtorgen(M, modules):
    """End degrees of Tor_0 against a(M) and Betti degrees of the other modules."""
    modules = list(modules)
    R = M.ring
    rep = TheoremReport("regtorgen", " ; ".join(_describe(m) for m in [M] + modules))
    _gate(rep, "polynomial ring", not R.is_quotient())
    if R.is_quotient():
        return rep
    tors = tor_all(modules + [M])
    tau = vmax(*[t.dimension() for t in tors[1:]])
    d = M.dimension()
    if d == NEG_INF:
        return rep
    d = int(d)
    tables = [free_resolution(m).betti_table() for m in modules]
    b = {l: _b_partial(tables, l) for l in range(d + len(tors) + 1)}
    aM = a_invariants(M)
    aT = [a_invariants(t) for t in tors]
    start = 0 if tau == NEG_INF else max(int(tau) - 1, 0)
    for p in range(start, d + 1):
        rhs = vmax(*[add(aM[p + i], b[i]) for i in range(d - p + 1)])
        rep.checks.append(Check(f"(i) p={p}", aT[0][p], rhs))
    if tau <= 1:
        for q in range(len(tors)):
            rhs = vmax(*[add(aM[i], b.get(q + i, NEG_INF)) for i in range(d + 1)])
            rep.checks.append(Check(f"(iv) a_0(T_{q})", aT[q][0], rhs))
            if q >= 1:
                rhs = vmax(*[add(aM[i], b.get(q + i - 1, NEG_INF)) for i in range(d + 1)])
                rep.checks.append(Check(f"(iv) a_1(T_{q})", aT[q][1], rhs))
    rep.extras["tau"] = tau
    return rep


def check_regtorsing(M, modules, assertions=None):
    """a_p(T_0) <= max_l (a_{p+l}(M) + C_l + l) over a ring with reg S > 0."""
    assertions = assertions or {}
    S = M.ring
    rep = TheoremReport("regtorsing", " ; ".join(_describe(m) for m in [M] + list(modules)))
    reg_s = regularity_of_ring(S)
    if not _gate(rep, "reg(S) > 0", reg_s > 0):
        return rep
    mods = sorted(modules, key=lambda m: -(reg(m) - m.initial_degree()))
    d = M.dimension()
    if d == NEG_INF:
        return rep
    d = int(d)
    # tau = max dim T_i (i > 0) is bounded by max(dim Sing S, dim T_1)
    try:
        sing = singular_locus(S, assertions.get("equidimensional", False))
        sing_dim = sing.dim
        _gate(rep, "J equidimensional", True, sing.equidimensional)
    except NotEquidimensional as exc:
        _gate(rep, "J equidimensional", False, str(exc))
        return rep
    tors = tor_all(mods + [M], 2, top=1)
    tau = vmax(sing_dim, tors[1].dimension())
    tables = [betti_upto(m, d + 1) for m in mods]
    C = {}
    for l in range(d + 1):
        C[l] = vmax(*[add(*[t.reg_upto(i) for t, i in zip(tables, idx)])
                      for idx in product(range(l + 1), repeat=len(mods)) if sum(idx) == l])
        rep.checks.append(Check(f"C_{l} bound", C[l], add(sum_or_neg([reg(m) for m in mods]),
                                                          scale(l // 2, reg_s - 1))))
    aM = a_invariants(M)
    aT0 = a_invariants(tors[0])
    start = 0 if tau == NEG_INF else max(int(tau) - 1, 0)
    for p in range(start, d + 1):
        rhs = vmax(*[add(aM[p + l], C[l], l) for l in range(d - p + 1)])
        rep.checks.append(Check(f"a_{p}(T_0)", aT0[p], rhs))
        rhs2 = add(aM.reg_from(p), sum_or_neg([reg(m) for m in mods]),
                   scale((d - int(tau if tau != NEG_INF else 0) + 1) // 2, reg_s - 1))
        rep.checks.append(Check(f"reg^{p}(T_0)", aT0.reg_from(p), rhs2))
    rep.extras["tau_bound"] = tau
    return rep


# Frobenius -------------------------------------------------------------------

def sing_supp_dim(S, M, assert_equidimensional=False):
    """dim(Sing(S) cap Supp(M)) via M / (J + Jacobian minors) M, and the caveat flag."""
    if not S.is_quotient():
        return NEG_INF, False, "verified"
    sing = singular_locus(S, assert_equidimensional)
    amb = S.ambient
    J = Ideal(amb, list(S.defining_ideal))
    fs = J.minimal_generators()
    jac = [[f.derivative(i) for i in range(amb.nvars)] for f in fs]
    minors = minors_ideal(jac, sing.codim, amb)
    forms = [S.reduce(g) for g in minors.gens]
    forms = [g for g in forms if not g.is_zero()]
    sub = quotient_by_forms(M, forms)
    return sub.dimension(), sing.inseparability_caveat, sing.equidimensional


def check_frobenius_bound(S, M, e_max=1, assertions=None):
    """reg(F^e M) against the Betti-number bound and its corollary, e = 0..e_max."""
    assertions = assertions or {}
    p = S.characteristic
    if p == 0:
        from .ideals import UnsupportedCharacteristic
        raise UnsupportedCharacteristic("Frobenius bounds need a prime characteristic")
    reports = []
    hyps = []
    try:
        dim_ss, caveat, equi = sing_supp_dim(S, M, assertions.get("equidimensional", False))
        asserted = bool(assertions.get("sing-supp-dim<=1"))
        status = "verified" if dim_ss <= 1 else ("asserted" if asserted else "failed")
        if status == "verified" and (caveat or equi == "asserted"):
            status = "asserted"
        hyps.append(Hypothesis("dim(Sing(S) cap Supp(M)) <= 1", status,
                               f"computed {jsonable(dim_ss)}" + ("; small characteristic" if caveat else "")))
    except NotEquidimensional as exc:
        asserted = bool(assertions.get("sing-supp-dim<=1"))
        hyps.append(Hypothesis("dim(Sing(S) cap Supp(M)) <= 1", "asserted" if asserted else "failed", str(exc)))
        dim_ss = None
    dim_s = int(ring_module(S).dimension())
    aS = a_invariants(ring_module(S))
    reg_s = aS.reg
    bt = betti_upto(M, dim_s)
    reg_m = a_invariants(M).reg
    regular = regular_ring(S)
    I = cyclic_ideal(M)
    for e in range(e_max + 1):
        q = p ** e
        rep = TheoremReport("frobenius", f"{_describe(M)}, e={e}", hypotheses=list(hyps))
        rep.extras["q"] = q
        if rep.verdict == VACUOUS:
            reports.append(rep)
            continue
        FM = frobenius_power(M, e)
        lhs = a_invariants(FM).reg
        sharp = vmax(*[add(scale(q, bt.b(i)), aS[j], j - i)
                       for j in range(dim_s + 1) for i in range(j + 1)])
        second = add(reg_s, vmax(*[add(scale(q, bt.b(i)), -i) for i in range(dim_s + 1)]))
        rep.checks.append(Check("reg F^e M <= sharp bound", lhs, sharp))
        rep.checks.append(Check("sharp <= reg S + max(q b_i - i)", sharp, second))
        if regular:
            cor = add(reg_s, scale(q, add(reg_m, dim_s)))
            name = "reg F^e M <= corollary bound (regular S)"
        else:
            cor = add(reg_s, scale(q, add(reg_m, scale(dim_s // 2, reg_s - 1), dim_s)))
            name = "reg F^e M <= corollary bound"
        rep.checks.append(Check(name, lhs, cor))
        rep.headline = "reg F^e M <= sharp bound"
        if I is not None and not M.is_zero():
            rep.checks.append(Check("bracket power route = Frobenius presentation route",
                                    a_invariants(I.bracket_power(q).quotient_module()).reg,
                                    _frobenius_betti_route(M, q), "="))
        rep.extras["reg_FM"] = lhs
        reports.append(rep)
    return reports


def _frobenius_betti_route(M, q):
    """reg of coker(F^e d_1) from its minimal resolution over the ambient polynomial ring."""
    d1 = free_resolution(M, 1).differential(1)
    FM = GradedModule(frobenius_matrix(d1, q)) if d1.source.rank else GradedModule.free(
        M.ring, [q * t for t in d1.target.twists])
    amb = FM.over_ambient() if M.ring.is_quotient() else FM
    return free_resolution(amb).betti_table().reg()


def frobenius_tor_table(M, e_max, i_max=None):
    """reg H_i(F^e F) for the minimal resolution F of M; tabulated only, never judged."""
    from .functors import frobenius_tor
    p = M.ring.characteristic
    S = M.ring
    i_max = i_max if i_max is not None else int(ring_module(S).dimension())
    out = {}
    for e in range(e_max + 1):
        row = {}
        for i in range(1, i_max + 1):
            h = frobenius_tor(M, e, i, length_cap=i_max + 1)
            row[i] = a_invariants(h).reg if not h.is_zero() else NEG_INF
        out[p ** e] = row
    return out


# powers ----------------------------------------------------------------------

def check_power_bound_cd1(I, m_max=4):
    """End degrees of S/I^{m+1} for an ideal with cd(S/I) <= 1."""
    S = I.ring
    A = I.quotient_module()
    ainv = a_invariants(A)
    reports = []
    base = []
    cd = ainv.cd
    base.append(Hypothesis("cd(S/I) <= 1", "verified" if cd <= 1 else "failed", f"cd = {jsonable(cd)}"))
    if I.is_zero() or I.is_unit():
        base.append(Hypothesis("I proper and nonzero", "failed"))
    if any(h.status == "failed" for h in base):
        for m in range(m_max + 1):
            reports.append(TheoremReport("regpow1", f"{_describe(I)}, m={m}", hypotheses=list(base)))
        return reports
    btI = betti_upto(I.as_module(), 1)
    b0, b1 = btI.b(0), btI.b(1)
    reg1 = btI.reg_upto(1)
    a0, a1 = ainv[0], ainv[1]
    reg_a = ainv.reg
    sat_reg = add(a_invariants(I.saturation().quotient_module()).reg, 1)
    bJ = b0_of_defining_ideal(S)
    for m in range(m_max + 1):
        rep = TheoremReport("regpow1", f"{_describe(I)}, m={m}", hypotheses=list(base))
        P = I.power(m + 1).quotient_module()
        aP = a_invariants(P)
        rep.checks.append(Check("(i) a_1(S/I^{m+1}) <= a_1(S/I) + m b_0", aP[1], add(a1, scale(m, b0))))
        rep.checks.append(Check("(ii) a_0(S/I^{m+1})", aP[0],
                                add(vmax(add(a0, b0), add(a1, b1)), scale(m - 1, b0))))
        summary = add(vmax(add(a0, b0), add(a1, 1, reg1)), scale(m - 1, b0))
        rep.checks.append(Check("reg(S/I^{m+1}) <= summary bound", aP.reg, summary))
        cor = add(vmax(reg_a, add(bJ, -2)), vmax(sat_reg, b0), scale(m - 1, b0))
        rep.checks.append(Check("reg(S/I^{m+1}) <= corollary bound", aP.reg, cor))
        rep.headline = "reg(S/I^{m+1}) <= summary bound"
        rep.extras.update({"m": m, "reg": aP.reg})
        reports.append(rep)
    return reports


def minimal_primes_monomial(I):
    """Minimal primes of a monomial ideal, as sorted tuples of variable indices."""
    n = I.ring.nvars
    supports = [tuple(k for k, e in enumerate(g.leading_monomial()) if e) for g in I.minimal_generators()]
    covers = []
    for size in range(n + 1):
        for P in combinations(range(n), size):
            if all(any(k in P for k in sup) for sup in supports):
                if not any(set(c) <= set(P) for c in covers):
                    covers.append(P)
    return covers


def is_monomial_ideal(I):
    return all(len(g.terms) == 1 for g in I.minimal_generators())


def generic_ci_monomial(I, dim):
    """At each minimal prime P with dim R/P = dim, I_P is generated by pure powers of the variables of P."""
    n = I.ring.nvars
    for P in minimal_primes_monomial(I):
        if n - len(P) != dim:
            continue
        local = set()
        for g in I.minimal_generators():
            m = g.leading_monomial()
            local.add(tuple(m[k] if k in P else 0 for k in range(n)))
        mins = [a for a in local if not any(b != a and all(x <= y for x, y in zip(b, a)) for b in local)]
        if len(mins) != len(P) or any(sum(1 for x in a if x) != 1 for a in mins):
            return False
    return True


def _generic_ci(rep, I, dim, assertions):
    if is_monomial_ideal(I):
        ok = generic_ci_monomial(I, dim)
        return _gate(rep, "generically a complete intersection", ok, "monomial minimal primes")
    if len(I.minimal_generators()) == I.ring.nvars - dim:
        return _gate(rep, "generically a complete intersection", True, "complete intersection")
    asserted = bool(assertions.get("generic-ci"))
    return _gate(rep, "generically a complete intersection", False,
                 "not decidable for this input; assert generic-ci=true", asserted)


def check_power_bound_dim2(I, j_max=4, assertions=None):
    """Bounds on reg(I^j) for dim R/I = 2, generically a complete intersection."""
    assertions = assertions or {}
    R = I.ring
    reports = []
    A = I.quotient_module()
    dim = A.dimension()
    probe = TheoremReport("regpow-dim2", _describe(I))
    _gate(probe, "polynomial ring", not R.is_quotient())
    ok = _gate(probe, "dim R/I = 2", dim == 2, f"dim = {jsonable(dim)}")
    if ok:
        _generic_ci(probe, I, 2, assertions)
    if probe.verdict == VACUOUS:
        for j in range(2, j_max + 1):
            reports.append(TheoremReport("regpow-dim2", f"{_describe(I)}, j={j}", hypotheses=list(probe.hypotheses)))
        return reports
    ainv = a_invariants(A)
    a0, a1, a2 = ainv[0], ainv[1], ainv[2]
    bt = free_resolution(I.as_module()).betti_table()
    b = [bt.b(i) for i in range(4)]
    # b'_i = max_{j <= i} (b_j + i - j); equals b_i while the resolution of I is long enough
    bp = {i: vmax(*[add(b[j], i - j) for j in range(i + 1)]) for i in range(1, 4)}
    literal_bp = {i: vmax(*b[1:i + 1]) for i in range(1, 4)}
    degs = I.degrees()
    d1 = degs[0]
    d2 = degs[1] if len(degs) > 1 else NEG_INF
    reg_i = reg(I.as_module())
    reg_sat = reg(I.saturation().as_module())
    for j in range(2, j_max + 1):
        rep = TheoremReport("regpow-dim2", f"{_describe(I)}, j={j}", hypotheses=list(probe.hypotheses))
        lhs = reg(I.power(j).as_module())
        if j == 2:
            x1 = add(vmax(add(a0, b[0]), add(a1, bp[1]), add(a2, bp[2]), add(a2, d1, d2)), 1)
            x2 = vmax(add(reg_i, vmax(b[0], add(b[1], -1), add(b[2], -2))), add(a2, 2 * b[0], 1))
            x3 = vmax(2 * reg_i, add(reg_sat, 2 * b[0] - 2))
            rep.checks += [Check("reg(I^2) <= X1", lhs, x1), Check("X1 <= X2", x1, x2), Check("X2 <= X3", x2, x3)]
            rep.extras["literal_X1"] = add(vmax(add(a0, b[0]), add(a1, literal_bp[1]), add(a2, literal_bp[2]),
                                                add(a2, d1, d2)), 1)
            rep.headline = "reg(I^2) <= X1"
        else:
            B = vmax(add(bp[2], b[0]), scale(2, bp[1]), add(2 * d1, d2))
            y1 = add(vmax(add(a0, 2 * b[0]), add(a1, bp[1], b[0]), add(a2, B)), (j - 3) * b[0], 1)
            y2 = vmax(3 * reg_i + (j - 3) * b[0], add(a2, j * b[0], 1))
            y3 = vmax(3 * reg_i + (j - 3) * b[0], add(reg_sat, j * b[0] - 2))
            rep.checks += [Check(f"reg(I^{j}) <= Y1", lhs, y1), Check("Y1 <= Y2", y1, y2), Check("Y2 <= Y3", y2, y3)]
            rep.headline = f"reg(I^{j}) <= Y1"
        rep.extras.update({"j": j, "reg": lhs})
        reports.append(rep)
    return reports


def check_power_kernel(I, ell_max=3, assertions=None):
    """Bounds through T_l = ker(I (x) I^{l-1} -> I^l) and Tor_m(S/I, S/I) for dim S/I = 2."""
    assertions = assertions or {}
    S = I.ring
    A = I.quotient_module()
    rep = TheoremReport("power-kernel", _describe(I))
    if not _gate(rep, "dim S/I = 2", A.dimension() == 2, f"dim = {jsonable(A.dimension())}"):
        return rep
    ci = _generic_ci(rep, I, 2, {**assertions, "generic-ci": assertions.get("generic-ci")})
    # the CI hypothesis only gates parts (iii), (iv) and the Tor bounds
    rep.hypotheses[-1].scope = "ci:"
    ainv = a_invariants(A)
    a = [ainv[i] for i in range(3)]
    btI = betti_upto(I.as_module(), 3)
    bI = [btI.b(i) for i in range(4)]
    degs = I.degrees()
    d = degs + [NEG_INF] * 4
    regular = regular_ring(S)
    bJ = b0_of_defining_ideal(S)
    reg_I = a_invariants(I.as_module()).reg
    aT = {}
    E = {}
    literal_E = {}
    for ell in range(2, ell_max + 1):
        prev = a_invariants(I.power(ell - 1).quotient_module())
        # the shift i - j turns end degrees into a bound on the regularity
        E[ell] = vmax(*[add(prev[i], bI[j], i - j) for i in range(3) for j in range(i + 1)])
        literal_E[ell] = vmax(*[add(prev[i], bI[j]) for i in range(3) for j in range(i + 1)])
        bound = add(prev.reg, reg_I)
        if not regular:
            bound = vmax(bound, add(prev[2], bJ, bI[0]))
        rep.checks.append(Check(f"(i) E_{ell}", E[ell], bound))
        T = power_kernel(I, ell).T
        aT[ell] = a_invariants(T)[2] if not T.is_zero() else NEG_INF
        cur = a_invariants(I.power(ell).quotient_module()).reg
        rep.checks.append(Check(f"(ii) reg(S/I^{ell}) <= max(E, a_2(T))", cur, vmax(E[ell], aT[ell])))
        rep.checks.append(Check(f"(ii) reg > E iff a_2(T) > E, l={ell}", cur > E[ell], aT[ell] > E[ell], "="))
        if aT[ell] > E[ell]:
            rep.checks.append(Check(f"(ii) reg = a_2(T), l={ell}", cur, aT[ell], "="))
        if ci:
            if ell == 2:
                rep.checks.append(Check("ci:(iii) a_2(T_2)", aT[2], add(a[2], d[0], d[1])))
            else:
                rep.checks.append(Check(f"ci:(iii) a_2(T_{ell})", aT[ell], add(aT[ell - 1], bI[0])))
    if ci and 2 in E:
        e3 = vmax(add(E[2], bI[0]), add(a[2], scale(2, bI[1])))
        reg_a = ainv.reg
        bound = add(reg_a, scale(2, reg_I))
        if not regular:
            bound = vmax(bound, add(a[2], bJ, scale(2, bI[0])))
        rep.checks.append(Check("ci:(iv) E'_3", e3, bound))
        rep.checks.append(Check("ci:(iv) reg(S/I^2)", a_invariants(I.power(2).quotient_module()).reg,
                                vmax(E[2], add(a[2], d[0], d[1]))))
        for ell in range(3, ell_max + 1):
            rep.checks.append(Check(f"ci:(iv) reg(S/I^{ell})", a_invariants(I.power(ell).quotient_module()).reg,
                                    add(vmax(e3, add(a[2], 2 * d[0], d[1])), (ell - 3) * d[0])))
        _tor_square_checks(rep, I, a, bI, d, ell_max)
    rep.extras["a2_T"] = aT
    rep.extras["E"] = E
    rep.extras["literal_E"] = literal_E
    return rep


def _tor_square_checks(rep, I, a, bI, d, m_max):
    """a_i(Tor_m(S/I, S/I)) against a(S/I), Betti degrees of I and generator degrees."""
    S = I.ring
    A = I.quotient_module()
    cap = m_max + 2 if S.is_quotient() else None
    tors = tor_all([A, A], cap, top=m_max + 1)
    at = [a_invariants(t) if not t.is_zero() else None for t in tors]

    def ai(m, i):
        return at[m][i] if at[m] is not None else NEG_INF

    def b(i):
        return bI[i] if 0 <= i < len(bI) else (betti_upto(I.as_module(), i).b(i) if i >= 0 else NEG_INF)

    for m in range(1, m_max + 1):
        dsum = add(*d[:m])
        rep.checks.append(Check(f"ci:lemma a_2(Tor_{m})", ai(m, 2), add(a[2], dsum)))
        rep.checks.append(Check(f"ci:tor a_1(Tor_{m})", ai(m, 1), vmax(add(a[1], b(m - 1)), add(a[2], b(m)))))
        first = vmax(add(a[0], b(m - 1)), add(a[1], b(m)), add(a[2], b(m + 1)), ai(m + 1, 2))
        rep.checks.append(Check(f"ci:tor a_0(Tor_{m})", ai(m, 0), first))
        rep.checks.append(Check(f"ci:tor a_0 chain m={m}", first,
                                vmax(add(a[0], b(m - 1)), add(a[1], b(m)), add(a[2], b(m + 1)),
                                     add(a[2], add(*d[:m + 1])))))


# Koszul bounds and complexes ------------------------------------------------

def check_koszul_bounds(M, forms):
    """a_i(M / (f) M) <= max_k (a_{i+k}(M) + d_1 + ... + d_k) for i >= dim M' - 1."""
    forms = sorted(forms, key=lambda f: -f.degree())
    R = M.ring
    rep = TheoremReport("koszul-bounds", f"{_describe(M)}; forms {', '.join(map(str, forms))}")
    _gate(rep, "polynomial ring", not R.is_quotient())
    _gate(rep, "forms homogeneous of positive degree", all(f.is_homogeneous() and f.degree() >= 1 for f in forms))
    if rep.verdict == VACUOUS:
        return rep
    degs = [f.degree() for f in forms]
    s = len(degs)
    Mp = quotient_by_forms(M, forms)
    aM = a_invariants(M)
    aP = a_invariants(Mp)
    delta = M.dimension()
    deltap = Mp.dimension()
    if delta == NEG_INF:
        rep.checks.append(Check("M' = 0", aP.reg, NEG_INF, "="))
        return rep
    delta = int(delta)

    def D(k):
        return sum(degs[:k])

    start = 0 if deltap == NEG_INF else max(int(deltap) - 1, 0)
    for i in range(start, delta + 1):
        rhs = vmax(*[add(aM[i + k], D(k)) for k in range(min(s, delta - i) + 1)])
        rep.checks.append(Check(f"a_{i}(M')", aP[i], rhs))
    if not forms:
        rep.checks.append(Check("empty form list: M' = M", aP.finite(), aM.finite(), "="))
    if deltap == 1 and s >= delta:
        first = vmax(*[add(aM[k], D(k)) for k in range(delta + 1)])
        rep.checks.append(Check("dim 1: reg(M')", aP.reg, first))
        rep.checks.append(Check("dim 1: chain", first, add(aM.reg, sum(d - 1 for d in degs[:delta]))))
    if deltap == 2 and s >= delta - 1:
        first = add(vmax(*[add(aM[k], D(k - 1)) for k in range(1, delta + 1)]), 1)
        rep.checks.append(Check("dim 2: reg(M'/H^0)", aP.reg_from(1), first))
        rep.checks.append(Check("dim 2: chain", first, add(aM.reg_from(1), sum(d - 1 for d in degs[:delta - 1]))))
    rep.extras.update({"dim_M": delta, "dim_M'": deltap, "degrees": degs})
    return rep


def two_ideal_estimates(I, J):
    """Side-by-side estimates of a_p(R/(I+J)) from Betti data; reported, not judged."""
    R = I.ring
    n = R.nvars
    bI = free_resolution(I.quotient_module()).betti_table()
    bJ = free_resolution(J.quotient_module()).betti_table()
    aJ = a_invariants(J.quotient_module())
    actual = a_invariants((I + J).quotient_module())
    rows = {}
    for p in range(n + 1):
        sym = add(vmax(*[add(bI.b(i), bJ.b(n - p - i)) for i in range(n - p + 1)]), -n)
        koz = vmax(*[add(bI.b(i), aJ[p + i]) for i in range(n - p + 1)])
        rows[p] = {"a_p": actual[p], "tensor-estimate": sym, "koszul-estimate": koz}
    return rows


def side_conditions(homologies):
    """Smallest tau with cd H_i <= max(tau, tau - 1 + i) for all i > 0."""
    cds = {i: h.dimension() for i, h in enumerate(homologies) if i > 0}
    tau = 0
    while any(c != NEG_INF and c > max(tau, tau - 1 + i) for i, c in cds.items()):
        tau += 1
    return tau, cds


def check_nonacyclic(D, M):
    """a_p(H_0) <= delta_p and the epsilon bounds for D = F (x) M with F free."""
    R = D.ring
    rep = TheoremReport("nonacyclic", f"complex of length {D.length} (x) {_describe(M)}")
    _gate(rep, "polynomial ring", not R.is_quotient())
    L = D.length
    H = [homology(D, i, M) for i in range(L + 1)]
    aM = a_invariants(M)
    terms = [free_tensor_ainv(aM, D.module(i)) for i in range(L + 1)]
    delta, eps = complex_bounds(terms)
    tau, cds = side_conditions(H)
    _gate(rep, f"D_1(tau) with tau = {tau}", True)
    aH = [a_invariants(h) if not h.is_zero() else None for h in H]

    def a(q, p):
        return aH[q][p] if aH[q] is not None else NEG_INF

    def dl(p):
        return delta.get(p, NEG_INF)

    def ep(q):
        return eps.get(q, NEG_INF)

    top = max(delta, default=0)
    for p in range(max(tau - 1, 0), top + 1):
        rep.checks.append(Check(f"a_{p}(H_0) <= delta_{p}", a(0, p), dl(p)))
    if all(c <= 1 for c in cds.values()):
        _gate(rep, "cd H_i <= 1 for i >= 1", True, scope="cd<=1")
        for p in range(0, top + 1):
            rep.checks.append(Check(f"cd<=1: a_{p}(H_0) <= delta_{p}", a(0, p), dl(p)))
        for q in range(1, L + 1):
            rep.checks.append(Check(f"cd<=1: a_0(H_{q}) <= eps_{q}", a(q, 0), ep(q)))
            rep.checks.append(Check(f"cd<=1: a_1(H_{q}) <= eps_{q - 1}", a(q, 1), ep(q - 1)))
    rep.extras.update({"tau": tau, "cd": cds, "delta": delta, "eps": eps})
    return rep


# intersections ---------------------------------------------------------------

def _intersection_hypotheses(rep, S, ideals, assertions):
    """Locally CM, proper, S regular outside a set of dimension <= 1 around Z."""
    total = ideals[0]
    for I in ideals[1:]:
        total = total + I
    Z = total.quotient_module()
    if Z.dimension() <= 2:
        return _gate(rep, "local hypotheses outside a curve", True, "dim Z <= 1 projectively")
    cm = all(is_cm(I.quotient_module()) for I in ideals)
    dS = ring_module(S).dimension()
    proper = dS - Z.dimension() == sum(dS - I.quotient_module().dimension() for I in ideals)
    smooth = True
    if S.is_quotient():
        try:
            smooth = sing_supp_dim(S, Z, assertions.get("equidimensional", False))[0] <= 1
        except NotEquidimensional:
            smooth = False
    ok = cm and proper and smooth
    asserted = bool(assertions.get("local-cm-proper"))
    return _gate(rep, "local hypotheses outside a curve", ok,
                 "global CM, proper and smooth" if ok else "assert local-cm-proper=true", asserted)


def check_intersection_bound(S, ideals, assertions=None):
    """reg of an intersection of projective schemes against the regularities of the pieces."""
    assertions = assertions or {}
    ideals = list(ideals)
    if not ideals:
        raise ValueError("need at least one ideal")
    rep = TheoremReport("intersection", " ; ".join(_describe(I) for I in ideals))
    total = ideals[0]
    for I in ideals[1:]:
        total = total + I
    lhs = proj_reg(total.quotient_module())
    reg_ss = proj_reg(ring_module(S))
    if not S.is_quotient():
        pieces = sorted((proj_reg(I.quotient_module()) for I in ideals), reverse=True)
        n = S.nvars - 1
        _intersection_hypotheses(rep, S, ideals, assertions)
        rhs = sum_or_neg(pieces[:min(n, len(pieces))])
        rep.checks.append(Check("reg(Z) <= sum of the largest reg(Z_i)", lhs, rhs))
        rep.extras["reg_Z_i"] = pieces
        return rep
    _gate(rep, "reg(S) > 0", reg_ss > 0, f"reg = {jsonable(reg_ss)}")
    Z0 = ideals[0]
    rest = sorted((proj_reg(I.quotient_module()) for I in ideals[1:]), reverse=True)
    dim_z0 = Z0.quotient_module().dimension() - 1
    e = int(min(len(rest), max(dim_z0, 0)))
    _gate(rep, "reg(Z_i) >= reg(S) - 1 for i <= min(s, dim Z_0)", all(r >= reg_ss - 1 for r in rest[:e]))
    _intersection_hypotheses(rep, S, ideals, assertions)
    rhs = add(proj_reg(Z0.quotient_module()), sum_or_neg(rest[:e]), scale(int((dim_z0 - 1) // 2), reg_ss - 1))
    rep.checks.append(Check("reg(Z) <= reg(Z_0) + sum reg(Z_i) + correction", lhs, rhs))
    rep.extras.update({"reg_S": reg_ss, "reg_Z_i": rest, "dim_Z0": dim_z0})
    return rep


# Kaehler differentials --------------------------------------------------------

def check_kahler_bounds(B, assertions=None):
    """a_i(Omega_B) for a surface B = R/I, generically a complete intersection."""
    assertions = assertions or {}
    rep = TheoremReport("kahler", str(B))
    A = ring_module(B)
    if not _gate(rep, "dim B = 3", A.dimension() == 3, f"dim = {jsonable(A.dimension())}"):
        return rep
    amb = B.ambient
    I = Ideal(amb, list(B.defining_ideal))
    if not _generic_ci(rep, I, 3, assertions):
        return rep
    km = kahler_module(B)
    aO = a_invariants(km.omega)
    aB = a_invariants(A)
    a = [aB[i] for i in range(4)]
    bt = free_resolution(I.as_module()).betti_table()
    b = [bt.b(i) for i in range(4)]
    degs = I.degrees() + [NEG_INF] * 3
    rep.checks.append(Check("(i) a_3(Omega)", aO[3], add(a[3], 1)))
    rep.checks.append(Check("(i) a_2(Omega)", aO[2], vmax(add(a[2], 1), add(a[3], b[0]))))
    rep.headline = "(i) a_3(Omega)"
    ngens = len(I.minimal_generators())
    # the polynomial ring itself is smooth; treat it like a smooth hypersurface
    hyper = ngens <= 1
    sing = NEG_INF if ngens == 0 else None
    caveat = False
    if ngens == 1:
        try:
            sl = singular_locus(B)
            sing = sl.dim
            caveat = sl.inseparability_caveat
        except NotEquidimensional:
            caveat = True
    reduced = hyper and sing is not None and sing <= 2
    _gate(rep, "generically reduced", reduced and not caveat if hyper else False,
          "hypersurface singular locus" if hyper else "assert generically-reduced=true",
          bool(assertions.get("generically-reduced")) or (reduced and hyper), scope="(ii)")
    if rep.hypotheses[-1].status != "failed":
        rep.checks.append(Check("(ii) a_1(Omega)", aO[1], vmax(add(a[1], 1), add(a[2], b[0]), add(a[3], b[1]))))
    rci = hyper and sing is not None and sing <= 1
    _gate(rep, "reduced complete intersection outside finitely many points", rci and not caveat if hyper else False,
          "hypersurface singular locus" if hyper else "assert reduced-ci-outside-points=true",
          bool(assertions.get("reduced-ci-outside-points")) or (rci and hyper), scope="(iii)")
    if rep.hypotheses[-1].status != "failed":
        rep.checks.append(Check("(iii) a_0(Omega)", aO[0], vmax(add(a[0], 1), add(a[1], b[0]), add(a[2], b[1]),
                                                                add(a[3], b[2]), add(a[3], degs[0], degs[1]))))
    # vanishing of local cohomology of the conormal module
    aC = a_invariants(km.conormal)
    rep.checks.append(Check("conormal a_1", aC[1], vmax(add(a[1], b[0]), add(a[2], b[1]), add(a[3], b[2]),
                                                        add(a[3], degs[0], degs[1]))))
    rep.checks.append(Check("conormal a_2", aC[2], vmax(add(a[2], b[0]), add(a[3], b[1]))))
    rep.checks.append(Check("conormal a_3", aC[3], add(a[3], b[0])))
    rep.extras["a_Omega"] = aO.finite()
    return rep


# tensor twists ----------------------------------------------------------------

def check_tensor_twists(complexes):
    """b_l of a tensor product of free complexes is the max of sums of b_{i_k}."""
    rep = TheoremReport("tensor-twists", f"{len(complexes)} complexes")
    T = tensor_complexes(*complexes)
    for l in range(T.length + 1):
        actual = max(T.module(l).twists, default=NEG_INF)
        rep.checks.append(Check(f"b_{l}", actual, tensor_b_bound(complexes, l), "="))
    return rep


# corpus runner -----------------------------------------------------------------

CHECKERS = {
    "regfpd": check_regfpd, "regpolring": check_regpolring, "regtor": check_regtor,
    "rigidity": check_rigidity_and_proper, "regtorgen": check_regtorgen, "regtorsing": check_regtorsing,
    "frobenius": check_frobenius_bound, "regpow1": check_power_bound_cd1,
    "regpow-dim2": check_power_bound_dim2, "power-kernel": check_power_kernel,
    "koszul-bounds": check_koszul_bounds, "nonacyclic": check_nonacyclic,
    "betti-transfer": check_betti_transfer, "intersection": check_intersection_bound,
    "kahler": check_kahler_bounds,
}


def _flatten(result):
    return result if isinstance(result, list) else [result]


def _run_job(job):
    name, args, kwargs = job
    return [r.to_json() for r in _flatten(CHECKERS[name](*args, **kwargs))]


def run_corpus(jobs, parallel=False, workers=None):
    """Run (checker-name, args, kwargs) jobs; output order always follows the job order."""
    if not parallel:
        return [_run_job(j) for j in jobs]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_run_job, jobs))


def summary_table(reports):
    """Counts of verdicts per theorem id."""
    counts = {}
    for r in reports:
        rid = r["id"] if isinstance(r, dict) else r.id
        verdict = r["verdict"] if isinstance(r, dict) else r.verdict
        counts.setdefault(rid, {}).setdefault(verdict, 0)
        counts[rid][verdict] += 1
    return counts


__all__ = ["Check", "Hypothesis", "TheoremReport", "CHECKERS", "run_corpus", "summary_table",
           "koszul_complex", "PolyRing"] + [f.__name__ for f in CHECKERS.values()]
