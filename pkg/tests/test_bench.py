import json

import pytest

from cmreg.bench import (CANDIDATE, HOLDS, TRUNCATED, VACUOUS, VIOLATED, Check, Hypothesis, TheoremReport,
                         add, check_betti_transfer, check_frobenius_bound, check_intersection_bound,
                         check_kahler_bounds, check_koszul_bounds, check_nonacyclic, check_power_bound_cd1,
                         check_power_bound_dim2, check_power_kernel, check_regfpd, check_regpolring,
                         check_regtor, check_regtorgen, check_regtorsing, check_rigidity_and_proper,
                         check_tensor_twists, jsonable, run_corpus, scale, summary_table)
from cmreg.complexes import koszul_complex
from cmreg.corpus import parse_ideal
from cmreg.homology import tor_multi
from cmreg.invariants import a_invariants, regularity, ring_module
from cmreg.resolution import free_resolution
from cmreg.ring import GF, NEG_INF, QQ, PolyRing, QuotientRing


def cyc(ring, text):
    return parse_ideal(ring, text).quotient_module()


def only(reports):
    assert len(reports) >= 1
    return reports


# -inf arithmetic and report plumbing -------------------------------------------------

def test_neg_inf_arithmetic():
    assert add(1, 2, 3) == 6
    assert add(1, NEG_INF) == NEG_INF
    assert scale(0, NEG_INF) == 0
    assert scale(3, NEG_INF) == NEG_INF
    assert jsonable({1: NEG_INF, 2: [float("inf"), 3]}) == {"1": "-inf", "2": ["+inf", 3]}


def report(hyps, checks, truncated=False):
    return TheoremReport("t", "x", [Hypothesis(*h) for h in hyps], [Check(*c) for c in checks],
                         truncated=truncated)


def test_verdict_rules():
    assert report([("h", "verified")], [("c", 1, 2)]).verdict == HOLDS
    assert report([("h", "verified")], [("c", 3, 2)]).verdict == VIOLATED
    assert report([("h", "asserted")], [("c", 3, 2)]).verdict == CANDIDATE
    assert report([("h", "failed")], [("c", 3, 2)]).verdict == VACUOUS
    assert report([("h", "verified")], [("c", 3, 2)], truncated=True).verdict == TRUNCATED
    assert report([], [("c", 2, 2, "=")]).verdict == HOLDS
    assert report([], [("c", 1, 2, "=")]).verdict == VIOLATED


def test_scoped_hypotheses():
    # a failed scoped hypothesis does not make the report vacuous
    r = report([("g", "verified"), ("h", "failed", "", "(ii)")], [("(i) c", 1, 2)])
    assert r.verdict == HOLDS
    # an asserted hypothesis only matters for the checks in its scope
    r = report([("g", "verified"), ("h", "asserted", "", "(ii)")], [("(i) c", 3, 2), ("(ii) d", 1, 2)])
    assert r.verdict == VIOLATED
    r = report([("g", "verified"), ("h", "asserted", "", "(ii)")], [("(ii) d", 3, 2)])
    assert r.verdict == CANDIDATE


def test_report_json():
    r = report([("h", "verified")], [("c", NEG_INF, 2)])
    out = r.to_json()
    assert out["lhs"] == "-inf" and out["rhs"] == 2 and out["relation"] == "<="
    assert out["verdict"] == HOLDS
    assert json.loads(json.dumps(out)) == out


# regfpd / regpolring ---------------------------------------------------------------------

def test_regfpd_over_polynomial_ring(R2):
    r = check_regfpd(R2, cyc(R2, "x0^2, x0*x1"))
    assert r.verdict == HOLDS
    assert (r.lhs, r.rhs, r.relation) == (1, 1, "=")
    assert r.extras["reg_S"] == 0


def test_regfpd_gate(R2):
    S = QuotientRing(R2, [R2.parse("x0*x1")])
    r = check_regfpd(S, cyc(S, "x0"))
    assert r.verdict == VACUOUS
    assert r.hypothesis("finite projective dimension").status == "failed"


def test_regfpd_smooth_quadric(R3):
    S = QuotientRing(R3, [R3.parse("x0^2 + x1^2 + x2^2")])
    M = cyc(S, "x0 + x1 + 2*x2")
    r = check_regfpd(S, M)
    assert r.verdict == HOLDS
    assert r.extras["reg_S"] == 1
    # oracle: duality over the ambient ring
    assert r.lhs == r.rhs == a_invariants(M.over_ambient()).reg == 1


def test_regpolring(R3):
    assert check_regpolring(cyc(R3, "x0^2, x1*x2")).verdict == HOLDS
    S = QuotientRing(R3, [R3.parse("x0*x1")])
    assert check_regpolring(cyc(S, "x2")).verdict == VACUOUS


# regtor and rigidity -----------------------------------------------------------------------

def test_regtor_regular_sequence(R2):
    r = check_regtor([cyc(R2, "x0^2"), cyc(R2, "x1^2")])
    assert r.verdict == HOLDS
    assert (r.lhs, r.rhs) == (2, 2)
    assert r.extras["attaining"] == [0]


def test_regtor_embedded_point(R2):
    M = cyc(R2, "x0^2, x0*x1")
    r = check_regtor([M, M])
    assert r.verdict == HOLDS
    assert (r.lhs, r.rhs) == (2, 2)
    # oracle: Tor_1(R/I, R/I) = I/I^2, one-dimensional, so the hypothesis dim <= 1 holds
    I = parse_ideal(R2, "x0^2, x0*x1")
    t1 = tor_multi([M, M], 1)
    assert t1.dimension() == 1
    hI, hI2 = I.as_module().hilbert_function(0, 8), I.power(2).as_module().hilbert_function(0, 8)
    assert t1.hilbert_function(0, 8) == {d: hI[d] - hI2[d] for d in range(9)}
    assert r.extras["attaining"]


def test_regtor_gate_without_finite_pd(R2):
    S = QuotientRing(R2, [R2.parse("x0^2")])
    k = cyc(S, "x0, x1")
    r = check_regtor([k, k])
    assert r.verdict == VACUOUS
    assert r.hypothesis("at least s-1 modules of finite projective dimension").status == "failed"


def test_regtor_over_quadric(R3):
    S = QuotientRing(R3, [R3.parse("x0*x2 - x1^2")])
    r = check_regtor([cyc(S, "x0"), cyc(S, "x2")])
    assert r.verdict == HOLDS
    assert r.extras["attaining"]


def _three_conditions(r):
    return [c.lhs for c in r.checks if c.name in ("(i) iff (ii)", "(ii) iff (iii)")]


def test_rigidity_transverse_lines(R2):
    r = check_rigidity_and_proper([cyc(R2, "x0"), cyc(R2, "x1")])
    assert r.verdict == HOLDS
    assert _three_conditions(r) == [True, True]


def test_rigidity_same_line(R2):
    r = check_rigidity_and_proper([cyc(R2, "x0"), cyc(R2, "x0")])
    assert r.verdict == HOLDS
    assert _three_conditions(r) == [False, False]
    assert not tor_multi([cyc(R2, "x0"), cyc(R2, "x0")], 1).is_zero()


def test_rigidity_non_cm_module(R2):
    M, N = cyc(R2, "x0^2, x0*x1"), cyc(R2, "x1")
    r = check_rigidity_and_proper([M, N])
    assert r.verdict == HOLDS
    assert _three_conditions(r) == [False, False]
    # oracle: Tor_1 nonzero, depth 0 < dim 1
    assert not tor_multi([M, N], 1).is_zero()
    assert a_invariants(M).depth == 0 and M.dimension() == 1


# Frobenius ----------------------------------------------------------------------------------

def test_frobenius_bound_regular_ring():
    R = PolyRing(GF(2), 2)
    reps = check_frobenius_bound(R, cyc(R, "x0, x1"), 1)
    assert [r.verdict for r in reps] == [HOLDS, HOLDS]
    assert [r.lhs for r in reps] == [0, 2]


def test_frobenius_bound_quadric():
    R = PolyRing(GF(5), 3)
    S = QuotientRing(R, [R.parse("x0^2 + x1^2 + x2^2")])
    M = cyc(S, "x2")
    reps = check_frobenius_bound(S, M, 1)
    assert [r.verdict for r in reps] == [HOLDS, HOLDS]
    # oracle: bracket power quotient seen over the ambient ring
    F = parse_ideal(R, "x0^2 + x1^2 + x2^2, x2^5").quotient_module()
    assert reps[1].lhs == regularity(F) == 5
    # e = 0 is reg(M) itself
    assert reps[0].lhs == regularity(M)


def test_frobenius_bound_char_zero_unsupported(R2):
    from cmreg.ideals import UnsupportedCharacteristic
    with pytest.raises(UnsupportedCharacteristic):
        check_frobenius_bound(R2, cyc(R2, "x0"), 1)


# powers --------------------------------------------------------------------------------------

def test_power_bound_cd1_equality(R2):
    reps = check_power_bound_cd1(parse_ideal(R2, "x0^2, x0*x1"), 3)
    assert all(r.verdict == HOLDS for r in reps)
    summary = [c for r in reps for c in r.checks if c.name == "reg(S/I^{m+1}) <= summary bound"]
    # reg(S/I^{m+1}) = 2m + 1 and the bound is attained
    assert [(c.lhs, c.rhs) for c in summary] == [(2 * m + 1, 2 * m + 1) for m in range(4)]
    # oracle: I^{m+1} = x0^{m+1} (x0, x1)^m has a linear resolution shifted by m + 1
    for m in range(4):
        gens = ", ".join(f"x0^{2 * m + 2 - k}*x1^{k}" for k in range(m + 2))
        assert free_resolution(cyc(R2, gens)).betti_table().reg() == 2 * m + 1


def test_power_bound_cd1_principal_and_maximal(R2):
    regs = [c.lhs for r in check_power_bound_cd1(parse_ideal(R2, "x0"), 3) for c in r.checks
            if c.name.startswith("reg(S/I^{m+1}) <= summary")]
    assert regs == [0, 1, 2, 3]
    reps = check_power_bound_cd1(parse_ideal(R2, "x0, x1"), 3)
    assert all(r.verdict == HOLDS for r in reps)
    regs = [c.lhs for r in reps for c in r.checks if c.name.startswith("reg(S/I^{m+1}) <= summary")]
    assert regs == [0, 1, 2, 3]


def test_power_bound_cd1_gate(R3):
    reps = check_power_bound_cd1(parse_ideal(R3, "x0"), 2)
    assert all(r.verdict == VACUOUS for r in reps)


def test_power_bound_dim2_examples(R3):
    reps = check_power_bound_dim2(parse_ideal(R3, "x0"), 3)
    assert [r.verdict for r in reps] == [HOLDS, HOLDS]
    assert [r.checks[0].lhs for r in reps] == [2, 3]
    reps = check_power_bound_dim2(parse_ideal(R3, "x0^2, x0*x1"), 3)
    assert [r.verdict for r in reps] == [HOLDS, HOLDS]
    for r, j in zip(reps, (2, 3)):
        # oracle: reg(I^j) from the Betti route on a directly computed power
        Ij = parse_ideal(R3, "x0^2, x0*x1").power(j)
        assert r.checks[0].lhs == free_resolution(Ij.as_module()).betti_table().reg()


def test_power_bound_dim2_gate():
    R4 = PolyRing(QQ, 4)
    reps = check_power_bound_dim2(parse_ideal(R4, "x0^2, x0*x1"), 2)
    assert all(r.verdict == VACUOUS for r in reps)


def test_power_bound_dim2_keeps_literal_values(R3):
    r = check_power_bound_dim2(parse_ideal(R3, "x0"), 2)[0]
    assert "literal_X1" in r.extras


def test_power_kernel_report(R3):
    r = check_power_kernel(parse_ideal(R3, "x0^2, x0*x1"), 3)
    assert r.verdict == HOLDS
    assert "literal_E" in r.extras


# Koszul bounds and complexes ---------------------------------------------------------------

def test_koszul_bounds_single_form(R2):
    r = check_koszul_bounds(ring_module(R2), [R2.parse("x0^2")])
    assert r.verdict == HOLDS
    a1 = [c for c in r.checks if c.name == "a_1(M')"][0]
    # a_1(R/(x0^2)) = 0 = a_2(R) + 2
    assert (a1.lhs, a1.rhs) == (0, 0)
    assert a_invariants(cyc(R2, "x0^2")).finite() == {1: 0}


def test_koszul_bounds_regular_sequence(R2):
    forms = [R2.parse("x0^2"), R2.parse("x1^3")]
    r = check_koszul_bounds(ring_module(R2), forms)
    assert r.verdict == HOLDS
    assert r.extras["degrees"] == [3, 2]
    # reg(M') <= reg(M) + d_1 + d_2 - 2, attained by the Koszul resolution
    assert regularity(cyc(R2, "x0^2, x1^3")) == 0 + 3 + 2 - 2


def test_koszul_bounds_empty(R2):
    r = check_koszul_bounds(cyc(R2, "x0*x1"), [])
    assert r.verdict == HOLDS
    eq = [c for c in r.checks if c.name == "empty form list: M' = M"][0]
    assert eq.lhs == eq.rhs


def test_nonacyclic_examples(R2):
    r = check_nonacyclic(koszul_complex(R2, R2.gens()), ring_module(R2))
    assert r.verdict == HOLDS
    assert r.extras["tau"] == 0
    r = check_nonacyclic(koszul_complex(R2, [R2.parse("x0^2"), R2.parse("x0^2")]), ring_module(R2))
    assert r.verdict == HOLDS
    assert r.extras["cd"][1] == 1
    # oracle: H_1 = (R/(x0^2))(-2), a_1 = 0 + 2
    eps = [c for c in r.checks if c.name == "cd<=1: a_1(H_1) <= eps_0"][0]
    assert (eps.lhs, eps.rhs) == (2, 2)


def test_nonacyclic_on_resolution(R3):
    M = cyc(R3, "x0^2, x1*x2")
    res = free_resolution(M)
    r = check_nonacyclic(res, ring_module(R3))
    assert r.verdict == HOLDS


def test_tensor_twists(R2):
    cs = [koszul_complex(R2, [R2.parse(t)]) for t in ("x0^2", "x0*x1", "x1^2")]
    r = check_tensor_twists(cs)
    assert r.verdict == HOLDS


def test_regtorgen_and_regtorsing(R2, R3):
    r = check_regtorgen(cyc(R2, "x0^2, x0*x1"), [cyc(R2, "x1"), cyc(R2, "x0")])
    assert r.verdict == HOLDS
    S = QuotientRing(R3, [R3.parse("x0*x2 - x1^2")])
    r = check_regtorsing(cyc(S, "x0"), [cyc(S, "x1")])
    assert r.verdict == HOLDS
    assert check_regtorsing(cyc(R2, "x0"), [cyc(R2, "x1")]).verdict == VACUOUS


# Betti transfer ---------------------------------------------------------------------------------

def test_betti_transfer_minimal_degree(R3):
    S = QuotientRing(R3, [R3.parse("x0*x2 - x1^2")])
    for M in (ring_module(S), cyc(S, "x0"), cyc(S, "x0, x1")):
        r = check_betti_transfer(S, M, 3)
        assert r.verdict == HOLDS
        assert any(c.name.startswith("minimal-degree") for c in r.checks)


def test_betti_transfer_ring_itself(R3):
    S = QuotientRing(R3, [R3.parse("x0^2 + x1^2 + x2^2")])
    r = check_betti_transfer(S, ring_module(S), 3)
    assert r.verdict == HOLDS
    # reg_i^S(S) = 0 at i = 0 and the module is free
    assert free_resolution(ring_module(S)).betti_table() == {(0, 0): 1}


# intersections ------------------------------------------------------------------------------------

def test_intersection_transverse_hyperplanes():
    R4 = PolyRing(QQ, 4)
    r = check_intersection_bound(R4, [parse_ideal(R4, "x0"), parse_ideal(R4, "x1")])
    assert r.verdict == HOLDS
    assert (r.lhs, r.rhs) == (0, 0)


def test_intersection_two_conics(R3):
    ideals = [parse_ideal(R3, "x0^2 + x1^2 - x2^2"), parse_ideal(R3, "x0*x1")]
    r = check_intersection_bound(R3, ideals)
    assert r.verdict == HOLDS
    # oracle: the complete intersection of two quadrics has regularity 2
    assert r.lhs == regularity(cyc(R3, "x0^2 + x1^2 - x2^2, x0*x1")) == 2
    assert r.rhs == 2


def test_intersection_on_quadric_surface():
    R4 = PolyRing(QQ, 4)
    S = QuotientRing(R4, [R4.parse("x0*x3 - x1*x2")])
    r = check_intersection_bound(S, [parse_ideal(S, "x0"), parse_ideal(S, "x3")])
    assert r.verdict == HOLDS
    assert r.extras["reg_S"] == 1
    assert r.lhs == 1 and r.rhs == 2


def test_intersection_needs_an_ideal(R3):
    with pytest.raises(ValueError):
        check_intersection_bound(R3, [])


# Kaehler ----------------------------------------------------------------------------------------------

def test_kahler_free_differentials(R3):
    r = check_kahler_bounds(QuotientRing(R3, []))
    assert r.verdict == HOLDS
    assert (r.lhs, r.rhs) == (-2, -2)
    assert all(h.status == "verified" for h in r.hypotheses)


def test_kahler_dimension_gate(R3):
    r = check_kahler_bounds(QuotientRing(R3, [R3.parse("x0*x2 - x1^2")]))
    assert r.verdict == VACUOUS


def test_kahler_quadric_surface():
    R4 = PolyRing(QQ, 4)
    r = check_kahler_bounds(QuotientRing(R4, [R4.parse("x0*x3 - x1*x2")]))
    assert r.verdict == HOLDS
    names = {c.name for c in r.checks}
    assert {"(i) a_3(Omega)", "(i) a_2(Omega)", "(ii) a_1(Omega)", "(iii) a_0(Omega)"} <= names


# corpus runner -------------------------------------------------------------------------------------------

def test_run_corpus_order_and_parallel_agree(R2):
    jobs = [("regtor", ([cyc(R2, "x0^2"), cyc(R2, "x1^2")],), {}),
            ("regpow1", (parse_ideal(R2, "x0^2, x0*x1"),), {"m_max": 2}),
            ("regfpd", (R2, cyc(R2, "x0")), {})]
    seq = run_corpus(jobs)
    par = run_corpus(jobs, parallel=True, workers=2)
    assert seq == par
    assert [r[0]["id"] for r in seq] == ["regtor", "regpow1", "regfpd"]
    flat = [r for rs in seq for r in rs]
    assert summary_table(flat) == {"regtor": {HOLDS: 1}, "regpow1": {HOLDS: 3}, "regfpd": {HOLDS: 1}}
