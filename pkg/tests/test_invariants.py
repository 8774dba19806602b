import pytest

from cmreg.bench import check_nonacyclic, side_conditions
from cmreg.complexes import ChainComplex, koszul_complex
from cmreg.corpus import parse_ideal, random_ideal_corpus, random_module_tuples
from cmreg.homology import homology
from cmreg.invariants import (AInvariants, RouteUnavailable, a_invariants, complex_bounds,
                              free_tensor_ainv, regularity, ring_module)
from cmreg.modules import GradedModule
from cmreg.resolution import free_resolution
from cmreg.ring import NEG_INF, QQ, PolyRing, QuotientRing


# pinned duality bookkeeping ------------------------------------------------------

def test_a_invariants_of_polynomial_ring(R2):
    a = a_invariants(ring_module(R2))
    assert a.finite() == {2: -2}
    assert a[0] == a[1] == NEG_INF
    assert a.reg == 0


def test_a_invariants_of_line(R2):
    a = a_invariants(parse_ideal(R2, "x0").quotient_module())
    assert a.finite() == {1: -1}
    assert a.reg == 0


def test_a_invariants_with_embedded_point(R2):
    M = parse_ideal(R2, "x0^2, x0*x1").quotient_module()
    a = a_invariants(M)
    assert a.finite() == {0: 1, 1: -1}
    assert a.reg == 1
    # Betti route: reg = max(0 - 0, 2 - 1, 3 - 2)
    assert free_resolution(M).betti_table().reg() == 1
    # socle in degree 1: x0 is killed by the maximal ideal
    assert M.hilbert_function(1, 1) == {1: 2}


def test_a_invariants_json(R2):
    a = a_invariants(parse_ideal(R2, "x0^2, x0*x1").quotient_module())
    assert a.to_json() == {"a": {"0": 1, "1": -1}, "reg": 1, "cd": 1}


def test_zero_module_has_no_finite_a_invariants(R2):
    a = a_invariants(parse_ideal(R2, "1").quotient_module())
    assert a.finite() == {}
    assert a.reg == NEG_INF and a.cd == NEG_INF


def test_regularity_examples(R2):
    assert regularity(ring_module(R2)) == 0
    for d in range(1, 6):
        f = f"x0^{d} + x1^{d}"
        assert regularity(parse_ideal(R2, f).quotient_module(), "both") == d - 1


def test_regularity_over_smooth_quadric():
    R = PolyRing(QQ, 3)
    S = QuotientRing(R, [R.parse("x0^2 + x1^2 + x2^2")])
    M = parse_ideal(S, "x0").quotient_module()
    dual = regularity(M)
    # oracle: the same module seen over the ambient ring
    assert dual == free_resolution(M.over_ambient()).betti_table().reg() == 1
    # x0 is a nonzerodivisor on S, so pd_S M = 1 and reg = reg^S(M) + reg(S)
    res = free_resolution(M)
    assert not res.truncated
    assert res.betti_table().reg() == 0
    assert regularity(M, "betti") == dual
    k = parse_ideal(S, "x0, x1, x2").quotient_module()
    with pytest.raises(RouteUnavailable):
        regularity(k, "betti")
    assert regularity(k) == 0


def test_regularity_betti_route_over_quotient_with_finite_pd():
    R = PolyRing(QQ, 3)
    S = QuotientRing(R, [R.parse("x0*x2 - x1^2")])
    M = ring_module(S)
    assert regularity(M, "betti") == regularity(M) == 1


# complex bounds -------------------------------------------------------------------

def test_complex_bounds_koszul(R2):
    K = koszul_complex(R2, [R2.parse("x0^2"), R2.parse("x1^3")])
    aR = a_invariants(ring_module(R2))
    terms = [free_tensor_ainv(aR, K.module(i)) for i in range(3)]
    # a_2(R) + b_i: -2, 1, 3
    assert [t[2] for t in terms] == [-2, 1, 3]
    delta, eps = complex_bounds(terms)
    assert delta[0] == 3
    # epsilon_0 picks up a_2(D_2); epsilon_1 only sees a_0, a_1 of the terms
    assert eps == {0: 3, 1: NEG_INF, 2: NEG_INF}


def test_complex_bounds_empty():
    assert complex_bounds([]) == ({0: NEG_INF}, {})


def test_complex_bounds_free_complex_over_ring(R3):
    res = free_resolution(parse_ideal(R3, "x0^2, x1*x2, x2^3").quotient_module())
    aR = a_invariants(ring_module(R3))
    terms = [free_tensor_ainv(aR, res.module(i)) for i in range(res.length + 1)]
    delta, _ = complex_bounds(terms)
    bt = res.betti_table()
    for p in delta:
        expect = max((aR[p + i] + bt.b(i) for i in range(res.length + 1) if aR[p + i] != NEG_INF),
                     default=NEG_INF)
        assert delta[p] == expect


# corpus-scale properties -------------------------------------------------------------

CORPUS = random_ideal_corpus(7, 200)


@pytest.mark.parametrize("name,I", CORPUS, ids=[c[0] for c in CORPUS])
def test_routes_agree_and_cd_is_dimension(name, I):
    M = I.quotient_module()
    assert regularity(M, "both") == free_resolution(M).betti_table().reg()
    a = a_invariants(M)
    assert a.cd == M.dimension() or (M.is_zero() and a.cd == NEG_INF)
    assert all(i <= M.dimension() for i in a.finite())


def _koszul_tensor_cases():
    out = []
    for name, mods in random_module_tuples(31, 40):
        M = mods[0]
        R = M.ring
        forms = [m.presentation.rows[0][0] for m in mods[1:] if m.presentation.source.rank]
        forms = [f for f in forms if not f.is_zero()]
        if forms:
            out.append((name, koszul_complex(R, forms), M))
    return out


@pytest.mark.parametrize("name,K,M", _koszul_tensor_cases(), ids=lambda x: x if isinstance(x, str) else "")
def test_nonacyclic_bounds(name, K, M):
    rep = check_nonacyclic(K, M)
    assert rep.verdict == "holds", rep.failing()


def test_side_condition_tau(R2):
    K = koszul_complex(R2, [R2.parse("x0"), R2.parse("x0")])
    M = ring_module(R2)
    H = [homology(K, i, M) for i in range(3)]
    tau, cds = side_conditions(H)
    # H_1 = R/(x0)(-1) has dimension 1
    assert cds == {1: 1, 2: NEG_INF}
    assert tau == 1
