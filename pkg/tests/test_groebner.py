import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cmreg import groebner as gb
from cmreg.corpus import parse_ideal, random_binomial_ideal
from cmreg.ideals import Ideal, UnsupportedCharacteristic, hilbert_data, ideal_ops
from cmreg.modules import FreeModule, GradedMatrix, GradedModule
from cmreg.oracles import DegreePiece, kernel_dim, leading_monomials_in_degree
from cmreg.ring import GF, NEG_INF, POS_INF, QQ, PolyRing, mono_divides, monomials_of_degree
from strategies import polynomials


def lead_span(basis, ring, d):
    leads = [g.leading_monomial() for g in basis]
    return {m for m in monomials_of_degree(ring.nvars, d) if any(mono_divides(l, m) for l in leads)}


def test_groebner_examples(R2):
    assert Ideal(R2, [R2.parse("x0^2"), R2.parse("x0*x1")]).groebner() == [R2.parse("x0^2"), R2.parse("x0*x1")]
    assert Ideal(R2, [R2.parse("x0")]).groebner() == [R2.parse("x0")]


def test_groebner_matches_macaulay_matrices(R2):
    gens = [R2.parse("x0^2 + x1^2"), R2.parse("x0*x1")]
    basis = Ideal(R2, gens).groebner()
    # x0^3, x0^2 + x1^2, x0*x1 and x1^3
    assert len(basis) == 3
    for d in range(7):
        assert lead_span(basis, R2, d) == leading_monomials_in_degree(gens, R2, d)


def test_groebner_is_reduced(R3):
    I = parse_ideal(R3, "x0^2 - x1*x2, x0*x1 - x2^2, x1^2 - x0*x2")
    basis = I.groebner()
    leads = [g.leading_monomial() for g in basis]
    for g in basis:
        assert g.leading_coefficient() == 1
        for m in g.terms:
            assert not any(mono_divides(l, m) for l in leads if l != g.leading_monomial())


def test_normal_form_examples(R2):
    basis = Ideal(R2, [R2.parse("x0^2"), R2.parse("x0*x1")]).groebner()
    assert gb.normal_form(R2.parse("x0^2"), basis).is_zero()
    assert gb.normal_form(R2.parse("x1^3"), Ideal(R2, [R2.parse("x0")]).groebner()) == R2.parse("x1^3")
    f = R2.parse("x0^2 + 2*x0*x1 + x1^2")
    assert gb.normal_form(f, Ideal(R2, [R2.parse("x0*x1")]).groebner()) == R2.parse("x0^2 + x1^2")


def _row(ring, texts):
    gens = [ring.parse(t) for t in texts]
    src = FreeModule(ring, [g.degree() for g in gens])
    return GradedMatrix(src, FreeModule(ring, [0]), [gens])


def test_syzygy_examples(R2):
    for texts in (["x0", "x1"], ["x0^2", "x0*x1"]):
        m = _row(R2, texts)
        syz = gb.syzygy_vectors(m.columns(), m.source.twists, m.target.twists, R2)
        assert len(syz) == 1
        y, x = R2.parse("x1"), R2.parse("x0")
        v = syz[0]
        a = R2.zero() + sum((R2.monomial(mm, c) for (pos, mm), c in v.items() if pos == 0), R2.zero())
        b = R2.zero() + sum((R2.monomial(mm, c) for (pos, mm), c in v.items() if pos == 1), R2.zero())
        # proportional to (y, -x)
        assert a * x == -(b * y) and not a.is_zero()
    inj = _row(R2, ["x0"])
    assert gb.syzygy_vectors(inj.columns(), inj.source.twists, inj.target.twists, R2) == []


def test_ideal_op_examples(R2):
    m = parse_ideal(R2, "x0, x1")
    assert m.power(2) == parse_ideal(R2, "x0^2, x0*x1, x1^2")
    assert m.power(0).is_unit()
    assert parse_ideal(R2, "x0^2, x0*x1").saturation() == parse_ideal(R2, "x0")
    F = PolyRing(GF(2), 2)
    assert parse_ideal(F, "x0, x1").bracket_power(2) == parse_ideal(F, "x0^2, x1^2")
    with pytest.raises(UnsupportedCharacteristic):
        m.bracket_power(2)
    assert ideal_ops(m, parse_ideal(R2, "x0"), "quotient") == Ideal(R2, [R2.one()])
    assert ideal_ops(parse_ideal(R2, "x0"), parse_ideal(R2, "x1"), "product") == parse_ideal(R2, "x0*x1")


def test_hilbert_data_examples(R2):
    hd = hilbert_data(GradedModule.free(R2, [0]), (0, 5))
    assert hd.dimension == 2 and hd.values == {d: d + 1 for d in range(6)}
    hd = hilbert_data(parse_ideal(R2, "x0^2, x0*x1"), (0, 5))
    assert hd.dimension == 1 and hd.values == {0: 1, 1: 2, 2: 1, 3: 1, 4: 1, 5: 1}
    zero = hilbert_data(Ideal(R2, [R2.one()]))
    assert zero.dimension == NEG_INF and zero.indeg == POS_INF


def random_ideals(seed, count, nvars=3, fields=(0, 2, 3)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        p = rng.choice(fields)
        ring = PolyRing(GF(p) if p else QQ, nvars)
        out.append(random_binomial_ideal(rng, ring, 4, 3))
    return out


@pytest.mark.parametrize("I", random_ideals(11, 25), ids=str)
def test_buchberger_criterion_and_macaulay_agreement(I):
    basis = I.groebner()
    vecs = [{(0, m): c for m, c in g.terms.items()} for g in basis]
    assert gb.satisfies_buchberger_criterion(vecs, (0,), I.ring.field)
    for d in range(6):
        assert lead_span(basis, I.ring, d) == leading_monomials_in_degree(I.gens, I.ring, d)


@given(st.data())
def test_normal_form_idempotent_and_linear(data):
    R = PolyRing(GF(5), 3)
    I = random_ideals(data.draw(st.integers(0, 1000)), 1, fields=(5,))[0]
    basis = I.groebner()
    f = data.draw(polynomials(R))
    g = data.draw(polynomials(R))
    c = data.draw(st.integers(0, 4))
    nf = gb.normal_form(f, basis)
    assert gb.normal_form(nf, basis) == nf
    assert gb.normal_form(f * c + g, basis) == nf * c + gb.normal_form(g, basis)
    assert I.contains(f - nf)


@pytest.mark.parametrize("I", random_ideals(5, 20, fields=(0, 3)), ids=str)
def test_syzygies_compose_to_zero_and_span_kernel(I):
    ring = I.ring
    gens = I.gens
    m = GradedMatrix(FreeModule(ring, [g.degree() for g in gens]), FreeModule(ring, [0]), [gens])
    syz = gb.syzygy_vectors(m.columns(), m.source.twists, m.target.twists, ring)
    tw = [gb.vector_degree(v, m.source.twists) for v in syz]
    for v in syz:
        total = ring.zero()
        for (pos, mono), c in v.items():
            total = total + gens[pos] * ring.monomial(mono, c)
        assert total.is_zero()
    for d in range(7):
        span = DegreePiece(m.source.twists, syz, tw, d, ring).space.rank
        assert span == kernel_dim(m, d)


@pytest.mark.parametrize("I", random_ideals(8, 15, fields=(0,)), ids=str)
def test_saturation_fixpoint(I):
    sat = I.saturation()
    assert sat.saturation() == sat
    assert I.is_subset(sat)
    A, B = I.quotient_module(), sat.quotient_module()
    hi = 14
    assert A.hilbert_function(hi - 2, hi) == B.hilbert_function(hi - 2, hi)


@pytest.mark.parametrize("I", random_ideals(9, 15, fields=(2, 3)), ids=str)
def test_bracket_power_inside_ordinary_power(I):
    p = I.ring.characteristic
    br = I.bracket_power(p)
    assert br.is_subset(I.power(p))
    assert br.quotient_module().dimension() == I.quotient_module().dimension()
