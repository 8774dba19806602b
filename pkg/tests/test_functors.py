import pytest

from cmreg.corpus import parse_ideal, random_ideal_corpus
from cmreg.functors import (NotEquidimensional, frobenius_power, frobenius_tor, kahler_module,
                            power_kernel, sing_locus_dim, singular_locus)
from cmreg.groebner import vector_degree
from cmreg.ideals import Ideal, UnsupportedCharacteristic
from cmreg.invariants import regularity
from cmreg.linalg import RowSpace
from cmreg.modules import GradedModule
from cmreg.oracles import DegreePiece, _poly_times_vec
from cmreg.ring import GF, NEG_INF, QQ, PolyRing, QuotientRing, monomials_of_degree

W = (0, 8)


def hf(obj, lo=W[0], hi=W[1]):
    return obj.hilbert_function(lo, hi)


# Frobenius --------------------------------------------------------------------------

def test_frobenius_of_residue_field():
    R = PolyRing(GF(2), 2)
    F = frobenius_power(parse_ideal(R, "x0, x1").quotient_module(), 1)
    assert hf(F) == hf(parse_ideal(R, "x0^2, x1^2").quotient_module())


def test_frobenius_scales_free_twists():
    R = PolyRing(GF(3), 2)
    for e in range(3):
        F = frobenius_power(GradedModule.free(R, [0, 1, 4]), e)
        assert list(F.generator_twists) == [0, 3 ** e, 4 * 3 ** e]
        assert F.is_zero() is False and F.presentation.source.rank == 0


def test_frobenius_regularity_of_complete_intersection():
    R = PolyRing(GF(3), 2)
    F = frobenius_power(parse_ideal(R, "x0, x1").quotient_module(), 1)
    assert regularity(F, "both") == 4


def test_frobenius_needs_prime_characteristic(R2):
    with pytest.raises(UnsupportedCharacteristic):
        frobenius_power(parse_ideal(R2, "x0").quotient_module(), 1)


@pytest.mark.parametrize("name,I", [c for c in random_ideal_corpus(5, 60, fields=(2, 3, 5))],
                         ids=lambda x: x if isinstance(x, str) else "")
def test_frobenius_power_matches_bracket_power(name, I):
    p = I.ring.characteristic
    for e in (1, 2):
        F = frobenius_power(I.quotient_module(), e)
        via_matrix = Ideal(I.ring, F.presentation.rows[0])
        assert via_matrix == I.bracket_power(p ** e)


def test_frobenius_tor_vanishes_over_regular_ring():
    R = PolyRing(GF(2), 3)
    M = parse_ideal(R, "x0^2, x0*x1, x2^3").quotient_module()
    for e in range(3):
        for i in range(1, 4):
            assert frobenius_tor(M, e, i).is_zero()


def test_frobenius_tor_over_double_line():
    R = PolyRing(GF(2), 2)
    S = QuotientRing(R, [R.parse("x0^2")])
    M = parse_ideal(S, "x0").quotient_module()
    T1 = frobenius_tor(M, 1, 1, 4)
    assert not T1.is_zero()
    # oracle: the resolution ... -> S(-2) -> S(-1) -> S has every map x0, whose Frobenius
    # image x0^2 vanishes in S, so H_1 = F_1 with twist 2 = S(-2)
    shifted = {d: (0 if d < 2 else (1 if d == 2 else 2)) for d in range(9)}
    assert hf(T1) == shifted
    assert hf(T1) == GradedModule.free(S, [2]).hilbert_function(0, 8)
    # support is inside the singular locus and inside Supp M
    assert T1.dimension() <= min(sing_locus_dim(S), M.dimension())


def test_frobenius_tor_with_e_zero_is_ordinary_tor():
    R = PolyRing(GF(2), 2)
    S = QuotientRing(R, [R.parse("x0^2")])
    M = parse_ideal(S, "x0").quotient_module()
    for i in range(1, 3):
        assert frobenius_tor(M, 0, i, 5).is_zero()


def test_frobenius_tor_support_on_quadrics():
    from cmreg.corpus import quadric_corpus
    for name, S, M in quadric_corpus(3):
        sd = singular_locus(S).dim
        for i in range(1, 3):
            T = frobenius_tor(M, 1, i, 4)
            if not T.is_zero():
                assert T.dimension() <= min(sd, M.dimension()), name


# powers ---------------------------------------------------------------------------

def kernel_hf_oracle(I, ell, d):
    """dim of ker((I (x) I^{ell-1})_d -> R_d), by Macaulay matrices."""
    ring = I.ring
    fa = I.minimal_generators()
    fb = I.power(ell - 1).minimal_generators()
    ma = GradedModule.from_ideal(ring, fa)
    mb = GradedModule.from_ideal(ring, fb)
    pres = ma.tensor(mb).presentation
    tw = pres.target.twists
    cols = pres.columns()
    piece = DegreePiece(tw, cols, [vector_degree(c, tw) for c in cols], d, ring)
    prods = [f * g for f in fa for g in fb]
    target = DegreePiece((0,), [], [], d, ring)
    space = RowSpace(ring.field)
    for b in range(piece.dim):
        ((pos, m), _), = piece.class_vector(b).items()
        img = _poly_times_vec(prods[pos], {(0, m): 1})
        space.add(target.coords(img))
    return piece.dim - space.rank


def test_power_kernel_of_maximal_ideal(R2):
    I = parse_ideal(R2, "x0, x1")
    T = power_kernel(I, 2).T
    # x0 (x) x1 - x1 (x) x0 spans degree 2: four products onto three monomials
    assert hf(T, 2, 2) == {2: 1}
    assert hf(T) == {d: kernel_hf_oracle(I, 2, d) for d in range(9)}


def test_power_kernel_of_principal_ideal(R2):
    for ell in (2, 3, 4):
        assert power_kernel(parse_ideal(R2, "x0^2 + x1^2"), ell).T.is_zero()


@pytest.mark.parametrize("text,ell", [("x0^2, x0*x1", 2), ("x0^2, x0*x1", 3), ("x0^2, x1^2", 2),
                                      ("x0^2, x0*x1, x1^3", 2)])
def test_power_kernel_matches_oracle(R2, text, ell):
    I = parse_ideal(R2, text)
    assert hf(power_kernel(I, ell).T) == {d: kernel_hf_oracle(I, ell, d) for d in range(9)}


def test_power_kernel_rejects_small_ell(R2):
    with pytest.raises(ValueError):
        power_kernel(parse_ideal(R2, "x0"), 1)


# Kaehler differentials -------------------------------------------------------------

def test_kahler_of_double_point():
    R = PolyRing(QQ, 1)
    B = QuotientRing(R, [R.parse("x0^2")])
    km = kahler_module(B)
    # B(-1)/(2 x0) keeps only dx0: x0 dx0 is a multiple of the relation
    assert hf(km.omega) == {d: int(d == 1) for d in range(9)}


def test_kahler_of_double_point_in_char_two():
    R = PolyRing(GF(2), 1)
    B = QuotientRing(R, [R.parse("x0^2")])
    km = kahler_module(B)
    assert hf(km.omega) == GradedModule.free(B, [1]).hilbert_function(0, 8)


def test_kahler_of_polynomial_ring(R2):
    B = QuotientRing(R2, [])
    km = kahler_module(B)
    assert hf(km.omega) == GradedModule.free(R2, [1, 1]).hilbert_function(0, 8)


KAHLER_CASES = [(3, "x0*x2 - x1^2"), (3, "x0^2 + x1^2 + x2^2"), (3, "x0*x1"), (3, "x0^2, x0*x1"),
                (4, "x0*x3 - x1*x2"), (4, "x0*x2 - x1^2, x1*x3 - x2^2, x0*x3 - x1*x2"), (2, "x0^3")]


@pytest.mark.parametrize("p", [0, 2, 3])
@pytest.mark.parametrize("n,text", KAHLER_CASES)
def test_conormal_sequence_additivity(n, text, p):
    R = PolyRing(GF(p) if p else QQ, n)
    B = QuotientRing(R, [R.parse(t) for t in text.split(",")])
    km = kahler_module(B)
    conormal, K, omega = hf(km.conormal), hf(km.K), hf(km.omega)
    free = GradedModule.free(B, [1] * n).hilbert_function(*W)
    for d in range(W[0], W[1] + 1):
        assert conormal[d] - K[d] == free[d] - omega[d]


# singular locus ---------------------------------------------------------------------

def test_singular_locus_examples(R3):
    assert sing_locus_dim(QuotientRing(R3, [R3.parse("x0^2 + x1^2 + x2^2")])) == 0
    assert sing_locus_dim(QuotientRing(R3, [])) == NEG_INF
    assert sing_locus_dim(QuotientRing(R3, [R3.parse("x0^2")])) == 2


def test_singular_locus_needs_equidimensionality(R3):
    S = QuotientRing(R3, [R3.parse("x0^2"), R3.parse("x0*x1")])
    with pytest.raises(NotEquidimensional):
        sing_locus_dim(S)
    loc = singular_locus(S, assert_equidimensional=True)
    assert loc.equidimensional == "asserted"


def test_singular_locus_inseparability_caveat():
    R = PolyRing(GF(2), 3)
    loc = singular_locus(QuotientRing(R, [R.parse("x0^2 + x1^2 + x2^2")]))
    assert loc.inseparability_caveat
    # (x0 + x1 + x2)^2: the whole hypersurface is singular
    assert loc.dim == 2
    R5 = PolyRing(GF(5), 3)
    assert not singular_locus(QuotientRing(R5, [R5.parse("x0^2 + x1^2 + x2^2")])).inseparability_caveat
