import pytest

from hopfquiver.bicharacter import Bicharacter, cyclic_bicharacter, trivial_bicharacter
from hopfquiver.errors import HopfQuiverError, InfiniteDimensional, NotConnected, UnknownLetter
from hopfquiver.groups import parse_group
from hopfquiver.linear import LinComb
from hopfquiver.pbw import (NormalMonomial, PBWAlgebra, Presentation, c2_presentation, check_confluence,
                            classify, closure_dimension, dimension, e_presentation, format_monomial,
                            gr_embed_check, h_presentation, lift, normalization_violations, normalize,
                            parse_word, sweedler_presentation, validity_violations, verify_hopf, word_of)
from hopfquiver.quiver import parse_ram
from hopfquiver.scalar import ParamScalar, root_of_unity


def nf(P, text):
    return normalize(P, parse_word(P, text))


def test_normalize_examples():
    P = c2_presentation(4)
    g = (1,)
    assert nf(P, "x[1,1] g1") == LinComb.basis(NormalMonomial(g, (1,)), P.bichar(g, g))
    assert not nf(P, "x[1,1] x[1,1]")
    assert nf(P, "g1^4") == LinComb.basis(P.unit(), 1)
    assert nf(P, "g1^-1") == LinComb.basis(NormalMonomial((3,), (0,)), 1)
    E = e_presentation(2, 2)
    assert nf(E, "x[1,2] x[1,1]") == LinComb.basis(NormalMonomial((0,), (1, 1)), -1)
    with pytest.raises(UnknownLetter):
        parse_word(P, "y[1,1]")
    with pytest.raises(UnknownLetter):
        parse_word(P, "x[2,1]")


@pytest.mark.parametrize("P", [c2_presentation(4), e_presentation(2, 3), h_presentation(2, 2, 1)],
                         ids=["C2(4)", "E(2,3)", "H(2,2,-1)"])
def test_normal_forms_are_fixed(P):
    for m in P.basis():
        assert normalize(P, word_of(P, m)) == LinComb.basis(m, 1)
        assert normalize(P, word_of(P, m, expand=True)) == LinComb.basis(m, 1)
        assert nf(P, format_monomial(P, m)) == LinComb.basis(m, 1)


def test_dimensions():
    assert dimension(c2_presentation(6)) == closure_dimension(c2_presentation(6)) == 12
    assert dimension(e_presentation(4, 3)) == 32
    assert dimension(h_presentation(4, 4, 1)) == 64 == closure_dimension(h_presentation(4, 4, 1))


def test_symbolic_lifting_with_mu():
    mu = ParamScalar.var("mu")
    P = lift(c2_presentation(4), mu={(1, 1): mu})
    assert P.mu == {(1, 1): mu} and not P.is_graded()
    got = nf(P, "x[1,1] x[1,1]")
    assert got == LinComb({P.unit(): mu, NormalMonomial((2,), (0,)): -mu})
    assert check_confluence(P).ok
    rep = verify_hopf(P)
    assert rep.ok, rep.failure


def test_lift_canonicalizes_degenerate_constants():
    mu = ParamScalar.var("mu")
    assert sweedler_presentation(mu).mu == {}
    assert lift(e_presentation(2, 2), lam={((1, 1), (1, 2)): mu}).lam == {}
    lam = lift(e_presentation(4, 2), lam={((1, 1), (1, 2)): mu})
    assert lam.lam == {((1, 1), (1, 2)): mu}
    assert check_confluence(lam).ok and verify_hopf(lam).ok


def test_normalization_gate():
    mu = ParamScalar.var("mu")
    base = c2_presentation(2)
    raw = Presentation(base.group, base.generators, base.bichar, {(1, 1): mu})
    assert normalization_violations(raw)
    rep = check_confluence(raw)
    assert not rep.ok and rep.failure["identity"] == "normalization"
    E = e_presentation(2, 2)
    raw = Presentation(E.group, E.generators, E.bichar, {}, {((1, 1), (1, 2)): 1})
    assert normalization_violations(raw)[0]["reason"] == "g_ig_j = e"


def test_validity_gate():
    G = parse_group("Z4")
    bad = Presentation(G, (((1,), 1),), cyclic_bicharacter(G, 1))
    assert validity_violations(bad)
    assert not verify_hopf(bad).ok
    assert validity_violations(c2_presentation(4)) == []


def test_non_skew_fails_hopf():
    G = parse_group("Z2xZ2")
    B = Bicharacter(G, 2, ((1, 1), (0, 1)))
    P = Presentation(G, (((1, 0), 1), ((0, 1), 1)), B)
    rep = verify_hopf(P)
    assert not rep.ok
    assert rep.failure["identity"] == "coproduct on relation"


@pytest.mark.parametrize("P", [c2_presentation(2), c2_presentation(6), e_presentation(2, 2),
                               h_presentation(2, 2, 1), h_presentation(4, 4, 1)],
                         ids=["C2(2)", "C2(6)", "E(2,2)", "H(2,2,-1)", "H(4,4,i)"])
def test_hopf_and_confluence(P):
    assert check_confluence(P).ok
    rep = verify_hopf(P)
    assert rep.ok, rep.failure


@pytest.mark.parametrize("P", [c2_presentation(2), e_presentation(4, 2), h_presentation(4, 4, 1)],
                         ids=["C2(2)", "E(4,2)", "H(4,4,i)"])
def test_table_matches_shuffle_images(P):
    rep = gr_embed_check(P, 2)
    assert rep.ok, rep.failure


def test_pbw_antipode_and_coproduct():
    P = c2_presentation(2)
    A = PBWAlgebra(P)
    for m in A.basis_elements():
        left = LinComb()
        for (a, b), c in A.basis_coproduct(m).items():
            left = left + A.mul(A.antipode_basis(a), A.vec(b)).scale(c)
        want = LinComb.basis(P.unit(), A.basis_counit(m)) if A.basis_counit(m) else LinComb()
        assert left == want


def test_classify():
    G = parse_group("Z4")
    P = classify(G, parse_ram(G, "g"), cyclic_bicharacter(G, -1))
    assert dimension(P) == 8
    with pytest.raises(InfiniteDimensional) as exc:
        classify(G, parse_ram(G, "g"), cyclic_bicharacter(G, 1))
    assert exc.value.generator is not None
    with pytest.raises(NotConnected):
        classify(G, parse_ram(G, "g^2"), cyclic_bicharacter(G, -1))
    K = parse_group("Z2xZ2")
    with pytest.raises(HopfQuiverError):
        classify(K, parse_ram(K, "g+h"), Bicharacter(K, 2, ((1, 1), (0, 1))))
    T = parse_group("Z1")
    assert dimension(classify(T, parse_ram(T, ""), trivial_bicharacter(T))) == 1
    H = classify(K, parse_ram(K, "g+h:2"), Bicharacter(K, 2, ((1, 0), (0, 1))))
    assert H.num_x() == 3 and dimension(H) == 32


def test_presentation_json_roundtrip():
    mu = root_of_unity(4, 1)
    P = lift(c2_presentation(4), mu={(1, 1): mu})
    Q = Presentation.from_json(P.to_json())
    assert Q == P and Q.mu == P.mu
