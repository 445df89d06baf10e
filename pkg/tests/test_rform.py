import pytest

from hopfquiver.bicharacter import cyclic_bicharacter, trivial_bicharacter
from hopfquiver.errors import ContextMismatch, NotInvertible
from hopfquiver.groups import parse_group
from hopfquiver.path_hopf import PathHopfAlgebra
from hopfquiver.pbw import NormalMonomial, PBWAlgebra, c2_presentation, e_presentation, h_presentation
from hopfquiver.quiver import Path, build_quiver, parse_ram
from hopfquiver.rform import (RForm, check_coquasi, check_cotriangular, convolution_inverse,
                              inverse_bicharacter, restrict_degree_zero, rform_eval, solve_rforms,
                              trivial_extension)
from hopfquiver.scalar import ParamScalar


def sweedler():
    P = c2_presentation(2)
    return P, PBWAlgebra(P)


def test_trivial_bichar_fails_commutation():
    P, A = sweedler()
    R = trivial_extension(trivial_bicharacter(P.group).with_conductor(2))
    rep = check_coquasi(A, R)
    assert not rep.ok
    assert rep.failure["identity"].startswith("ba = ")


def test_bichar_extension_is_coquasi():
    for P in (c2_presentation(2), c2_presentation(4), e_presentation(2, 2)):
        A = PBWAlgebra(P)
        rep = check_coquasi(A, trivial_extension(P.bichar))
        assert rep.ok, rep.failure
        assert check_cotriangular(A, trivial_extension(P.bichar)).ok


def test_sweedler_family_and_inverse():
    P, A = sweedler()
    fam = solve_rforms(P)
    assert fam.free == ["nu"]
    x = NormalMonomial(P.group.unit(), (1,))
    nu = ParamScalar.var("nu")
    assert fam.value(x, x) == nu
    for val in (0, 1, -3):
        R = fam.rform({"nu": val})
        assert check_coquasi(A, R).ok
        Rb = convolution_inverse(R, A)
        assert Rb(x, x) == R(x, x)
        assert Rb.degree0 == inverse_bicharacter(R.degree0)
    Rsym = fam.rform()
    assert Rsym.parameters() == {"nu"}
    assert convolution_inverse(Rsym, A)(x, x) == nu


def test_convolution_inverse_identity():
    P, A = sweedler()
    R = solve_rforms(P).rform({"nu": 2})
    Rb = convolution_inverse(R, A)
    for a in A.basis_elements():
        for b in A.basis_elements():
            total = 0
            for (a1, a2), ca in A.basis_coproduct(a).items():
                for (b1, b2), cb in A.basis_coproduct(b).items():
                    total = total + ca * cb * R(a1, b1) * Rb(a2, b2)
            assert total == A.basis_counit(a) * A.basis_counit(b)


def test_concentrated_inverse_without_context():
    B = cyclic_bicharacter(parse_group("Z4"), -1)
    Rb = convolution_inverse(trivial_extension(B))
    assert Rb.concentrated and Rb.degree0 == inverse_bicharacter(B)
    P, A = sweedler()
    with pytest.raises(NotInvertible):
        convolution_inverse(solve_rforms(P).rform({"nu": 1}))


@pytest.mark.parametrize("P", [c2_presentation(2), c2_presentation(4), e_presentation(2, 2),
                               e_presentation(4, 2), h_presentation(2, 2, 1)],
                         ids=["C2(2)", "C2(4)", "E(2,2)", "E(4,2)", "H(2,2,-1)"])
def test_restriction_to_degree_zero(P):
    A = PBWAlgebra(P)
    fam = solve_rforms(P)
    R0 = restrict_degree_zero(fam.rform())
    assert R0.concentrated and R0.degree0 == P.bichar
    assert check_coquasi(A, R0).ok


@pytest.mark.parametrize("n,m", [(4, 1), (4, 2), (6, 2), (4, 3)])
def test_no_free_parameters_above_order_two(n, m):
    fam = solve_rforms(e_presentation(n, m))
    assert fam.free == [] and not fam.table


def test_e22_free_matrix():
    P = e_presentation(2, 2)
    fam = solve_rforms(P)
    assert fam.free == ["r_1_1", "r_1_2", "r_2_1", "r_2_2"]
    A = PBWAlgebra(P)
    R = fam.rform({"r_1_1": 1, "r_1_2": 2, "r_2_1": -1, "r_2_2": 0})
    assert check_coquasi(A, R).ok


def test_context_mismatch():
    P, A = sweedler()
    G = parse_group("Z2")
    Q = build_quiver(G, parse_ram(G, "g"))
    H = PathHopfAlgebra(Q, cyclic_bicharacter(G, -1))
    R = solve_rforms(P).rform({"nu": 1})
    with pytest.raises(ContextMismatch):
        check_coquasi(H, R)
    with pytest.raises(ContextMismatch):
        R.value(Path((0,)), Path((1,)))
    other = trivial_extension(cyclic_bicharacter(parse_group("Z4"), -1))
    with pytest.raises(ContextMismatch):
        check_coquasi(A, other)


def test_path_algebra_context():
    G = parse_group("Z2")
    Q = build_quiver(G, parse_ram(G, "g"))
    H = PathHopfAlgebra(Q, cyclic_bicharacter(G, -1))
    R = trivial_extension(H.bichar)
    assert check_coquasi(H, R, max_len=3).ok
    assert check_cotriangular(H, R, max_len=3).ok


def test_eval_and_json():
    P, A = sweedler()
    R = solve_rforms(P).rform({"nu": 5})
    x = NormalMonomial(P.group.unit(), (1,))
    one = P.unit()
    assert rform_eval(R, {x: 2, one: 1}, {x: 1}) == 10
    data = R.to_json()
    assert data["concentrated"] is False and data["higher"]
    assert solve_rforms(P).to_json()["free"] == ["nu"]
