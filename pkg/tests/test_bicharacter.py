import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from oracles import count_skew_bicharacters_bruteforce

from hopfquiver.bicharacter import (Bicharacter, bichar_eval, cyclic_bicharacter, enumerate_bicharacters,
                                    enumerate_skew_bicharacters, is_skew_symmetric, trivial_bicharacter)
from hopfquiver.errors import InfiniteGroup
from hopfquiver.groups import parse_group
from hopfquiver.scalar import root_of_unity


def test_examples():
    for n in (2, 4, 6):
        G = parse_group(f"Z{n}")
        B = cyclic_bicharacter(G, -1)
        for i in range(n):
            for j in range(n):
                assert B((i,), (j,)) == (-1) ** (i * j)
    G = parse_group("Z2xZ2")
    B = Bicharacter(G, 2, ((1, 0), (0, 1)))
    assert bichar_eval(B, (1, 1), (1, 1)) == 1
    assert B((0, 0), (0, 1)) == 1
    assert is_skew_symmetric(cyclic_bicharacter(parse_group("Z4"), -1))
    assert not is_skew_symmetric(Bicharacter(parse_group("Z4"), 4, ((1,),)))
    assert is_skew_symmetric(trivial_bicharacter(parse_group("Z2xZ4")))


def test_well_definedness_enforced():
    with pytest.raises(ValueError):
        Bicharacter(parse_group("Z3"), 2, ((1,),))


def test_counts():
    for name, want in (("Z3", 1), ("Z5", 1), ("Z2", 2), ("Z4", 2), ("Z6", 2), ("Z2xZ2", 8)):
        assert len(enumerate_skew_bicharacters(parse_group(name))) == want
    with pytest.raises(InfiniteGroup):
        enumerate_skew_bicharacters(parse_group("Z"))
    assert len(enumerate_skew_bicharacters(parse_group("Z"), 2)) == 2


@pytest.mark.parametrize("name", ["Z2", "Z3", "Z4", "Z6", "Z2xZ2", "Z2xZ4", "Z3xZ3"])
def test_counts_against_oracle(name):
    G = parse_group(name)
    from hopfquiver.bicharacter import default_conductor

    assert len(enumerate_skew_bicharacters(G)) == count_skew_bicharacters_bruteforce(G, default_conductor(G))


@pytest.mark.parametrize("name", ["Z2", "Z4", "Z6", "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2"])
def test_enumerated_are_skew_bicharacters(name):
    G = parse_group(name)
    els = G.elements()
    Bs = enumerate_skew_bicharacters(G)
    assert len({B.exp_matrix for B in Bs}) == len(Bs)
    for B in Bs:
        for a in els:
            for b in els:
                assert B(a, b) * B(b, a) == 1
                for c in els:
                    assert B(G.mul(a, b), c) == B(a, c) * B(b, c)
                    assert B(a, G.mul(b, c)) == B(a, b) * B(a, c)


def test_all_bicharacters_contain_skew():
    G = parse_group("Z2xZ2")
    allb = enumerate_bicharacters(G)
    assert len(allb) == 16
    assert {B.exp_matrix for B in enumerate_skew_bicharacters(G)} <= {B.exp_matrix for B in allb}


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 3), st.integers(0, 3), st.integers(0, 3))
def test_json_roundtrip(a, b, c):
    G = parse_group("Z4xZ4")
    B = Bicharacter(G, 4, ((a, b), (c, a)))
    assert Bicharacter.from_json(B.to_json()) == B
    B8 = B.with_conductor(8)
    assert B8((1, 1), (1, 0)) == root_of_unity(8, 2 * (a + c))
    assert B((1, 0), (0, 1)) == root_of_unity(4, b)
