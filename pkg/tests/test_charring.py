import random

import pytest
from hypothesis import given, strategies as st

from frobctl.charring import (
    Character,
    char_add,
    char_dual,
    char_scale,
    char_tensor,
    decompose_into_hat_nabla,
    decompose_into_weyl,
    dominant_multiplicities,
    euler_character,
    frobenius_contract,
    frobenius_twist,
    hat_nabla_character,
    reconstruct,
    steinberg_character,
    weyl_character,
    zero_character,
)
from frobctl.errors import DomainError, PreconditionError
from frobctl.rootdata import build_root_datum, weyl_dimension

from strategies import LABELS, characters, datum_of, dominant_weights, primes

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")
G2 = build_root_datum("G2")


def ch(datum, mapping):
    return Character(datum, {(k,) if isinstance(k, int) else k: v for k, v in mapping.items()})


def test_weyl_character_examples():
    assert weyl_character(A1, (3,)) == ch(A1, {3: 1, 1: 1, -1: 1, -3: 1})
    for label in LABELS:
        d = datum_of(label)
        assert weyl_character(d, (0,) * d.rank) == Character(d, {(0,) * d.rank: 1})
    c = weyl_character(A2, (1, 1))
    assert c.dimension == 8 and c[(0, 0)] == 2


def test_weyl_character_rejects_non_dominant():
    with pytest.raises(PreconditionError):
        weyl_character(A1, (-1,))


@pytest.mark.parametrize("label", LABELS)
@given(data=st.data())
def test_weyl_character_invariant_with_weyl_dimension(label, data):
    d = datum_of(label)
    lam = data.draw(dominant_weights(d, 5))
    c = weyl_character(d, lam)
    assert c.is_w_invariant()
    assert c.dimension == weyl_dimension(d, lam)
    assert c[lam] == 1


def test_euler_examples():
    assert euler_character(A1, (-1,)) == zero_character(A1)
    assert euler_character(A1, (4,)) == weyl_character(A1, (4,))
    assert euler_character(A1, (-3,)) == -weyl_character(A1, (1,))


def test_ring_examples():
    v = ch(A1, {1: 1, -1: 1})
    assert char_tensor(v, v) == ch(A1, {2: 1, 0: 2, -2: 1})
    assert char_add(v, char_scale(v, -1)) == zero_character(A1)
    res = decompose_into_weyl(weyl_character(A1, (1,)) * weyl_character(A1, (1,)))
    assert res.multiplicities == {(2,): 1, (0,): 1} and res.exact


def test_datum_mismatch():
    with pytest.raises(DomainError):
        char_add(weyl_character(A1, (1,)), weyl_character(A2, (1, 0)))


def test_contract_and_twist_examples():
    assert frobenius_contract(weyl_character(A1, (2,)), 2) == ch(A1, {1: 1, 0: 1, -1: 1})
    assert frobenius_contract(weyl_character(A1, (1,)), 3) == zero_character(A1)
    assert frobenius_twist(ch(A1, {1: 1, -1: 1}), 2) == ch(A1, {2: 1, -2: 1})
    with pytest.raises(PreconditionError):
        frobenius_contract(weyl_character(A1, (1,)), 4)


def test_dual_examples():
    for n in range(6):
        c = weyl_character(A1, (n,))
        assert char_dual(c) == c


@given(characters(), primes, st.integers(1, 3))
def test_twist_then_contract_is_identity(c, p, r):
    assert frobenius_contract(frobenius_twist(c, p, r), p, r) == c
    assert frobenius_twist(c, p, r) == Character(c.datum, {tuple(p**r * x for x in w): m for w, m in c.items()})


@given(characters(), primes)
def test_contract_commutes_with_dual(c, p):
    assert char_dual(char_dual(c)) == c
    assert frobenius_contract(char_dual(c), p) == char_dual(frobenius_contract(c, p))


@given(st.data(), primes)
def test_contract_projection_formula(data, p):
    label = data.draw(st.sampled_from(LABELS))
    a = data.draw(characters(label, bound=6, max_size=5))
    b = data.draw(characters(label, bound=3, max_size=4))
    assert frobenius_contract(a * frobenius_twist(b, p), p) == frobenius_contract(a, p) * b


@given(characters(bound=30), primes, st.integers(1, 3))
def test_iterated_contraction_extracts_p_power(c, p, r):
    q = p**r
    expected = Character(c.datum, {tuple(x // q for x in w): m for w, m in c.items() if all(x % q == 0 for x in w)})
    assert frobenius_contract(c, p, times=r) == expected


@given(characters(), characters())
def test_tensor_is_commutative(a, b):
    if a.datum == b.datum:
        assert a * b == b * a
        assert (a * b).dimension == a.dimension * b.dimension


def test_json_round_trip():
    c = weyl_character(G2, (1, 0))
    obj = c.to_json()
    assert obj["type"] == "G2"
    assert obj["weights"] == sorted(obj["weights"])
    assert Character.from_json(obj) == c
    with pytest.raises(DomainError):
        Character.from_json(obj, A2)


def test_decompose_examples():
    res = decompose_into_weyl(frobenius_contract(weyl_character(A1, (6,)), 3))
    assert res.multiplicities == {(2,): 1} and res.exact
    lam = (2, 1)
    assert decompose_into_weyl(weyl_character(G2, lam)).multiplicities == {lam: 1}
    res = decompose_into_weyl(frobenius_contract(steinberg_character(G2, 2), 2))
    assert res.multiplicities == {(1, 0): 2, (0, 0): 2}


def test_decompose_rejects_non_invariant():
    with pytest.raises(DomainError):
        decompose_into_weyl(ch(A1, {1: 1}))
    with pytest.raises(DomainError):
        decompose_into_weyl(ch(A2, {(1, 0): 1, (-1, 1): 1, (0, -1): 2}))


@pytest.mark.parametrize("label", LABELS)
def test_decompose_tensor_reconstructs(label):
    d = datum_of(label)
    rng = random.Random(label)
    for _ in range(5):
        a = tuple(rng.randint(0, 2) for _ in range(d.rank))
        b = tuple(rng.randint(0, 2) for _ in range(d.rank))
        prod = weyl_character(d, a) * weyl_character(d, b)
        res = decompose_into_weyl(prod)
        assert res.exact and res.nonnegative
        assert reconstruct(res, d) == prod


def test_steinberg_examples():
    assert steinberg_character(A1, 3) == weyl_character(A1, (2,))
    assert steinberg_character(G2, 2).dimension == 64
    c = steinberg_character(A1, 2, r=2)
    assert c == weyl_character(A1, (3,)) and c.dimension == 4


def test_hat_nabla_examples():
    assert hat_nabla_character(A1, 2, 1, (0,)) == ch(A1, {0: 1, -2: 1})
    assert hat_nabla_character(A1, 2, 1, (1,)) == steinberg_character(A1, 2)


@pytest.mark.parametrize("label", LABELS)
@given(data=st.data())
def test_hat_nabla_dimension(label, data):
    d = datum_of(label)
    p = data.draw(primes)
    r = data.draw(st.integers(1, 2))
    lam = data.draw(st.tuples(*[st.integers(-6, 6)] * d.rank))
    c = hat_nabla_character(d, p, r, lam)
    assert c.dimension == p ** (r * d.num_positive_roots)
    assert decompose_into_hat_nabla(c, p, r).multiplicities == {lam: 1}


def test_hat_nabla_decomposition_examples():
    res = decompose_into_hat_nabla(ch(A1, {1: 1, -1: 1}), 2, 1)
    assert res.multiplicities == {(1,): 1} and res.exact
    st2 = steinberg_character(A2, 2, 2)
    res = decompose_into_hat_nabla(st2, 2, 2)
    assert res.multiplicities[(3, 3)] == 1
    assert res.exact and reconstruct(res, A2, 2, 2) == st2


def test_freudenthal_cache_is_consistent():
    first = dominant_multiplicities(G2, (2, 2))
    assert dominant_multiplicities(G2, (2, 2)) == first
