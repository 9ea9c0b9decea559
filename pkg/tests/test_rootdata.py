import pytest
from hypothesis import given, strategies as st

from frobctl.errors import ConfigurationError, ResourceError
from frobctl.rootdata import (
    SINGULAR,
    build_root_datum,
    dominant_dot_normalize,
    dot_action,
    is_dominant,
    pairing,
    weyl_dimension,
    weyl_elements,
)

from strategies import LABELS, datum_of, weights


@pytest.mark.parametrize(
    "label, rank, n, h",
    [("A", 1, 1, 2), ("A", 2, 3, 3), ("B", 2, 4, 4), ("G", 2, 6, 6), ("F", 4, 24, 12), ("E", 6, 36, 12), ("C", 3, 9, 6)],
)
def test_root_counts_and_coxeter_number(label, rank, n, h):
    d = build_root_datum(label, rank)
    assert d.num_positive_roots == n
    assert d.coxeter_number == h
    assert d.coxeter_number == 1 + pairing(d, d.rho, d.highest_coroot)


def test_a1_and_a2_tables():
    a1 = build_root_datum("A", 1)
    assert a1.rho == (1,)
    a2 = build_root_datum("A", 2)
    assert [list(r) for r in a2.cartan] == [[2, -1], [-1, 2]]


def test_g2_orientation_short_root_first():
    g2 = build_root_datum("G2")
    assert [list(r) for r in g2.cartan] == [[2, -3], [-1, 2]]
    assert g2.half_lengths[0] < g2.half_lengths[1]


@pytest.mark.parametrize("bad", [("A", 0), ("B", 1), ("G", 3), ("E", 9), ("Q", 2), ("D", 3)])
def test_invalid_types_rejected(bad):
    with pytest.raises(ConfigurationError):
        build_root_datum(*bad)


def test_label_parsing():
    assert build_root_datum("b2") == build_root_datum("B", 2)


@pytest.mark.parametrize("label", LABELS + ("C3", "D4"))
def test_cartan_matches_simple_root_pairings(label):
    d = datum_of(label)
    for i in range(d.rank):
        assert d.cartan[i][i] == 2
        for j in range(d.rank):
            assert pairing(d, d.simple_roots[j], d.simple_coroots[i]) == d.cartan[i][j]


def test_pairings():
    a1, g2, a2 = build_root_datum("A1"), build_root_datum("G2"), build_root_datum("A2")
    assert pairing(a1, (3,), a1.simple_coroots[0]) == 3
    assert pairing(g2, g2.rho, g2.highest_coroot) == 5
    assert pairing(a2, (1, 0), a2.simple_coroots[1]) == 0
    with pytest.raises(ConfigurationError):
        pairing(a2, (1,), a2.simple_coroots[0])


@pytest.mark.parametrize("label, order, longest", [("A1", 2, 1), ("A2", 6, 3), ("B2", 8, 4), ("G2", 12, 6)])
def test_weyl_group(label, order, longest):
    els = list(weyl_elements(datum_of(label)))
    assert len(els) == order
    assert max(w.length for w in els) == longest
    assert sum(1 for w in els if w.length == 0) == 1


def test_weyl_group_limit():
    with pytest.raises(ResourceError):
        list(weyl_elements(build_root_datum("E", 6), limit=1000))


def test_dot_action_examples():
    a1 = build_root_datum("A1")
    e, s = sorted(weyl_elements(a1), key=lambda w: w.length)
    assert dot_action(a1, s, (1,)) == (-3,)
    assert dot_action(a1, e, (5,)) == (5,)
    assert dot_action(a1, s, (-1,)) == (-1,)


def test_dot_normalize_examples():
    a1 = build_root_datum("A1")
    assert dominant_dot_normalize(a1, (-1,)) is SINGULAR
    assert dominant_dot_normalize(a1, (-3,)) == ((1,), -1)
    assert dominant_dot_normalize(a1, (4,)) == ((4,), 1)


@pytest.mark.parametrize("label", LABELS)
@given(data=st.data())
def test_dot_normalize_agrees_with_group(label, data):
    d = datum_of(label)
    lam = data.draw(weights(d, 6))
    res = dominant_dot_normalize(d, lam)
    hits = [(dot_action(d, w, lam), (-1) ** w.length) for w in weyl_elements(d)]
    dominant_hits = [h for h in hits if is_dominant(h[0])]
    if res is SINGULAR:
        assert not dominant_hits or len({h[0] for h in hits}) < len(hits)
    else:
        assert res in dominant_hits


@pytest.mark.parametrize("label", LABELS)
@given(data=st.data())
def test_form_is_w_invariant(label, data):
    d = datum_of(label)
    x, y = data.draw(weights(d, 5)), data.draw(weights(d, 5))
    for w in weyl_elements(d):
        assert d.form(w.act(x), w.act(y)) == d.form(x, y)


def test_weyl_dimension():
    assert weyl_dimension(build_root_datum("G2"), (1, 1)) == 64
    assert weyl_dimension(build_root_datum("A2"), (1, 1)) == 8
    assert weyl_dimension(build_root_datum("E6"), (1, 0, 0, 0, 0, 0)) == 27
