from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from frobctl.charring import weyl_character
from frobctl.errors import PreconditionError, ResourceError
from frobctl.lspaths import (
    LSPath,
    count_dominant_paths,
    generate_path_model,
    is_dominant_shifted,
    path_model_dump,
    path_model_statistics,
    root_operator_e,
    root_operator_f,
    straight_path,
)
from frobctl.rootdata import build_root_datum, weyl_dimension

from strategies import LABELS, datum_of, dominant_weights

A1 = build_root_datum("A1")
A2 = build_root_datum("A2")
G2 = build_root_datum("G2")


def test_straight_path_examples():
    p = straight_path(A1, (2,))
    assert p.segments == (((2,), Fraction(1)),)
    assert straight_path(G2, (1, 1)).segments == (((1, 1), Fraction(1)),)
    assert p.endpoint == (2,)
    with pytest.raises(PreconditionError):
        straight_path(A1, (-1,))


def test_lowering_in_rank_one():
    p = straight_path(A1, (2,))
    f1 = root_operator_f(A1, p, 0)
    # dips to -1, then climbs back to 0
    heights = [pt[1][0] for pt in f1.breakpoints()]
    assert heights == [0, -1, 0]
    assert f1.endpoint == (0,)
    f2 = root_operator_f(A1, f1, 0)
    assert f2.endpoint == (-2,)
    assert root_operator_f(A1, f2, 0) is None


def test_raising_inverts_lowering():
    p = straight_path(A1, (2,))
    assert root_operator_e(A1, p, 0) is None
    f1 = root_operator_f(A1, p, 0)
    assert root_operator_e(A1, f1, 0) == p


def test_path_model_examples():
    model = generate_path_model(A1, (2,))
    assert sorted(p.endpoint for p in model) == [(-2,), (0,), (2,)]
    model = generate_path_model(A2, (1, 0))
    assert sorted(p.endpoint for p in model) == sorted(weyl_character(A2, (1, 0)))
    for label in LABELS:
        d = datum_of(label)
        assert len(generate_path_model(d, (0,) * d.rank)) == 1


def test_path_model_cap():
    with pytest.raises(ResourceError):
        generate_path_model(G2, (3, 3), cap=100)


def test_dominant_shift_examples():
    p = straight_path(A1, (2,))
    f1 = root_operator_f(A1, p, 0)
    f2 = root_operator_f(A1, f1, 0)
    assert is_dominant_shifted(A1, p, (1,))
    assert not is_dominant_shifted(A1, f2, (1,))
    assert is_dominant_shifted(A1, f1, (1,))
    assert not is_dominant_shifted(A1, f1, (0,))


def test_count_examples():
    assert count_dominant_paths(A1, 2, (2,), (1,)) == 1
    assert count_dominant_paths(A1, 2, (2,), (0,)) == 1
    assert count_dominant_paths(G2, 2, (1, 1), (1, 0)) == 2


@pytest.mark.parametrize("label", LABELS)
@given(data=st.data())
def test_model_realizes_character(label, data):
    d = datum_of(label)
    lam = data.draw(dominant_weights(d, 3 if d.rank > 1 else 8))
    model = generate_path_model(d, lam)
    assert len(model) == weyl_dimension(d, lam)
    ends = {}
    for path in model:
        ends[path.endpoint] = ends.get(path.endpoint, 0) + 1
    assert weyl_character(d, lam) == ends
    stats = path_model_statistics(d, lam)
    assert stats.count == len(model) and stats.endpoints == weyl_character(d, lam)


@pytest.mark.parametrize("label", LABELS)
@given(data=st.data())
def test_e_inverts_f(label, data):
    d = datum_of(label)
    lam = data.draw(dominant_weights(d, 3))
    for path in generate_path_model(d, lam):
        for i in range(d.rank):
            down = root_operator_f(d, path, i)
            if down is not None:
                assert root_operator_e(d, down, i) == path
                assert tuple(a - b for a, b in zip(path.endpoint, down.endpoint)) == d.simple_roots[i]
            up = root_operator_e(d, path, i)
            if up is not None:
                assert root_operator_f(d, up, i) == path


def test_paths_are_normalized():
    for path in generate_path_model(G2, (1, 1)):
        dirs = [seg[0] for seg in path.raw]
        assert all(a != b for a, b in zip(dirs, dirs[1:]))
        assert sum(ln for _, ln in path.raw) == path.denom


def test_dump_format():
    dump = path_model_dump(generate_path_model(A1, (2,)))
    assert [[[2], 1, 1]] in dump
    assert all(isinstance(seg[1], int) and isinstance(seg[2], int) for path in dump for seg in path)
    assert isinstance(straight_path(A1, (2,)), LSPath)
