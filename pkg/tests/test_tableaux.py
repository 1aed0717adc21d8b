import pytest
from hypothesis import given, strategies as st

from partalg.combinatorics import IntegerPartition, integer_partitions, restricted_bell
from partalg.characters import multiplicity
from partalg.tableaux import (
    ZERO,
    BratteliDiagram,
    SetPartitionTableau,
    VacillatingTableau,
    bijection_A,
    bijection_B,
    box_key,
    build_bratteli,
    enumerate_spt,
    enumerate_vacillating,
    format_rows,
    halves_join,
    halves_split,
    is_semistandard,
    path_counts,
    render_rows,
    schensted_insert,
    schensted_uninsert,
    step_trace,
)

SEVEN = "0 6 / 2 4,7 / 1,3,5"
SEVEN_SHAPES = "[5];[4];[4,1];[4];[4,1];[3,1];[3,2];[3,1];[3,2];[2,2];[2,2,1];[2,1,1];[2,2,1];[2,1,1];[2,2,1]"
EIGHT = "0 4 1,3,5 6,7 2,8"


def all_spt(n, k):
    return [t for lam in integer_partitions(n) for t in enumerate_spt(lam, k, n)]


def test_box_order():
    assert box_key(ZERO) == 0
    assert box_key(frozenset({2, 7})) == 7


def test_path_counts_n3():
    levels = path_counts(3, 4)
    assert levels[2] == {IntegerPartition((3,)): 1, IntegerPartition((2, 1)): 1}
    assert levels[4] == {IntegerPartition((3,)): 2, IntegerPartition((2, 1)): 3, IntegerPartition((1, 1, 1)): 1}


@pytest.mark.parametrize("n", range(2, 7))
def test_sum_of_squares_is_restricted_bell(n):
    diagram = build_bratteli(n, 10)
    for two_level in range(11):
        assert diagram.sum_of_squares(two_level) == restricted_bell(two_level, n)


def test_bratteli_outputs():
    diagram = build_bratteli(3, 2)
    assert diagram.vertices(1) == [IntegerPartition((2,))]
    assert diagram.count(2, (2, 1)) == 1
    assert diagram.edges(1) == [(IntegerPartition((3,)), IntegerPartition((2,)))]
    dot = diagram.to_dot("hdr")
    assert dot.startswith("// hdr\ndigraph bratteli {")
    assert '"1:[2]" -> "2:[2,1]";' in dot
    assert diagram.to_dict()["levels"][1]["level"] == "1/2"
    assert diagram.to_text().splitlines()[2].split() == ["1", "[3]:1", "[2,1]:1"]
    with pytest.raises(ValueError):
        build_bratteli(1, 2)


def test_vacillating_validation_and_parse():
    vt = VacillatingTableau.parse("[2];[1];[1,1]")
    assert vt.k == 1 and vt.n == 2 and vt.shape == (1, 1)
    assert str(vt) == "[2];[1];[1,1]"
    assert VacillatingTableau.from_dict(vt.to_dict()) == vt
    with pytest.raises(ValueError):
        VacillatingTableau.parse("[2];[1]")
    with pytest.raises(ValueError):
        VacillatingTableau.parse("[2];[2];[2]")
    with pytest.raises(ValueError):
        VacillatingTableau.parse("[1,1];[1];[2]")


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(0, 4))
def test_vacillating_counts_are_multiplicities(n, k):
    for lam in integer_partitions(n):
        assert len(enumerate_vacillating(lam, k, n)) == multiplicity(lam, k, n)


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(0, 4))
def test_spt_counts_are_multiplicities(n, k):
    for lam in integer_partitions(n):
        tabs = enumerate_spt(lam, k, n)
        assert len(tabs) == len(set(tabs)) == multiplicity(lam, k, n)
        assert all(is_semistandard(t.rows) for t in tabs)


def test_spt_validation():
    t = SetPartitionTableau.parse(SEVEN)
    assert t.shape == (2, 2, 1) and t.k == 7 and t.n == 5 and t.t == 4
    assert str(t.set_partition()) == "1,3,5|2|4,7|6"
    assert SetPartitionTableau.from_dict(t.to_dict()) == t
    assert format_rows(t.rows) == SEVEN
    assert render_rows(t.rows).splitlines()[0] == "[0] [6]"
    for bad in ("6 0 / 2 4,7 / 1,3,5", "0 6 / 2 4,7 / 1,3", "0 2 / 6 4,7 / 1,3,5", "0 6 / 0 4,7 / 1,3,5"):
        with pytest.raises(ValueError):
            SetPartitionTableau.parse(bad)


def test_insert_and_uninsert_are_inverse():
    rows = ((ZERO, ZERO, frozenset({2})), (frozenset({3}),))
    new, cell = schensted_insert(rows, frozenset({1}))
    assert format_rows(new) == "0 0 1 / 2 / 3"
    assert cell == (2, 0)
    back, box = schensted_uninsert(new, cell)
    assert back == rows and box == frozenset({1})
    with pytest.raises(ValueError):
        schensted_uninsert(new, (0, 0))


def test_seven_label_example():
    trace = []
    vt = bijection_A(SetPartitionTableau.parse(SEVEN), trace)
    assert str(vt) == SEVEN_SHAPES
    assert len(vt.shapes) == 15 and vt.shape == (2, 2, 1)
    assert bijection_B(vt) == SetPartitionTableau.parse(SEVEN)
    assert len(trace) == 8
    assert step_trace(trace).splitlines()[0] == "j=7"


def test_eight_label_example():
    t = SetPartitionTableau.parse(EIGHT)
    vt = bijection_A(t)
    assert vt.k == 8 and vt.shape == (5,)
    assert str(vt) == "[5];[4];[4,1];[4];[4,1];[3,1];[3,2];[3,1];[3,1,1];[2,1,1];[3,1,1];[3,1];[4,1];[3,1];[4,1];[4];[5]"
    assert str(bijection_B(vt).set_partition()) == "1,3,5|2,8|4|6,7"


@pytest.mark.parametrize("n", range(1, 5))
@pytest.mark.parametrize("k", range(0, 4))
def test_bijection_round_trips(n, k):
    for lam in integer_partitions(n):
        spts = enumerate_spt(lam, k, n)
        vts = enumerate_vacillating(lam, k, n)
        images = [bijection_A(s) for s in spts]
        assert set(images) == set(vts)
        assert all(bijection_B(v) == s for v, s in zip(images, spts))
        assert all(bijection_A(bijection_B(v)) == v for v in vts)


@given(st.integers(min_value=2, max_value=5), st.integers(min_value=0, max_value=3), st.data())
def test_trivial_shape_gives_set_partitions(n, half, data):
    # shape-[n] tableaux of length 2*half split into two halves of equal shape
    k = 2 * half
    vts = enumerate_vacillating((n,), k, n)
    if not vts:
        return
    vt = data.draw(st.sampled_from(vts))
    first, second = halves_split(vt)
    assert first.shape == second.shape
    assert halves_join(first, second) == vt


def test_shape_n_count_is_restricted_bell():
    # the trivial representation occurs B(k, n) times in the k-th tensor power
    for k in range(0, 5):
        assert len(enumerate_vacillating((6,), k, 6)) == restricted_bell(k, 6)
