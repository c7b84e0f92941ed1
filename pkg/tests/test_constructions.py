import pytest

import paper_tables as T
import table_checks
from torus_radio.constructions import (
    EvenIndexDecomposition,
    LastDiagonalDecomposition,
    ParityCase,
    build_labeling,
    label,
    label_even,
    label_odd_k_even,
    label_odd_k_odd,
    lower_bound,
    min_gap,
    parity_case,
    position,
    position_even,
    position_odd_k_even,
    position_odd_k_odd,
    rn_formula,
)
from torus_radio.errors import UnsupportedOrderError
from torus_radio.radio_core import span, verify_full
from torus_radio.torus_graph import all_vertices, diagonal_of

SUPPORTED = [1] + list(range(3, 26))


@pytest.mark.parametrize(
    "n,case",
    [(1, ParityCase.TRIVIAL_ONE), (3, ParityCase.ODD_K_ODD), (4, ParityCase.EVEN),
     (5, ParityCase.ODD_K_EVEN), (7, ParityCase.ODD_K_ODD), (9, ParityCase.ODD_K_EVEN)],
)
def test_parity_case(n, case):
    assert parity_case(n) is case


@pytest.mark.parametrize("n", [0, 2, -3])
def test_unsupported_orders(n):
    for fn in (parity_case, rn_formula, lower_bound, build_labeling):
        with pytest.raises(UnsupportedOrderError):
            fn(n)


@pytest.mark.parametrize("n", [1, 2])
def test_min_gap_needs_three(n):
    with pytest.raises(UnsupportedOrderError):
        min_gap(n)


def test_wrong_case_rejected():
    with pytest.raises(UnsupportedOrderError):
        position_even(5, 0)
    with pytest.raises(UnsupportedOrderError):
        position_odd_k_odd(5, 0)
    with pytest.raises(UnsupportedOrderError):
        label_odd_k_even(7, 0)
    with pytest.raises(UnsupportedOrderError):
        position_even(2, 0)


def test_index_out_of_range():
    with pytest.raises(IndexError):
        position_even(4, 16)
    with pytest.raises(IndexError):
        position(1, 1)


@pytest.mark.parametrize("i,expected", [(0, (0, 0)), (1, (2, 2)), (4, (0, 1)), (15, (3, 3))])
def test_position_even(i, expected):
    assert tuple(position_even(4, i)) == expected


@pytest.mark.parametrize("i,expected", [(0, 1), (3, 6), (15, 30)])
def test_label_even(i, expected):
    assert label_even(4, i) == expected


@pytest.mark.parametrize("i,expected", [(0, (0, 0)), (3, (0, 1)), (8, (2, 1))])
def test_position_odd_k_odd(i, expected):
    assert tuple(position_odd_k_odd(3, i)) == expected


@pytest.mark.parametrize("n,i,expected", [(3, 0, 1), (3, 8, 9), (7, 48, 97)])
def test_label_odd_k_odd(n, i, expected):
    assert label_odd_k_odd(n, i) == expected


@pytest.mark.parametrize("i,expected", [(0, (0, 0)), (1, (3, 2)), (5, (0, 4)), (20, (3, 4)), (21, (0, 1)), (24, (1, 2))])
def test_position_odd_k_even(i, expected):
    assert tuple(position_odd_k_even(5, i)) == expected


@pytest.mark.parametrize("i,expected", [(0, 1), (20, 31), (24, 37)])
def test_label_odd_k_even(i, expected):
    assert label_odd_k_even(5, i) == expected


def test_decompositions():
    dec = EvenIndexDecomposition.of(8, 37)
    assert (dec.residue, dec.r, dec.s) == (1, 2, 1)
    assert LastDiagonalDecomposition.of(9, 72 + 6) == LastDiagonalDecomposition(78, 1, 2)
    with pytest.raises(IndexError):
        LastDiagonalDecomposition.of(9, 80)


@pytest.mark.parametrize("n", [n for n in SUPPORTED if n % 2 == 0])
def test_even_decomposition_ranges(n):
    k = n // 2
    for i in range(n * n):
        dec = EvenIndexDecomposition.of(n, i)
        assert 0 <= dec.r <= (n - 2) // 2 < k
        assert 0 <= dec.s < k


@pytest.mark.parametrize("n", SUPPORTED)
def test_position_is_bijection(n):
    xs = [position(n, i) for i in range(n * n)]
    assert sorted(xs) == all_vertices(n)


@pytest.mark.parametrize("n", SUPPORTED)
def test_labels_strictly_increase(n):
    labels = [label(n, i) for i in range(n * n)]
    assert labels[0] == 1
    assert all(a < b for a, b in zip(labels, labels[1:]))


@pytest.mark.parametrize("n", [n for n in SUPPORTED if parity_case(n) is ParityCase.ODD_K_EVEN])
def test_odd_k_even_two_step_increment(n):
    k = n // 2
    for i in range(0, n * n - 2, 2):
        assert label(n, i + 2) == label(n, i) + k + 1


@pytest.mark.parametrize("n", [n for n in SUPPORTED if parity_case(n) is ParityCase.ODD_K_EVEN])
def test_odd_k_even_diagonal_membership(n):
    for i in range(n * n):
        diag = diagonal_of(n, position(n, i))
        if i >= (n - 1) * n:
            assert diag == n - 1
        else:
            assert diag in (2 * (i // (2 * n)), 2 * (i // (2 * n)) + 1)


@pytest.mark.parametrize("n", SUPPORTED)
def test_construction_is_optimal(n):
    order, lab = build_labeling(n)
    assert verify_full(lab).ok
    assert span(lab) == rn_formula(n) == lower_bound(n)
    assert [lab.labels[v] for v in order] == [label(n, i) for i in range(n * n)]


@pytest.mark.parametrize("n,expected", [(1, 1), (3, 9), (4, 30), (5, 37), (6, 87), (7, 97)])
def test_rn_formula(n, expected):
    assert rn_formula(n) == expected


@pytest.mark.parametrize("n,expected", [(4, 30), (7, 97), (1, 1)])
def test_lower_bound(n, expected):
    assert lower_bound(n) == expected


@pytest.mark.parametrize("n,expected", [(4, 4), (5, 3), (3, 2)])
def test_min_gap(n, expected):
    assert min_gap(n) == expected


# verification tables

@pytest.mark.parametrize("n", [4, 6, 8])
def test_even_subcase1_distance_table(n):
    assert table_checks.even_subcase1(n, T.EVEN_SUBCASE1_DISTANCES, table_checks._d) == []


# label differences worked out by hand from c(x_i): 1 + (i/2)(k+2), 2 + ((i-1)/2)(k+2)
DERIVED_EVEN_LABEL_DIFFS = {
    (0, 1): lambda k: 1,
    (0, 2): lambda k: k + 2,
    (0, 3): lambda k: k + 3,
    (1, 2): lambda k: k + 1,
    (1, 3): lambda k: k + 2,
    (1, 4): lambda k: 2 * k + 3,
    (2, 3): lambda k: 1,
    (2, 4): lambda k: k + 2,
    (2, 5): lambda k: k + 3,
    (3, 4): lambda k: k + 1,
    (3, 5): lambda k: k + 2,
}


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_even_subcase1_derived_label_diffs(n):
    assert table_checks.even_subcase1(n, DERIVED_EVEN_LABEL_DIFFS, table_checks._diff) == []


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_even_subcase1_sums_meet_radio_condition(n):
    k = n // 2
    for pair, dist in T.EVEN_SUBCASE1_DISTANCES.items():
        assert dist(k) + DERIVED_EVEN_LABEL_DIFFS[pair](k) >= 2 * k + 1


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_even_subcase2_near_block_boundary(n):
    # every printed cell holds except the (an-1, an) sum: its own columns give k + (k+1)
    k = n // 2
    bad = table_checks.even_subcase2(n)
    assert {(pair[1] - pair[0], what, got) for pair, what, got, _ in bad} == {(1, "sum", 2 * k + 1)}


@pytest.mark.parametrize("n", [7, 11, 15])
def test_odd_k_odd_tables(n):
    assert table_checks.odd_k_odd(n) == []


@pytest.mark.parametrize("n", [5, 9, 13, 17])
def test_odd_k_even_subcase1(n):
    assert table_checks.odd_k_even_subcase1(n) == []


@pytest.mark.parametrize("n", [9, 13, 17])
def test_odd_k_even_subcase2(n):
    assert table_checks.odd_k_even_subcase2(n) == []


def test_odd_k_even_subcase2_at_k2():
    # with k = 2 the first coordinates of x_{2n+1}, x_{2n-2} are 2 apart, not k/2 + 2 = 3
    assert table_checks.odd_k_even_subcase2(5) == [((11, 8), (2, 4), (3, 4))]


@pytest.mark.parametrize("n", [5, 9, 13, 17])
def test_odd_k_even_subcase3(n):
    assert table_checks.odd_k_even_subcase3(n) == []


@pytest.mark.parametrize("n", [5, 9, 13, 17, 21])
def test_odd_k_even_subcase4(n):
    assert table_checks.odd_k_even_subcase4(n) == []
