import json
from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from splitpat import (
    Permutation,
    SearchLimitError,
    avoider_count,
    avoider_count_by_peeling,
    binomial,
    brute_count,
    build_count_table,
    check_excess_recursion,
    enumerate_avoiders,
    falling_factorial,
    is_avoider,
    left_values,
    max_left_avoider_count,
    normalized_excess,
    parse_permutation,
    partition_by_smallest_right,
    right_values,
)
from support import TABLE1


class TestFallingFactorial:
    @pytest.mark.parametrize(
        "m,i,expected",
        [(5, 2, 20), (7, 0, 1), (0, 0, 1), (3, 5, 0), (-2, 2, 6), (4, 4, 24)],
    )
    def test_values(self, m, i, expected):
        assert falling_factorial(m, i) == expected

    def test_negative_length_rejected(self):
        with pytest.raises(ValueError):
            falling_factorial(5, -1)


class TestBinomial:
    @pytest.mark.parametrize(
        "n,k,expected", [(4, 2, 6), (3, -1, 0), (0, 0, 1), (3, 5, 0), (10, 10, 1)]
    )
    def test_values(self, n, k, expected):
        assert binomial(n, k) == expected

    def test_negative_top_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)


class TestClosedForm:
    def test_full_published_table(self):
        for (r, n), expected in TABLE1.items():
            assert avoider_count(r, n) == expected

    def test_empty_case(self):
        assert avoider_count(0, 0) == 1

    def test_factorial_row(self):
        for n in range(13):
            assert avoider_count(0, n) == factorial(n)
            assert avoider_count(n, n) == factorial(n)

    def test_symmetry_up_to_30(self):
        for n in range(31):
            for r in range(n + 1):
                assert avoider_count(r, n) == avoider_count(n - r, n)

    def test_lower_bound_up_to_30(self):
        for n in range(31):
            for r in range(n + 1):
                assert avoider_count(r, n) >= factorial(r) * factorial(n - r)

    def test_exceeds_64_bit_range(self):
        assert avoider_count(0, 21) == factorial(21) > 2**63

    def test_rejects_bad_arguments(self):
        with pytest.raises(ValueError):
            avoider_count(3, 2)
        with pytest.raises(ValueError):
            avoider_count(-1, 2)


class TestMaxLeftCount:
    def test_small_values(self):
        assert max_left_avoider_count(1, 3) == 1
        assert max_left_avoider_count(2, 4) == 4

    def test_equal_arguments_give_factorial(self):
        for r in range(1, 8):
            assert max_left_avoider_count(r, r) == factorial(r)

    def test_against_enumeration(self):
        for n in range(1, 7):
            for r in range(1, n + 1):
                observed = sum(
                    1
                    for w in enumerate_avoiders(r, n)
                    if n in left_values(w, r)
                )
                assert max_left_avoider_count(r, n) == observed

    def test_rejects_r_zero(self):
        with pytest.raises(ValueError):
            max_left_avoider_count(0, 3)


class TestPeelingRoute:
    def test_example(self):
        assert avoider_count_by_peeling(1, 3) == 5

    def test_single_term_at_r_equals_n(self):
        for r in range(1, 8):
            assert avoider_count_by_peeling(r, r) == factorial(r)

    def test_matches_closed_form(self):
        for n in range(1, 13):
            for r in range(1, n + 1):
                assert avoider_count_by_peeling(r, n) == avoider_count(r, n)

    def test_table_value_via_alternative_route(self):
        assert avoider_count_by_peeling(2, 5) == 47


class TestBruteForce:
    def test_enumeration_for_1_3(self):
        got = [str(w) for w in enumerate_avoiders(1, 3)]
        assert got == ["123", "132", "213", "231", "321"]

    def test_position_zero_keeps_everything(self):
        assert len(enumerate_avoiders(0, 3)) == 6

    def test_lexicographic_order(self):
        members = enumerate_avoiders(2, 5)
        assert members == sorted(members, key=lambda w: w.values)

    def test_counts_match_closed_form(self):
        for n in range(7):
            for r in range(n + 1):
                assert brute_count(r, n) == avoider_count(r, n)

    def test_table_cardinality(self):
        assert len(enumerate_avoiders(2, 4)) == 14
        assert brute_count(3, 7) == 676

    def test_guard(self):
        with pytest.raises(SearchLimitError):
            brute_count(0, 11)
        with pytest.raises(SearchLimitError):
            enumerate_avoiders(2, 5, limit=4)
        assert brute_count(2, 5, limit=5) == 47

    def test_guard_is_a_value_error(self):
        # Callers treating guard refusals as bad input keep working.
        with pytest.raises(ValueError):
            brute_count(0, 11)


class TestSmallestRightPartition:
    def test_sizes_for_2_4(self):
        groups = partition_by_smallest_right(2, 4)
        assert {i: len(g) for i, g in groups.items()} == {1: 2, 2: 2}

    def test_singleton_for_1_3(self):
        groups = partition_by_smallest_right(1, 3)
        assert set(groups) == {1}
        assert len(groups[1]) == max_left_avoider_count(1, 3) == 1

    def test_paper_example_membership(self):
        w = parse_permutation("391276854")
        assert is_avoider(w, 6)
        assert 9 in left_values(w, 6)
        assert min(right_values(w, 6)) == 4

    def test_classes_partition_the_max_left_side(self):
        for n in range(2, 7):
            for r in range(1, n):
                groups = partition_by_smallest_right(r, n)
                assert set(groups) <= set(range(1, r + 1))
                members = set().union(*groups.values())
                assert len(members) == sum(len(g) for g in groups.values())
                assert len(members) == max_left_avoider_count(r, n)

    def test_rejects_r_equal_n(self):
        with pytest.raises(ValueError):
            partition_by_smallest_right(3, 3)


class TestNormalizedExcess:
    def test_values_from_table(self):
        assert normalized_excess(1, 1) == 1
        assert normalized_excess(2, 2) == Fraction(5, 2)

    def test_axes_vanish(self):
        for t in range(8):
            assert normalized_excess(t, 0) == 0
            assert normalized_excess(0, t) == 0

    @given(st.integers(0, 10), st.integers(0, 10))
    def test_symmetric(self, r, s):
        assert normalized_excess(r, s) == normalized_excess(s, r)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            normalized_excess(-1, 2)


class TestExcessRecursion:
    def test_holds_on_12_grid(self):
        report = check_excess_recursion(12, 12)
        assert report.ok
        assert report.violations == ()

    def test_cell_2_2_expansion(self):
        lhs = normalized_excess(2, 2)
        rhs = (
            normalized_excess(2, 1)
            + normalized_excess(1, 2)
            - normalized_excess(1, 1)
            + Fraction(binomial(2, 1), factorial(2) * factorial(2))
        )
        assert lhs == rhs == Fraction(5, 2)
        assert normalized_excess(2, 1) == Fraction(3, 2)

    def test_cell_1_1_initial_conditions(self):
        assert normalized_excess(1, 1) == 0 + 0 - 0 + Fraction(binomial(0, 0), 1)

    def test_rejects_bad_bounds(self):
        with pytest.raises(ValueError):
            check_excess_recursion(0, 3)


class TestCountTable:
    def test_matches_published_values(self):
        table = build_count_table(9)
        for (r, n), expected in TABLE1.items():
            assert table.k(r, n) == expected
        assert table.k(1, 9) == 109601
        assert table.k(5, 9) == table.k(4, 9) == 14359

    def test_invariants(self):
        table = build_count_table(8)
        for (r, n), k in table.entries.items():
            assert table.k(n - r, n) == k
        for n in range(9):
            assert table.k(0, n) == factorial(n)
            assert table.k(n, n) == factorial(n)

    def test_csv_layout(self):
        text = build_count_table(2).to_csv()
        assert text.splitlines() == [
            "r,n,k",
            "0,0,1",
            "0,1,1",
            "1,1,1",
            "0,2,2",
            "1,2,2",
            "2,2,2",
        ]

    def test_csv_filters(self):
        text = build_count_table(9).to_csv(r_max=4, n_min=1)
        rows = text.splitlines()[1:]
        assert len(rows) == len(TABLE1) == 39
        for row in rows:
            r, n, k = (int(part) for part in row.split(","))
            assert TABLE1[(r, n)] == k

    def test_json_uses_decimal_strings(self):
        data = json.loads(build_count_table(3).to_json(n_min=1))
        assert data[0] == {"r": 0, "n": 1, "k": "1"}
        assert all(isinstance(entry["k"], str) for entry in data)
        assert [entry["n"] for entry in data] == sorted(entry["n"] for entry in data)

    def test_rejects_nonpositive_n_max(self):
        with pytest.raises(ValueError):
            build_count_table(0)


class TestFiberStructure:
    def test_split_and_fiber_sizes(self):
        # The avoidance class splits by the side holding the max; the
        # max-right side projects onto the class one size down with
        # constant fiber size n-r.
        from collections import Counter

        from splitpat import remove_max

        for n in range(1, 7):
            for r in range(n + 1):
                members = enumerate_avoiders(r, n)
                max_left = [w for w in members if n in left_values(w, r)]
                max_right = [w for w in members if n in right_values(w, r)]
                assert len(max_left) + len(max_right) == avoider_count(r, n)
                if r <= n - 1:
                    fibers = Counter(remove_max(w) for w in max_right)
                    smaller = enumerate_avoiders(r, n - 1)
                    assert set(fibers) == set(smaller)
                    assert all(fibers[w] == n - r for w in smaller)


def test_permutation_is_hashable_for_set_work():
    assert len({Permutation((1, 2)), Permutation((1, 2))}) == 1
