import random

import pytest
from hypothesis import given, strategies as st

from hankellab import (
    AvoidingSet,
    CoeffSeries,
    HankelSpec,
    InsufficientCoefficientsError,
    SizeLimitError,
    dyck_count_dp,
    hankel_det,
    hankel_matrix,
    hankel_sequence,
    naive_det,
)
from hankellab.hankel import det_fraction_free


class TestHankelSpec:
    def test_accepts_order_zero(self):
        assert HankelSpec(0).highest_index == -2

    def test_highest_index(self):
        assert HankelSpec(3, 2).highest_index == 2 + 2 * 3 - 2

    def test_rejects_negative(self):
        with pytest.raises(ValueError, match="order must be nonnegative"):
            HankelSpec(-1)
        with pytest.raises(ValueError, match="shift must be nonnegative"):
            HankelSpec(2, -1)


def toy_series(*coeffs):
    return CoeffSeries(tuple(coeffs), AvoidingSet(2))


class TestHankelMatrix:
    def test_layout(self):
        s = toy_series(1, 2, 3, 4, 5)
        assert hankel_matrix(s, HankelSpec(2, 1)) == [[2, 3], [3, 4]]
        assert hankel_matrix(s, HankelSpec(3)) == [[1, 2, 3], [2, 3, 4], [3, 4, 5]]

    def test_order_zero_is_empty(self):
        assert hankel_matrix(toy_series(1), HankelSpec(0)) == []
        assert hankel_det(toy_series(1), HankelSpec(0)) == 1

    def test_coefficient_budget_boundary(self):
        s = toy_series(1, 2, 3, 4, 5)  # order 4
        assert hankel_det(s, HankelSpec(3)) is not None
        with pytest.raises(InsufficientCoefficientsError):
            hankel_det(s, HankelSpec(3, 1))


class TestDeterminants:
    def test_known_values(self):
        assert det_fraction_free([[3]]) == 3
        assert det_fraction_free([[1, 2], [3, 4]]) == -2
        assert det_fraction_free([[2, 0, 1], [1, 3, 2], [0, 1, 4]]) == 21

    def test_zero_pivot_column_short_circuits(self):
        assert det_fraction_free([[0, 1], [0, 2]]) == 0

    def test_row_swap_keeps_sign_correct(self):
        assert det_fraction_free([[0, 1], [1, 0]]) == -1
        assert det_fraction_free([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1

    def test_empty_matrix(self):
        assert det_fraction_free([]) == 1
        assert naive_det([]) == 1

    def test_square_enforced(self):
        with pytest.raises(ValueError, match="square"):
            det_fraction_free([[1, 2]])
        with pytest.raises(ValueError, match="square"):
            naive_det([[1, 2]])

    def test_naive_size_limit(self):
        with pytest.raises(SizeLimitError):
            naive_det([[0] * 9 for _ in range(9)])

    def test_agreement_on_seeded_random(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(1, 6)
            matrix = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            assert det_fraction_free([row[:] for row in matrix]) == naive_det(matrix)

    @given(
        st.integers(1, 5).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-20, 20), min_size=n, max_size=n),
                min_size=n,
                max_size=n,
            )
        )
    )
    def test_agreement_property(self, matrix):
        assert det_fraction_free([row[:] for row in matrix]) == naive_det(matrix)


class TestHankelSequence:
    def test_matches_per_order_calls(self):
        series = dyck_count_dp(AvoidingSet(10, (2, 8)), 18)
        seq = hankel_sequence(series, 10)
        assert seq == [hankel_det(series, HankelSpec(n)) for n in range(1, 11)]

    def test_coefficient_budget(self):
        series = dyck_count_dp(AvoidingSet(2), 9)
        assert len(hankel_sequence(series, 5)) == 5
        with pytest.raises(InsufficientCoefficientsError):
            hankel_sequence(series, 6)

    def test_rejects_empty_request(self):
        with pytest.raises(ValueError):
            hankel_sequence(dyck_count_dp(AvoidingSet(2), 4), 0)

    def test_catalan_determinants_are_all_one(self):
        series = dyck_count_dp(AvoidingSet(2), 28)
        assert hankel_sequence(series, 15) == [1] * 15
