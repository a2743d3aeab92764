import pytest
from hypothesis import given, settings, strategies as st

from hankellab import (
    AvoidingSet,
    CoeffSeries,
    SizeLimitError,
    decrement_constant,
    dyck_count_bruteforce,
    dyck_count_dp,
    series_cf,
)

CATALAN = [1, 1, 2, 5, 14, 42, 132, 429, 1430]


def small_sets(max_modulus):
    return st.integers(2, max_modulus).flatmap(
        lambda m: st.builds(
            AvoidingSet, st.just(m), st.sets(st.integers(1, m))
        )
    )


class TestCoeffSeries:
    def test_requires_constant_term_one(self):
        with pytest.raises(ValueError, match="constant term must be 1"):
            CoeffSeries((0, 1), AvoidingSet(2))
        with pytest.raises(ValueError, match="at least the constant"):
            CoeffSeries((), AvoidingSet(2))

    def test_decremented_requires_zero(self):
        with pytest.raises(ValueError, match="constant term must be 0"):
            CoeffSeries((1, 1), AvoidingSet(2), decremented=True)

    def test_order(self):
        assert CoeffSeries((1, 0, 1), AvoidingSet(2)).order == 2

    def test_json_values_are_strings(self):
        s = dyck_count_dp(AvoidingSet(2), 6)
        assert s.to_json_values() == [str(c) for c in s.coeffs]


class TestDynamicProgram:
    def test_golden_prefix(self):
        s = dyck_count_dp(AvoidingSet(3, (1,)), 9)
        assert s.coeffs == (1, 0, 1, 2, 5, 13, 35, 97, 275, 794)

    def test_catalan_when_nothing_is_forbidden(self):
        assert list(dyck_count_dp(AvoidingSet(2), 8).coeffs) == CATALAN

    def test_everything_forbidden_leaves_the_empty_path(self):
        s = dyck_count_dp(AvoidingSet(5, (1, 2, 3, 4, 5)), 8)
        assert s.coeffs == (1,) + (0,) * 8

    def test_order_zero(self):
        assert dyck_count_dp(AvoidingSet(4, (2,)), 0).coeffs == (1,)

    def test_rejects_negative_order(self):
        with pytest.raises(ValueError):
            dyck_count_dp(AvoidingSet(2), -1)


class TestBruteforce:
    def test_catalan(self):
        assert [dyck_count_bruteforce(AvoidingSet(2), n) for n in range(9)] == CATALAN

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            dyck_count_bruteforce(AvoidingSet(2), 15)
        with pytest.raises(ValueError):
            dyck_count_bruteforce(AvoidingSet(2), -1)

    def test_matches_dp_on_small_sweep(self):
        for m in (2, 3, 4):
            for mask in range(2 ** m):
                v = [r for r in range(1, m + 1) if mask & (1 << (r - 1))]
                s = AvoidingSet(m, v)
                dp = dyck_count_dp(s, 8).coeffs
                assert all(
                    dyck_count_bruteforce(s, n) == dp[n] for n in range(9)
                ), s


class TestContinuedFraction:
    def test_golden_prefix(self):
        s = series_cf(AvoidingSet(3, (1,)), 9)
        assert s.coeffs == (1, 0, 1, 2, 5, 13, 35, 97, 275, 794)

    def test_order_zero(self):
        assert series_cf(AvoidingSet(3, (1,)), 0).coeffs == (1,)

    @settings(max_examples=60, deadline=None)
    @given(avoiding_set=small_sets(9), order=st.integers(0, 24))
    def test_matches_dp(self, avoiding_set, order):
        assert series_cf(avoiding_set, order) == dyck_count_dp(avoiding_set, order)


class TestDecrement:
    def test_shares_tail(self):
        full = dyck_count_dp(AvoidingSet(3, (1,)), 6)
        dec = decrement_constant(full)
        assert dec.coeffs == (0,) + full.coeffs[1:]
        assert dec.decremented

    def test_double_decrement_rejected(self):
        dec = decrement_constant(dyck_count_dp(AvoidingSet(2), 4))
        with pytest.raises(ValueError, match="already decremented"):
            decrement_constant(dec)
