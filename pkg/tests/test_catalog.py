from collections import Counter

import pytest

from hankellab import AvoidingSet, hankel_prefix, verify_claim
from hankellab.catalog import ROWS, row_for, sweep_order


def test_row_count_is_every_nonempty_subset_through_modulus_five():
    assert len(ROWS) == 56
    by_modulus = Counter(row.modulus for row in ROWS)
    assert by_modulus == {2: 3, 3: 7, 4: 15, 5: 31}


def test_rows_follow_the_sweep_order():
    assert [row.avoiding_set for row in ROWS] == sweep_order()


def test_sweep_order_is_modulus_then_size_then_lexicographic():
    order = sweep_order()
    keys = [(s.modulus, len(s.residues), s.residues) for s in order]
    assert keys == sorted(keys)
    assert len(set(order)) == len(order)


def test_periodic_aperiodic_split():
    periodic = [row for row in ROWS if row.cycle is not None]
    aperiodic = [row for row in ROWS if row.cycle is None]
    assert len(periodic) == 44
    assert len(aperiodic) == 12
    for row in aperiodic:
        assert row.modulus == 5
        assert row.prefix is not None and len(row.prefix) >= 16


def test_full_avoidance_rows_kill_every_determinant_past_the_first():
    for m in (2, 3, 4, 5):
        row = row_for(AvoidingSet(m, range(1, m + 1)))
        assert row.preperiod == (1,)
        assert row.cycle == (0,)


def test_row_lookup():
    row = row_for(AvoidingSet(3, (1,)))
    assert row.period == 10
    with pytest.raises(KeyError):
        row_for(AvoidingSet(7, (1,)))


def test_expected_witness_round_trip():
    row = row_for(AvoidingSet(2, (2,)))
    witness = row.expected_witness()
    assert witness.expand(12) == [1, 0, -1, -1, 0, 1] * 2
    assert row_for(AvoidingSet(5, (1,))).expected_witness() is None


@pytest.mark.parametrize(
    "modulus,residues",
    [(2, (1,)), (3, (1, 2)), (4, (2, 4)), (5, (1, 2, 3))],
)
def test_spot_check_periodic_golden_rows(modulus, residues):
    row = row_for(AvoidingSet(modulus, residues))
    horizon = max(2 * (len(row.preperiod) + len(row.cycle)), 12)
    assert verify_claim(row.avoiding_set, row.expected_witness(), horizon)


def test_spot_check_an_aperiodic_prefix():
    row = row_for(AvoidingSet(5, (2,)))
    computed = hankel_prefix(row.avoiding_set, len(row.prefix))
    assert computed == list(row.prefix)
