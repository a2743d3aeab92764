"""Shared fixtures.

The even-modulus, all-even-residue family is exercised by several suites
(closed-form generator, reduction engine, acceptance criteria 3 and 4).
Computing its Hankel sequences directly is the expensive part, so it is
done once per session and shared.
"""

import itertools

import pytest

from hankellab import AvoidingSet, hankel_sequence, series_cf

EVEN_FAMILY_TERMS = 50
EVEN_FAMILY_MAX_MODULUS = 12


def even_residue_sets(max_modulus=EVEN_FAMILY_MAX_MODULUS):
    """Every even modulus up to the bound with every nonempty even V."""
    for m in range(2, max_modulus + 1, 2):
        evens = range(2, m + 1, 2)
        for size in range(1, m // 2 + 1):
            for combo in itertools.combinations(evens, size):
                yield AvoidingSet(m, combo)


@pytest.fixture(scope="session")
def even_family():
    """Map each family set to its first 50 directly computed determinants."""
    out = {}
    for avoiding_set in even_residue_sets():
        series = series_cf(avoiding_set, 2 * EVEN_FAMILY_TERMS - 2)
        out[avoiding_set] = hankel_sequence(series, EVEN_FAMILY_TERMS)
    return out
