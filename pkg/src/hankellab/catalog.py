"""Golden catalog: Hankel period data for every (m, V) with m <= 5.

Rows are ordered the way the sweep enumerates them: modulus ascending,
then residue-set size, then lexicographic.  Periodic rows carry the exact
cycle (all of them happen to be purely periodic); rows with no period
carry the reference prefix instead, against which a 60-term computation
must agree.  The four complete-set rows are derivable on sight: with every
height forbidden the series is the constant 1, so the determinant sequence
is 1 followed by zeros.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .core import AvoidingSet, EventuallyPeriodic


@dataclass(frozen=True)
class CatalogRow:
    modulus: int
    residues: tuple[int, ...]
    preperiod: tuple[int, ...]
    cycle: tuple[int, ...] | None
    prefix: tuple[int, ...] | None

    @property
    def avoiding_set(self) -> AvoidingSet:
        return AvoidingSet(self.modulus, self.residues)

    @property
    def period(self) -> int | None:
        return None if self.cycle is None else len(self.cycle)

    def expected_witness(self) -> EventuallyPeriodic | None:
        if self.cycle is None:
            return None
        return EventuallyPeriodic(self.preperiod, self.cycle)


def _periodic(m: int, v: tuple[int, ...], cycle: tuple[int, ...],
              preperiod: tuple[int, ...] = ()) -> CatalogRow:
    return CatalogRow(m, v, preperiod, cycle, None)


def _aperiodic(m: int, v: tuple[int, ...], prefix: tuple[int, ...]) -> CatalogRow:
    return CatalogRow(m, v, (), None, prefix)


ROWS: tuple[CatalogRow, ...] = (
    _periodic(2, (1,), (1,)),
    _periodic(2, (2,), (1, 0, -1, -1, 0, 1)),
    _periodic(2, (1, 2), (0,), preperiod=(1,)),

    _periodic(3, (1,), (1, 1, 0, -1, -1, -1, -1, 0, 1, 1)),
    _periodic(3, (2,), (1, 0, -1, -1, -1, -1, 0, 1, 1, 1)),
    _periodic(3, (3,), (1, 1, 1, 0, -1, -1, -1, -1, 0, 1)),
    _periodic(3, (1, 2), (1, 0, -1, -1, -1, 0, 1, 1)),
    _periodic(3, (1, 3), (1, 1, 0, -1, -1, -1, 0, 1)),
    _periodic(3, (2, 3), (1, 0, 0, -1, -1, 0, 0, 1)),
    _periodic(3, (1, 2, 3), (0,), preperiod=(1,)),

    _periodic(4, (1,), (1,)),
    _periodic(4, (2,), (1, 0, -1, -1, -1, 0, 1, 1)),
    _periodic(4, (3,), (1,)),
    _periodic(4, (4,), (1, 1, 0, -1, -1, -1, 0, 1)),
    _periodic(4, (1, 2), (1, 0, -1, 0, 1, 1, 1, 0, 0, -1, -1, -1, 0, 1, 0,
                          -1, -1, -1, 0, 0, 1, 1)),
    _periodic(4, (1, 3), (1,)),
    _periodic(4, (1, 4), (1, 1, 0, 0, -1, -1, -1, 0, 1, 0, -1, -1, -1, 0,
                          0, 1, 1, 1, 0, -1, 0, 1)),
    _periodic(4, (2, 3), (1, 0, 0, -1, -1, -1, 0, 1, 0, -1, -1, -1, 0, 0,
                          1, 1, 1, 0, -1, 0, 1, 1)),
    _periodic(4, (2, 4), (1, 0, -1, -1, 0, 1)),
    _periodic(4, (3, 4), (1, 1, 0, -1, 0, 1, 1, 1, 0, 0, -1, -1, -1, 0, 1,
                          0, -1, -1, -1, 0, 0, 1)),
    _periodic(4, (1, 2, 3), (1, 0, 0, -1, -1, -1, 0, 0, 1, 1)),
    _periodic(4, (1, 2, 4), (1, 0, -1, 0, 1)),
    _periodic(4, (1, 3, 4), (1, 1, 0, 0, -1, -1, -1, 0, 0, 1)),
    _periodic(4, (2, 3, 4), (1, 0, 0, 0, 1)),
    _periodic(4, (1, 2, 3, 4), (0,), preperiod=(1,)),

    _aperiodic(5, (1,), (1, 1, 1, 0, -1, -2, -2, -3, -4, -5, -1, 7, 23, 31,
                         51, 116, 149)),
    _aperiodic(5, (2,), (1, 0, -1, -2, -2, -3, -4, -5, -1, 7, 23, 31, 51,
                         116, 149, 118, -426)),
    _aperiodic(5, (3,), (1, 1, 1, 1, 0, -1, -2, -2, -3, -4, -5, -1, 7, 23,
                         31, 51, 116, 149)),
    _aperiodic(5, (4,), (1, 1, 0, -1, -2, -2, -3, -4, -5, -1, 7, 23, 31,
                         51, 116, 149, 118)),
    _aperiodic(5, (5,), (1, 1, 1, 1, 1, 0, -1, -2, -2, -3, -4, -5, -1, 7,
                         23, 31, 51, 116, 149)),
    _periodic(5, (1, 2), (1, 0, -1, -1, -1, -1, 0, 1, 1, 1)),
    _aperiodic(5, (1, 3), (1, 1, 1, 0, -1, -2, -2, -3, -4, -1, 7, 15, 23,
                           47, 68, 53, -202, -618)),
    _aperiodic(5, (1, 4), (1, 1, 0, -1, -2, -2, -3, -4, -1, 7, 15, 23, 47,
                           68, 53, -202, -618)),
    _periodic(5, (1, 5), (1, 1, 1, 0, -1, -1, -1, -1, 0, 1)),
    _periodic(5, (2, 3), (1, 0, 0, -1, -1, -1, 0, 0, 1, 1)),
    _aperiodic(5, (2, 4), (1, 0, -1, -2, -2, -3, -4, -1, 7, 15, 23, 47, 68,
                           53, -202, -618)),
    _aperiodic(5, (2, 5), (1, 0, -1, -1, -2, -4, -2, 5, 13, 20, 43, 67, 60,
                           -187, -595, -1338)),
    _periodic(5, (3, 4), (1, 1, 0, -1, -1, -1, -1, 0, 1, 1)),
    _aperiodic(5, (3, 5), (1, 1, 1, 1, 0, -1, -2, -2, -3, -4, -1, 7, 15,
                           23, 47, 68, 53, -202)),
    _periodic(5, (4, 5), (1, 1, 0, 0, -1, -1, -1, 0, 0, 1)),
    _periodic(5, (1, 2, 3), (1, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 1, 1, 1, 0,
                             0, 0, 1, 1)),
    _periodic(5, (1, 2, 4), (1, 0, -1, -1, -1, -1, 0, 1, 1, 1)),
    _periodic(5, (1, 2, 5), (1, 0, -1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0,
                             0, -1, 0, 1)),
    _periodic(5, (1, 3, 4), (1, 1, 0, -1, -1, -1, -1, 0, 1, 1)),
    _periodic(5, (1, 3, 5), (1, 1, 1, 0, -1, -1, -1, -1, 0, 1)),
    _periodic(5, (1, 4, 5), (1, 1, 0, 0, 0, 1, 1, 1, 0, 0, -1, 0, 1, 1, 0,
                             -1, 0, 0, 1)),
    _periodic(5, (2, 3, 4), (1, 0, 0, 0, 1, 1, 1, 0, 0, -1, 0, 1, 1, 0, -1,
                             0, 0, 1, 1)),
    _aperiodic(5, (2, 3, 5), (1, 0, 0, -1, -1, 0, 1, 1, 2, 1, -1, -2, -2,
                              -3, -1, 2, 3, 3, 4, 1, -3, -4)),
    _aperiodic(5, (2, 4, 5), (1, 0, -1, -1, -2, -1, 1, 2, 2, 3, 1, -2, -3,
                              -3, -4, -1, 3, 4, 4, 5, 1)),
    _periodic(5, (3, 4, 5), (1, 1, 0, 0, -1, 0, 1, 1, 0, -1, 0, 0, 1, 1, 1,
                             0, 0, 0, 1)),
    _periodic(5, (1, 2, 3, 4), (1, 0, 0, 0, 1, 1)),
    _periodic(5, (1, 2, 3, 5), (1, 0, 0, -1, 0, 1)),
    _periodic(5, (1, 2, 4, 5), (1, 0, -1, 0, 0, 1)),
    _periodic(5, (1, 3, 4, 5), (1, 1, 0, 0, 0, 1)),
    _periodic(5, (2, 3, 4, 5), (1, 0, 0, 0, 0, 1)),
    _periodic(5, (1, 2, 3, 4, 5), (0,), preperiod=(1,)),
)

_BY_SET = {(row.modulus, row.residues): row for row in ROWS}


def sweep_order() -> list[AvoidingSet]:
    """Every (m, V) with 2 <= m <= 5 and V nonempty, in catalog order."""
    sets = []
    for m in range(2, 6):
        for size in range(1, m + 1):
            for v in combinations(range(1, m + 1), size):
                sets.append(AvoidingSet(m, v))
    return sets


def row_for(avoiding_set: AvoidingSet) -> CatalogRow:
    key = (avoiding_set.modulus, avoiding_set.residues)
    if key not in _BY_SET:
        raise KeyError(f"no catalog row for {avoiding_set}")
    return _BY_SET[key]
