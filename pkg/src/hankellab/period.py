"""Empirical period detection, claim verification, and the all-but-one check.

A finite prefix can only ever witness a period, not prove one, so every
positive detection is labeled conjectured.  When the avoiding set belongs
to one of the families with a proven periodicity theorem, the report names
that covering structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import AvoidingSet, EventuallyPeriodic, normalize
from .hankel import hankel_sequence
from .series import series_cf
from .structure import is_primitive

STATUS_PERIODIC = "periodic_conjectured"
STATUS_NONE = "no_period_found"

COVER_PROGRESSION = "even_residue_progression"
COVER_FEASIBLE = "primitive_feasible_set"
COVER_SYNTHESIS = "shifted_union_synthesis"


@dataclass(frozen=True)
class PeriodReport:
    status: str
    witness: EventuallyPeriodic | None
    terms_examined: int
    repeats_observed: int
    covering: str | None = None

    def to_json_dict(self) -> dict:
        """JSON payload; sequence entries as strings so nothing overflows."""
        payload: dict = {
            "status": self.status,
            "preperiod": [],
            "period": [],
            "period_length": 0,
            "terms_examined": self.terms_examined,
        }
        if self.witness is not None:
            payload["preperiod"] = [str(v) for v in self.witness.preperiod]
            payload["period"] = [str(v) for v in self.witness.period]
            payload["period_length"] = len(self.witness.period)
        if self.covering is not None:
            payload["covering_theorem"] = self.covering
        return payload


def detect_period(prefix: Sequence[int], min_repeats: int = 3) -> PeriodReport:
    """Smallest (preperiod, period) consistent with the whole prefix.

    Candidates are scanned with the period length ascending; a candidate
    (r, p) needs r + min_repeats*p terms and must agree with every later
    term.  Preperiods longer than a third of the prefix are not trusted.
    """
    values = list(prefix)
    n = len(values)
    if n < 4:
        raise ValueError(f"need at least 4 terms, got {n}")
    if min_repeats < 2:
        raise ValueError(f"min_repeats must be at least 2, got {min_repeats}")
    max_r = n // 3
    for p in range(1, (n // min_repeats) + 1):
        for r in range(0, min(max_r, n - min_repeats * p) + 1):
            if all(values[i] == values[i - p] for i in range(r + p, n)):
                witness = normalize(values[:r], values[r : r + p])
                repeats = (n - len(witness.preperiod)) // len(witness.period)
                return PeriodReport(STATUS_PERIODIC, witness, n, repeats)
    return PeriodReport(STATUS_NONE, None, n, 0)


def hankel_prefix(avoiding_set: AvoidingSet, N: int) -> list[int]:
    """First N Hankel determinants computed from the generating series."""
    series = series_cf(avoiding_set, max(2 * N - 2, 0))
    return hankel_sequence(series, N)


def verify_claim(
    avoiding_set: AvoidingSet, claim: EventuallyPeriodic, N: int
) -> bool:
    """Do the first N computed Hankel values equal the claimed expansion?"""
    needed = 2 * (len(claim.preperiod) + len(claim.period))
    if N < needed:
        raise ValueError(f"N={N} is too short; need at least {needed} terms")
    return hankel_prefix(avoiding_set, N) == claim.expand(N)


def conjecture_pattern(m: int) -> tuple[int, ...]:
    """Claimed cycle for the avoid-everything-but-m set {1..m-1} mod m."""
    if m < 3:
        raise ValueError(f"modulus must be at least 3, got {m}")
    if m % 4 in (1, 2):
        return (1, *([0] * (m - 2)), 1, 1)
    return (1, *([0] * (m - 2)), -1, -1, -1, *([0] * (m - 2)), 1, 1)


def conjecture_check(m: int, N: int) -> bool:
    """Test the claimed cycle for {1..m-1} against N computed terms."""
    if N < 2 * (2 * m + 2):
        raise ValueError(f"N={N} is too short; need at least {2 * (2 * m + 2)}")
    avoiding_set = AvoidingSet(m, range(1, m))
    pattern = conjecture_pattern(m)
    values = hankel_prefix(avoiding_set, N)
    return all(v == pattern[i % len(pattern)] for i, v in enumerate(values))


def _as_feasible(avoiding_set: AvoidingSet) -> bool:
    """Is V exactly a feasible set 2s, 2(s+t_1), ... of a primitive list?"""
    v = avoiding_set.residues
    if len(v) < 2 or any(r % 2 for r in v):
        return False
    gaps = [b - a for a, b in zip(v, v[1:])]
    if any(g % 2 for g in gaps):
        return False
    ts = tuple(g // 2 for g in gaps)
    if not is_primitive(ts):
        return False
    s = v[0] // 2
    if avoiding_set.modulus % 2 == 0:
        return True
    return s == 1


def _as_shifted_union(avoiding_set: AvoidingSet) -> bool:
    """Can V be split into consecutive blocks, each a shifted feasible set?

    Blocks never interleave (the spacing rule forces each block to start
    beyond the previous maximum), so a backtracking split over block sizes
    is exhaustive.
    """
    v = avoiding_set.residues

    def splits(start: int) -> bool:
        if start == len(v):
            return True
        for end in range(start + 2, len(v) + 1):
            block = v[start:end]
            gaps = [b - a for a, b in zip(block, block[1:])]
            if any(g % 2 for g in gaps):
                continue
            if is_primitive(tuple(g // 2 for g in gaps)) and splits(end):
                return True
        return False

    return bool(v) and splits(0)


def covering_structure(avoiding_set: AvoidingSet) -> str | None:
    """Name of the proven-periodicity family containing this set, if any."""
    v = avoiding_set.residues
    if not v:
        return None
    if avoiding_set.modulus % 2 == 0 and all(r % 2 == 0 for r in v):
        return COVER_PROGRESSION
    if _as_feasible(avoiding_set):
        return COVER_FEASIBLE
    if _as_shifted_union(avoiding_set):
        return COVER_SYNTHESIS
    return None
