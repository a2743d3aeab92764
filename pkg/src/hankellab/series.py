"""Coefficients of the peak-avoiding Dyck path generating function.

Three independent routes to the same numbers:

* a dynamic program over lattice path states (the production engine),
* unrolling the one-level first-return recursion as a continued fraction
  (cross-check engine),
* exhaustive path enumeration (small-size ground truth oracle).

All arithmetic is exact over Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AvoidingSet, SizeLimitError, contains

BRUTEFORCE_MAX_SIZE = 14


@dataclass(frozen=True)
class CoeffSeries:
    """A finite coefficient prefix (f_0..f_N) with its provenance.

    ``decremented`` marks the companion series with the constant term
    lowered by one; all later coefficients are shared.
    """

    coeffs: tuple[int, ...]
    avoiding_set: AvoidingSet
    decremented: bool = False

    def __post_init__(self) -> None:
        if not self.coeffs:
            raise ValueError("a series needs at least the constant term")
        expected = 0 if self.decremented else 1
        if self.coeffs[0] != expected:
            raise ValueError(f"constant term must be {expected}, got {self.coeffs[0]}")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def to_json_values(self) -> list[str]:
        # Arbitrary precision does not survive fixed-width consumers.
        return [str(c) for c in self.coeffs]


def dyck_count_dp(avoiding_set: AvoidingSet, N: int) -> CoeffSeries:
    """Count size-n Dyck paths with no peak at a forbidden height, n = 0..N.

    One pass over 2N steps of nonnegative lattice paths, with a state per
    (height, last step direction).  A peak is an up step at height h followed
    by a down step, forbidden iff h is in the avoiding set.  The count of
    complete size-n paths is read off at even step 2n in the
    (height 0, last step down) state.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    forbidden = [False] * (N + 2)
    for h in range(1, N + 1):
        forbidden[h] = contains(avoiding_set, h)

    counts = [1]
    # up[h]: paths at height h whose last step went up; dn[h]: went down.
    up = [0] * (N + 2)
    dn = [0] * (N + 2)
    dn[0] = 1
    for step in range(1, 2 * N + 1):
        new_up = [0] * (N + 2)
        new_dn = [0] * (N + 2)
        top = min(step, N)
        for h in range(top + 1):
            arriving_up = up[h - 1] + dn[h - 1] if h > 0 else 0
            new_up[h] = arriving_up
            if h <= N - 1:
                # Descending from h+1: an up state there was a peak at h+1.
                peak_source = 0 if forbidden[h + 1] else up[h + 1]
                new_dn[h] = peak_source + dn[h + 1]
        up, dn = new_up, new_dn
        if step % 2 == 0:
            counts.append(dn[0])
    return CoeffSeries(tuple(counts), avoiding_set)


# Peak height profiles are shared by every avoiding set: enumerating the
# paths of one size once is enough to answer all (modulus, residues) queries.
_PEAK_PROFILE_CACHE: dict[int, dict[int, int]] = {}


def _peak_profiles(n: int) -> dict[int, int]:
    """Map bitmask of attained peak heights -> number of size-n Dyck paths."""
    cached = _PEAK_PROFILE_CACHE.get(n)
    if cached is not None:
        return cached
    profiles: dict[int, int] = {}
    # Depth-first over prefixes: (position, height, mask, last step was up).
    stack = [(0, 0, 0, False)]
    while stack:
        pos, height, mask, was_up = stack.pop()
        if pos == 2 * n:
            profiles[mask] = profiles.get(mask, 0) + 1
            continue
        remaining = 2 * n - pos
        if height < remaining:
            stack.append((pos + 1, height + 1, mask, True))
        if height > 0:
            down_mask = mask | (1 << (height - 1)) if was_up else mask
            stack.append((pos + 1, height - 1, down_mask, False))
    _PEAK_PROFILE_CACHE[n] = profiles
    return profiles


def dyck_count_bruteforce(avoiding_set: AvoidingSet, n: int) -> int:
    """Exact count by explicit enumeration of every size-n Dyck path."""
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    if n > BRUTEFORCE_MAX_SIZE:
        raise SizeLimitError(f"enumeration supports n <= {BRUTEFORCE_MAX_SIZE}, got {n}")
    bad_mask = 0
    for h in range(1, n + 1):
        if contains(avoiding_set, h):
            bad_mask |= 1 << (h - 1)
    return sum(
        count for mask, count in _peak_profiles(n).items() if not mask & bad_mask
    )


def _invert_unit_series(denom: list[int], N: int) -> list[int]:
    """Coefficients of 1/denom up to x^N; requires denom[0] == 1.

    Division-free: with unit constant term the reciprocal's coefficients
    satisfy b_k = -(a_1 b_{k-1} + ... + a_k b_0).
    """
    assert denom[0] == 1
    out = [0] * (N + 1)
    out[0] = 1
    top = len(denom) - 1
    for k in range(1, N + 1):
        acc = 0
        for i in range(1, min(k, top) + 1):
            acc += denom[i] * out[k - i]
        out[k] = -acc
    return out


def series_cf(avoiding_set: AvoidingSet, N: int) -> CoeffSeries:
    """Coefficients via the unrolled first-return recursion.

    Level j of the continued fraction contributes denominator
    1 + [j is forbidden]*x - x*(next level).  Each level carries a factor x,
    so replacing the tail below depth N+1 by the constant series 1 leaves
    every coefficient up to x^N exact.
    """
    if N < 0:
        raise ValueError(f"N must be nonnegative, got {N}")
    tail = [1] + [0] * N
    for level in range(N + 1, 0, -1):
        denom = [0] * (N + 1)
        denom[0] = 1
        if N >= 1:
            denom[1] = (1 if contains(avoiding_set, level) else 0) - tail[0]
            for i in range(2, N + 1):
                denom[i] = -tail[i - 1]
        tail = _invert_unit_series(denom, N)
    return CoeffSeries(tuple(tail), avoiding_set)


def decrement_constant(series: CoeffSeries) -> CoeffSeries:
    """The companion series with constant term 0 instead of 1."""
    if series.decremented:
        raise ValueError("series constant term is already decremented")
    return CoeffSeries(
        (0,) + series.coeffs[1:], series.avoiding_set, decremented=True
    )
