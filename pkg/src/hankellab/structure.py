"""Closed-form sequence generators and period predictors.

For an even modulus with all-even forbidden residues, the Hankel sequence
decomposes into arithmetic-progression sections whose lengths cycle and
whose anchors and differences follow a two-term recurrence; the generators
here emit that sequence directly, with no determinant computed.

A candidate list of section lengths carries a dual sequence of exact
rationals produced by a continued-fraction recurrence.  Lists whose dual
values stay nonzero (admissible) and then hit exactly zero (primitive)
generate the forbidden sets with provably periodic Hankel sequences; the
partial product of the dual values decides between the half-modulus period
and its double.  Shifted unions of such sets, subject to spacing
constraints, stay periodic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod
from typing import Sequence

from .core import AvoidingSet, SizeLimitError

GENERATE_MAX_LEN = 6
GENERATE_MAX_ENTRY = 9


@dataclass(frozen=True)
class SectionPlan:
    """Static description of the sectioned form for one avoiding set.

    anchors and differences cover the first full cycle of sections; later
    sections continue by the same recurrence (next anchor = current
    difference, next difference = current difference - current last term).
    """

    leading_ones: int
    section_lengths: tuple[int, ...]
    anchors: tuple[int, ...]
    differences: tuple[int, ...]


@dataclass(frozen=True)
class ZeroEncountered:
    """A dual value hit zero before the final position (1-based index)."""

    position: int


@dataclass(frozen=True)
class PreconditionViolation:
    """A synthesis request broke a stated constraint."""

    message: str


@dataclass(frozen=True)
class NotApplicable:
    """An extension request whose branch hypothesis fails."""

    reason: str


@dataclass(frozen=True)
class DualSequence:
    """Section lengths with their dual rationals h(t_1..t_j)."""

    ts: tuple[int, ...]
    hs: tuple[Fraction, ...]

    @property
    def last(self) -> Fraction:
        return self.hs[-1]

    def partial_product(self, count: int) -> Fraction:
        """Product of the first `count` dual values (empty product is 1)."""
        return prod(self.hs[:count], start=Fraction(1))


def _require_even_even(avoiding_set: AvoidingSet) -> None:
    if avoiding_set.modulus % 2:
        raise ValueError(f"modulus {avoiding_set.modulus} must be even")
    if not avoiding_set.residues:
        raise ValueError("residue set must be nonempty")
    odd = [r for r in avoiding_set.residues if r % 2]
    if odd:
        raise ValueError(f"residues must all be even, got {odd}")


def section_lengths_of(avoiding_set: AvoidingSet) -> tuple[int, ...]:
    """Cyclic section lengths (t_1..t_l) for an even modulus, even set.

    With residues 2*s_1 < ... < 2*s_l: consecutive gaps s_{j+1} - s_j, and
    the wrap-around length m/2 - s_l + s_1.  One full cycle sums to m/2.
    """
    _require_even_even(avoiding_set)
    half = [r // 2 for r in avoiding_set.residues]
    lengths = [b - a for a, b in zip(half, half[1:])]
    lengths.append(avoiding_set.modulus // 2 - half[-1] + half[0])
    return tuple(lengths)


def section_plan(avoiding_set: AvoidingSet) -> SectionPlan:
    """Leading ones count plus anchors/differences of the first cycle."""
    lengths = section_lengths_of(avoiding_set)
    anchors = []
    differences = []
    anchor, difference = 0, -1
    for t in lengths:
        anchors.append(anchor)
        differences.append(difference)
        last = anchor + (t - 1) * difference
        anchor, difference = difference, difference - last
    return SectionPlan(
        leading_ones=avoiding_set.residues[0] // 2,
        section_lengths=lengths,
        anchors=tuple(anchors),
        differences=tuple(differences),
    )


def progression_sequence(avoiding_set: AvoidingSet, N: int) -> list[int]:
    """First N Hankel values from the sectioned closed form alone."""
    if N < 1:
        raise ValueError(f"need at least one term, got N={N}")
    lengths = section_lengths_of(avoiding_set)
    out = [1] * min(avoiding_set.residues[0] // 2, N)
    anchor, difference = 0, -1
    j = 0
    while len(out) < N:
        t = lengths[j % len(lengths)]
        out.extend(anchor + k * difference for k in range(t))
        last = anchor + (t - 1) * difference
        anchor, difference = difference, difference - last
        j += 1
    return out[:N]


def singleton_sequence(modulus: int, s: int, N: int) -> list[int]:
    """The single-residue specialization: every section has length m/2.

    Written out on its own (not delegated) so the general generator has an
    independent cross-check on one-section-cycle inputs.
    """
    if modulus < 2 or modulus % 2:
        raise ValueError(f"modulus must be even and >= 2, got {modulus}")
    p = modulus // 2
    if not 1 <= s <= p:
        raise ValueError(f"s must lie in 1..{p}, got {s}")
    if N < 1:
        raise ValueError(f"need at least one term, got N={N}")
    out = [1] * min(s, N)
    anchor, difference = 0, -1
    while len(out) < N:
        out.extend(anchor + k * difference for k in range(p))
        last = anchor + (p - 1) * difference
        anchor, difference = difference, difference - last
    return out[:N]


def dual_sequence(ts: Sequence[int]) -> DualSequence | ZeroEncountered:
    """Dual rationals h(t_1), h(t_1,t_2), ... computed exactly.

    h(t_1) = 2 - t_1 and each later value is 2 - t_j - 1/previous.  A zero
    anywhere before the last position makes the recurrence undefined one
    step later; that is reported, not raised.
    """
    entries = tuple(ts)
    if not entries:
        raise ValueError("need at least one section length")
    if any(t < 1 for t in entries):
        raise ValueError(f"section lengths must be positive, got {entries}")
    hs: list[Fraction] = []
    for j, t in enumerate(entries):
        if j == 0:
            value = Fraction(2 - t)
        else:
            if hs[-1] == 0:
                return ZeroEncountered(position=j)
            value = 2 - t - 1 / hs[-1]
        hs.append(value)
    return DualSequence(entries, tuple(hs))


def is_primitive(ts: Sequence[int]) -> bool:
    """All dual values nonzero except the final one, which is exactly zero."""
    dual = dual_sequence(ts)
    if isinstance(dual, ZeroEncountered):
        return False
    return dual.last == 0


def feasible_set(ts: Sequence[int], s: int) -> tuple[int, ...]:
    """Forbidden residues 2s, 2(s+t_1), ..., built from a primitive list."""
    if s < 1:
        raise ValueError(f"s must be positive, got {s}")
    entries = tuple(ts)
    if not is_primitive(entries):
        raise ValueError(f"{entries} is not primitive")
    values = [2 * s]
    total = s
    for t in entries:
        total += t
        values.append(2 * total)
    return tuple(values)


def predict_period(ts: Sequence[int], m: int) -> int:
    """Period of the Hankel sequence for a feasible set at modulus m.

    The base period p is m/2 for even m and m for odd m; the partial
    product of the dual values before the final zero selects p when it is
    -1 and 2p when it is +1 (an empty product counts as +1).
    """
    entries = tuple(ts)
    if not is_primitive(entries):
        raise ValueError(f"{entries} is not primitive")
    smallest_max = 2 * (1 + sum(entries))
    if m < smallest_max:
        raise ValueError(
            f"modulus {m} is below {smallest_max}, the smallest feasible maximum"
        )
    dual = dual_sequence(entries)
    assert isinstance(dual, DualSequence)
    partial = dual.partial_product(len(entries) - 1)
    p = m // 2 if m % 2 == 0 else m
    if partial == -1:
        return p
    if partial == 1:
        return 2 * p
    raise AssertionError(
        f"dual partial product {partial} should be +-1 for a primitive list"
    )


def synthesize(
    parts: Sequence[tuple[Sequence[int], int]],
) -> tuple[int, ...] | PreconditionViolation:
    """Union of shifted feasible sets, subject to the spacing constraints.

    Every block is built from a primitive list with smallest element 2 and
    then shifted by its k; the first shift may be as low as -1, and each
    later shift must be at least the previous block's maximum minus 1.
    """
    if not parts:
        return PreconditionViolation("at least one (sequence, shift) part required")
    union: set[int] = set()
    prev_max: int | None = None
    for index, (ts, k) in enumerate(parts, start=1):
        entries = tuple(ts)
        if not is_primitive(entries):
            return PreconditionViolation(f"part {index}: {entries} is not primitive")
        block = [v + k for v in feasible_set(entries, 1)]
        if prev_max is None:
            if k < -1:
                return PreconditionViolation(f"part 1: shift {k} is below -1")
        elif k < prev_max - 1:
            return PreconditionViolation(
                f"part {index}: shift {k} violates spacing,"
                f" needs at least {prev_max - 1} (previous block ends at {prev_max})"
            )
        union.update(block)
        prev_max = max(block)
    return tuple(sorted(union))


EXTEND_TARGETS = {"primitive": 0, "minus_one": -1, "plus_one": 1}


def extend_admissible(ts: Sequence[int], target: str) -> int | NotApplicable:
    """Next section length sending the dual sequence to 0, -1, or +1.

    Requires the dual product to have absolute value 1 plus a branch
    hypothesis on the final dual value T: target 'primitive' (next value 0)
    needs T = 1 or T < 0; 'minus_one' needs T = 1/2 or T < 0; 'plus_one'
    needs T < 0.  Under those, 2 - target - 1/T is a positive integer.
    """
    if target not in EXTEND_TARGETS:
        raise ValueError(f"target must be one of {sorted(EXTEND_TARGETS)}, got {target!r}")
    goal = EXTEND_TARGETS[target]
    dual = dual_sequence(ts)
    if isinstance(dual, ZeroEncountered):
        return NotApplicable(
            f"not admissible: dual value {dual.position} is already zero"
        )
    final = dual.last
    if final == 0:
        return NotApplicable("final dual value is zero; no further section extends it")
    product = dual.partial_product(len(dual.hs))
    if abs(product) != 1:
        return NotApplicable(f"dual product {product} does not have absolute value 1")
    if target == "primitive":
        ok = final == 1 or final < 0
    elif target == "minus_one":
        ok = final == Fraction(1, 2) or final < 0
    else:
        ok = final < 0
    if not ok:
        return NotApplicable(
            f"final dual value {final} fails the {target} branch hypothesis"
        )
    step = 2 - goal - 1 / final
    if step.denominator != 1 or step < 1:
        raise AssertionError(f"extension {step} should be a positive integer")
    return int(step)


def generate_primitive(max_len: int, max_t: int) -> list[tuple[int, ...]]:
    """Every primitive list with length <= max_len and entries <= max_t."""
    if max_len < 1 or max_t < 1:
        raise ValueError("bounds must be positive")
    if max_len > GENERATE_MAX_LEN or max_t > GENERATE_MAX_ENTRY:
        raise SizeLimitError(
            f"search supports length <= {GENERATE_MAX_LEN}"
            f" and entries <= {GENERATE_MAX_ENTRY}"
        )
    found: list[tuple[int, ...]] = []

    def walk(prefix: tuple[int, ...], last: Fraction | None) -> None:
        for t in range(1, max_t + 1):
            value = Fraction(2 - t) if last is None else 2 - t - 1 / last
            candidate = prefix + (t,)
            if value == 0:
                found.append(candidate)
            elif len(candidate) < max_len:
                walk(candidate, value)

    walk((), None)
    return sorted(found)
