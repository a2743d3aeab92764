"""Domain types: avoiding sets and eventually periodic integer sequences.

An avoiding set pairs a modulus m >= 2 with a subset of residues drawn from
{1..m}, where the residue m stands for the zero class.  Membership of a
positive integer depends only on its residue.  Eventually periodic sequences
are kept in a canonical minimal form so that equality of values coincides
with equality of the infinite sequences they describe.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

# Exact rational values (always lowest terms, positive denominator).
ExactRational = Fraction


class SizeLimitError(ValueError):
    """An exhaustive helper was asked to run beyond its supported size."""


class InsufficientCoefficientsError(ValueError):
    """A determinant request needs more series coefficients than supplied."""


@dataclass(frozen=True)
class AvoidingSet:
    """A modulus and the residues (in 1..modulus) whose classes are forbidden.

    The residues tuple is sorted and duplicate free; an empty tuple means no
    height is forbidden.
    """

    modulus: int
    residues: tuple[int, ...] = ()

    def __init__(self, modulus: int, residues: Iterable[int] = ()) -> None:
        if modulus < 2:
            raise ValueError(f"modulus must be >= 2, got {modulus}")
        cleaned = tuple(sorted(set(residues)))
        for r in cleaned:
            if not 1 <= r <= modulus:
                raise ValueError(f"residue {r} outside 1..{modulus}")
        object.__setattr__(self, "modulus", modulus)
        object.__setattr__(self, "residues", cleaned)

    def __contains__(self, k: int) -> bool:
        return contains(self, k)

    def __str__(self) -> str:
        return render_set_literal(self)


def _to_residue(value: int, modulus: int) -> int:
    # Map onto {1..modulus}; the modulus itself represents the zero class.
    r = value % modulus
    return modulus if r == 0 else r


def contains(avoiding_set: AvoidingSet, k: int) -> bool:
    """Whether positive height k falls in one of the forbidden classes."""
    if k < 1:
        raise ValueError(f"height must be positive, got {k}")
    return _to_residue(k, avoiding_set.modulus) in avoiding_set.residues


def shift(avoiding_set: AvoidingSet, t: int) -> AvoidingSet:
    """Translate every residue by t, reduced back into {1..modulus}."""
    m = avoiding_set.modulus
    return AvoidingSet(m, (_to_residue(r + t, m) for r in avoiding_set.residues))


@dataclass(frozen=True)
class EventuallyPeriodic:
    """Minimal (preperiod, period) form of an eventually periodic sequence.

    Construction rejects non-minimal input: the period must not be a
    repetition of a shorter block, and the preperiod must not end with the
    same value the period ends with (that tail would belong to the cycle).
    Use normalize() to build one from raw data.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.period:
            raise ValueError("period must be nonempty")
        if _minimal_cycle(self.period) != self.period:
            raise ValueError(f"period {self.period} repeats a shorter block")
        if self.preperiod and self.preperiod[-1] == self.period[-1]:
            raise ValueError("preperiod tail belongs to the cycle; normalize first")

    def expand(self, count: int) -> list[int]:
        """First `count` terms of the described infinite sequence."""
        if count < 0:
            raise ValueError("count must be nonnegative")
        out = list(self.preperiod[:count])
        i = 0
        while len(out) < count:
            out.append(self.period[i % len(self.period)])
            i += 1
        return out

    def render(self) -> str:
        """Star notation, e.g. ``(1,0 | -1,2)*`` or ``(1,0,-1)*``."""
        per = ",".join(str(v) for v in self.period)
        if self.preperiod:
            pre = ",".join(str(v) for v in self.preperiod)
            return f"({pre} | {per})*"
        return f"({per})*"

    @classmethod
    def parse(cls, text: str) -> "EventuallyPeriodic":
        """Inverse of render(); accepts non-minimal input and normalizes it."""
        match = re.fullmatch(r"\s*\(([^|()]*)(?:\|([^|()]*))?\)\*\s*", text)
        if match is None:
            raise ValueError(f"not star notation: {text!r}")
        first, second = match.group(1), match.group(2)
        pre_text, per_text = ("", first) if second is None else (first, second)

        def parse_items(chunk: str) -> list[int]:
            chunk = chunk.strip()
            if not chunk:
                return []
            return [int(item.strip()) for item in chunk.split(",")]

        per = parse_items(per_text)
        if not per:
            raise ValueError(f"empty period in {text!r}")
        return normalize(parse_items(pre_text), per)


def _minimal_cycle(period: Sequence[int]) -> tuple[int, ...]:
    n = len(period)
    for q in range(1, n + 1):
        if n % q == 0 and tuple(period[:q]) * (n // q) == tuple(period):
            return tuple(period[:q])
    raise AssertionError("unreachable: full length always divides")


def normalize(raw_preperiod: Sequence[int], raw_period: Sequence[int]) -> EventuallyPeriodic:
    """Canonical minimal (preperiod, period) for the same infinite sequence.

    The period is shrunk to its primitive block, then the preperiod is
    trimmed from the right: whenever it ends with the cycle's last value,
    the cycle is rotated one step right and the duplicate dropped.
    """
    if not raw_period:
        raise ValueError("period must be nonempty")
    pre = list(raw_preperiod)
    per = list(_minimal_cycle(raw_period))
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = [per[-1]] + per[:-1]
    return EventuallyPeriodic(tuple(pre), tuple(per))


_SET_LITERAL = re.compile(r"(\d+):")


def parse_set_literal(text: str) -> AvoidingSet:
    """Parse ``m:r1,r2,...`` (or ``m:`` for an empty residue set)."""
    match = _SET_LITERAL.match(text)
    if match is None:
        raise ValueError(f"set literal must start with 'm:' (at position 0 of {text!r})")
    modulus = int(match.group(1))
    if modulus < 2:
        raise ValueError(f"modulus must be >= 2 (at position 0 of {text!r})")
    rest = text[match.end():]
    residues = []
    if rest:
        pos = match.end()
        for item in rest.split(","):
            if not item.strip().lstrip("-").isdigit():
                raise ValueError(f"bad residue {item!r} (at position {pos} of {text!r})")
            value = int(item)
            if not 1 <= value <= modulus:
                raise ValueError(
                    f"residue {value} outside 1..{modulus} (at position {pos} of {text!r})"
                )
            residues.append(value)
            pos += len(item) + 1
    return AvoidingSet(modulus, residues)


def render_set_literal(avoiding_set: AvoidingSet) -> str:
    return f"{avoiding_set.modulus}:" + ",".join(str(r) for r in avoiding_set.residues)
