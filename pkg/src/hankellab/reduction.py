"""Determinant evaluation by set-shifting reduction rules alone.

Each round rewrites order-n determinants of the pair of series attached to
an avoiding set (the full series and its constant-decremented companion)
as integer combinations of order n-1 determinants over the set shifted by
-2.  The decremented companion only reduces while 1 is absent from the set;
when 1 is present the engine stops and reports the blocked atom instead of
guessing.  Base cases at order 1: the full series contributes 1, the
decremented one contributes 0.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .core import AvoidingSet, render_set_literal, shift


class SeriesKind(str, Enum):
    FULL = "D"
    DECREMENTED = "Dminus1"


@dataclass(frozen=True)
class Atom:
    """One determinant symbol: order n of a series kind over a set."""

    n: int
    avoiding_set: AvoidingSet
    flag: SeriesKind

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError(f"order must be positive, got {self.n}")

    def render(self) -> str:
        return f"({render_set_literal(self.avoiding_set)},{self.flag.value})"

    def sort_key(self) -> tuple:
        return (self.n, self.avoiding_set.modulus, self.avoiding_set.residues,
                self.flag.value)


@dataclass
class TermCombo:
    """Integer linear combination of atoms; zero coefficients never stored."""

    terms: dict[Atom, int] = field(default_factory=dict)

    @classmethod
    def single(cls, atom: Atom, coeff: int = 1) -> "TermCombo":
        return cls({atom: coeff} if coeff else {})

    def add(self, atom: Atom, coeff: int) -> None:
        total = self.terms.get(atom, 0) + coeff
        if total:
            self.terms[atom] = total
        else:
            self.terms.pop(atom, None)

    def sorted_items(self) -> list[tuple[Atom, int]]:
        return sorted(self.terms.items(), key=lambda item: item[0].sort_key())

    def render(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}·{a.render()}" for a, c in self.sorted_items())


@dataclass(frozen=True)
class Obstruction:
    """A decremented-series atom whose set contains 1: no rule applies.

    depth counts the reduction rounds applied before the atom was reached
    (0 when the input itself is blocked).
    """

    atom: Atom
    depth: int = 0


def reduce_step(atom: Atom) -> TermCombo | Obstruction:
    """Rewrite one atom at order n >= 2 in terms of order n-1 atoms.

    Full series: one atom over the set shifted by -2, switching to the
    decremented kind iff 2 is currently forbidden.  Decremented series with
    1 not forbidden: the difference of the two kinds over the shifted set.
    Decremented series with 1 forbidden: structured Obstruction.
    """
    if atom.n < 2:
        raise ValueError("reduce_step needs order >= 2; order 1 is a base case")
    residues = atom.avoiding_set.residues
    shifted = shift(atom.avoiding_set, -2)
    if atom.flag is SeriesKind.FULL:
        kind = SeriesKind.DECREMENTED if 2 in residues else SeriesKind.FULL
        return TermCombo.single(Atom(atom.n - 1, shifted, kind))
    if 1 in residues:
        return Obstruction(atom)
    combo = TermCombo()
    combo.add(Atom(atom.n - 1, shifted, SeriesKind.FULL), -1)
    combo.add(Atom(atom.n - 1, shifted, SeriesKind.DECREMENTED), 1)
    return combo


def reduce_trace(
    n: int, avoiding_set: AvoidingSet, flag: SeriesKind = SeriesKind.FULL
) -> tuple[int | Obstruction, list[tuple[int, TermCombo]]]:
    """Evaluate and keep the per-level combos for auditing.

    Returns (result, trace) where trace lists (level, combo) from the input
    level down to where evaluation stopped.  Zero-coefficient atoms are
    dropped at every merge, before the next round looks for obstructions;
    a blocked atom that cancels never blocks the evaluation.
    """
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    combo = TermCombo.single(Atom(n, avoiding_set, flag))
    trace: list[tuple[int, TermCombo]] = [(n, combo)]
    for level in range(n, 1, -1):
        merged = TermCombo()
        for atom, coeff in combo.sorted_items():
            step = reduce_step(atom)
            if isinstance(step, Obstruction):
                return Obstruction(step.atom, n - atom.n), trace
            for child, child_coeff in step.terms.items():
                merged.add(child, coeff * child_coeff)
        combo = merged
        trace.append((level - 1, combo))
        if not combo.terms:
            break
    value = sum(
        coeff for atom, coeff in combo.terms.items() if atom.flag is SeriesKind.FULL
    )
    return value, trace


def evaluate(
    n: int, avoiding_set: AvoidingSet, flag: SeriesKind = SeriesKind.FULL
) -> int | Obstruction:
    """The determinant value by reduction rules, or the first Obstruction."""
    result, _ = reduce_trace(n, avoiding_set, flag)
    return result
