"""Triangular fuzzy polarity algebra.

Every opinion intensity in the pipeline is a triangular fuzzy number
(L, M, U) on [-1, 1].  The operations here implement the degree scales
for opinion words and intensifiers, the sign-dependent combination of an
intensifier with an opinion word (case 1), the stacked-intensifier
combination (case 2), centroid defuzzification, and the
frequency-weighted review aggregate.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Literal, Sequence


def _clamp(x: float) -> float:
    return max(-1.0, min(1.0, x))


@dataclass(frozen=True, order=True)
class FuzzyTriple:
    """A triangular fuzzy number with L <= M <= U, components in [-1, 1]."""

    L: float
    M: float
    U: float

    def __post_init__(self) -> None:
        if not (self.L <= self.M <= self.U):
            raise ValueError(f"fuzzy triple must be ascending, got {self!r}")

    @staticmethod
    def of(a: float, b: float, c: float) -> "FuzzyTriple":
        """Build a triple from unordered, possibly out-of-range components."""
        lo, mid, hi = sorted((a, b, c))
        return FuzzyTriple(_clamp(lo), _clamp(mid), _clamp(hi))

    @property
    def components(self) -> tuple[float, float, float]:
        return (self.L, self.M, self.U)

    def is_positive(self) -> bool:
        return self.M > 0 or (self.M == 0 and self.U > -self.L)

    def __repr__(self) -> str:
        return f"({self.L:g},{self.M:g},{self.U:g})"


ZERO = FuzzyTriple(0.0, 0.0, 0.0)

Orientation = Literal["positive", "negative"]
IntensifierKind = Literal["amplifier", "negator"]

# Five-level scale for opinion words.  Positive level k and amplifier level k
# share the same row; negators have only three levels.
_POSITIVE_ROWS = {
    1: (0.0, 0.1, 0.3),
    2: (0.1, 0.3, 0.5),
    3: (0.3, 0.5, 0.7),
    4: (0.5, 0.7, 0.9),
    5: (0.7, 0.9, 1.0),
}
_NEGATIVE_ROWS = {
    1: (-0.3, -0.1, 0.0),
    2: (-0.5, -0.3, -0.1),
    3: (-0.7, -0.5, -0.3),
    4: (-0.9, -0.7, -0.5),
    5: (-1.0, -0.9, -0.7),
}
_NEGATOR_ROWS = {
    1: (-0.5, -0.3, 0.0),
    2: (-0.7, -0.5, -0.3),
    3: (-0.9, -0.7, -0.5),
}


@dataclass(frozen=True)
class DegreeLevel:
    """Scale position of an opinion word: orientation plus level 1..5."""

    orientation: Orientation
    level: int

    def __post_init__(self) -> None:
        if self.level not in range(1, 6):
            raise ValueError(f"opinion degree level must be 1..5, got {self.level}")

    def triple(self) -> FuzzyTriple:
        rows = _POSITIVE_ROWS if self.orientation == "positive" else _NEGATIVE_ROWS
        return FuzzyTriple(*rows[self.level])


@dataclass(frozen=True)
class IntensifierLevel:
    """Scale position of a degree intensifier (amplifier 1..5, negator 1..3)."""

    kind: IntensifierKind
    level: int

    def __post_init__(self) -> None:
        top = 5 if self.kind == "amplifier" else 3
        if self.level not in range(1, top + 1):
            raise ValueError(f"{self.kind} level must be 1..{top}, got {self.level}")

    def triple(self) -> FuzzyTriple:
        rows = _POSITIVE_ROWS if self.kind == "amplifier" else _NEGATOR_ROWS
        return FuzzyTriple(*rows[self.level])


def fuzzy_add(a: FuzzyTriple, b: FuzzyTriple) -> FuzzyTriple:
    """Component-wise sum, re-sorted and clamped to [-1, 1]."""
    return FuzzyTriple.of(a.L + b.L, a.M + b.M, a.U + b.U)


def fuzzy_mul(a: FuzzyTriple, b: FuzzyTriple) -> FuzzyTriple:
    """Component-wise product at matching positions, re-sorted and clamped.

    Two all-negative triples therefore yield an all-positive triple
    ("not bad" lands in the positive range).
    """
    return FuzzyTriple.of(a.L * b.L, a.M * b.M, a.U * b.U)


def fuzzy_negate(a: FuzzyTriple) -> FuzzyTriple:
    """Mirror a triple about zero: (L, M, U) -> (-U, -M, -L)."""
    return FuzzyTriple(-a.U, -a.M, -a.L)


def fuzzy_square(a: FuzzyTriple) -> FuzzyTriple:
    """Component-wise square, re-sorted ascending."""
    return FuzzyTriple.of(a.L * a.L, a.M * a.M, a.U * a.U)


def combine_case1(intensifier: FuzzyTriple, opinion: FuzzyTriple) -> FuzzyTriple:
    """Combine a degree intensifier with an opinion word's triple.

    Branches on the signs of the two operands:
      amplifier (+) with positive opinion  -> add
      negator (-) with positive opinion    -> add ("not good" straddles zero)
      amplifier (+) with negative opinion  -> negate the amplifier, then add
      negator (-) with negative opinion    -> multiply ("not bad" flips sign)
    A zero intensifier is the identity.
    """
    if intensifier == ZERO:
        return opinion
    int_pos = intensifier.is_positive()
    op_pos = opinion.is_positive()
    if int_pos and op_pos:
        return fuzzy_add(intensifier, opinion)
    if not int_pos and op_pos:
        return fuzzy_add(intensifier, opinion)
    if int_pos and not op_pos:
        return fuzzy_add(fuzzy_negate(intensifier), opinion)
    return fuzzy_mul(intensifier, opinion)


def combine_case2(
    outer: FuzzyTriple,
    kind: IntensifierKind,
    inner_result: FuzzyTriple,
    opinion_positive: bool,
) -> FuzzyTriple:
    """Apply an outer intensifier on top of an already-combined phrase.

    ``inner_result`` is the case-1 combination (e.g. "very good") and
    ``opinion_positive`` is the sign of the base opinion word, which selects
    the branch regardless of where the combined value landed.
    """
    if kind == "negator":
        sq = fuzzy_square(fuzzy_negate(outer))
        delta = fuzzy_negate(sq) if opinion_positive else sq
    else:
        sq = fuzzy_square(outer)
        delta = sq if opinion_positive else fuzzy_negate(sq)
    return fuzzy_add(inner_result, delta)


def defuzzify(a: FuzzyTriple) -> float:
    """Centroid of a triangular fuzzy number: (L + M + U) / 3."""
    return (a.L + a.M + a.U) / 3.0


@dataclass(frozen=True)
class ReviewWeight:
    """Aggregate polarity of one review: a fuzzy triple plus its centroid."""

    fuzzy: FuzzyTriple
    scalar: float


def review_weight(items: Sequence[tuple[FuzzyTriple, int]]) -> ReviewWeight:
    """Frequency-weighted fuzzy mean over (opinion triple, feature count) pairs.

    RW = sum_i (triple_i * freq_i) / sum_i freq_i, component-wise, with the
    result re-sorted and clamped.  Raises on an empty list.
    """
    if not items:
        raise ValueError("no opinionated features in review")
    total = 0.0
    acc = [0.0, 0.0, 0.0]
    for triple, freq in items:
        if freq < 1:
            raise ValueError(f"feature frequency must be >= 1, got {freq}")
        acc[0] += triple.L * freq
        acc[1] += triple.M * freq
        acc[2] += triple.U * freq
        total += freq
    fz = FuzzyTriple.of(acc[0] / total, acc[1] / total, acc[2] / total)
    return ReviewWeight(fuzzy=fz, scalar=defuzzify(fz))
