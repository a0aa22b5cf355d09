"""Opinion-word and degree-intensifier dictionaries.

Both dictionaries load from TSV (``word<TAB>orientation<TAB>level`` for
opinion words, ``word<TAB>kind<TAB>level`` for intensifiers).  An optional
fourth column carries comma-separated flags: ``core`` marks benchmark
words, ``nn`` permits the word to match when tagged as a noun (e.g.
"problem").  Lines starting with ``#`` are comments.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

from .fuzzy import DegreeLevel, FuzzyTriple, IntensifierLevel


class LexiconError(ValueError):
    pass


@dataclass(frozen=True)
class OpinionEntry:
    word: str
    degree: DegreeLevel
    is_core: bool = False
    nn_override: bool = False

    def triple(self) -> FuzzyTriple:
        return self.degree.triple()


@dataclass(frozen=True)
class IntensifierEntry:
    word: str
    level: IntensifierLevel

    def triple(self) -> FuzzyTriple:
        return self.level.triple()

    @property
    def kind(self) -> str:
        return self.level.kind


@dataclass(frozen=True)
class Lexicon:
    """Immutable pair of dictionaries with disjoint key sets."""

    opinions: dict[str, OpinionEntry] = field(default_factory=dict)
    intensifiers: dict[str, IntensifierEntry] = field(default_factory=dict)

    def __post_init__(self) -> None:
        shared = set(self.opinions) & set(self.intensifiers)
        if shared:
            raise LexiconError(
                f"words listed as both opinion and intensifier: {sorted(shared)}"
            )

    def lookup_opinion(self, word: str) -> Optional[OpinionEntry]:
        return self.opinions.get(word.lower())

    def lookup_intensifier(self, word: str) -> Optional[IntensifierEntry]:
        return self.intensifiers.get(word.lower())

    def multiword_intensifiers(self) -> list[IntensifierEntry]:
        """Multi-token intensifiers, longest first for greedy matching."""
        multi = [e for e in self.intensifiers.values() if " " in e.word]
        return sorted(multi, key=lambda e: -len(e.word.split()))


def _rows(path: Path) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(path.read_text(encoding="utf-8").splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line.split("\t")


def _parse_flags(cols: list[str]) -> set[str]:
    if len(cols) < 4 or not cols[3].strip():
        return set()
    return {f.strip() for f in cols[3].split(",") if f.strip()}


def load_lexicon(opinion_path: str | Path, intensifier_path: str | Path) -> Lexicon:
    """Load and validate both dictionaries; rejects duplicates and bad rows."""
    opinions: dict[str, OpinionEntry] = {}
    for lineno, cols in _rows(Path(opinion_path)):
        if len(cols) < 3:
            raise LexiconError(f"{opinion_path}:{lineno}: expected 3+ columns")
        word = cols[0].strip().lower()
        orientation = cols[1].strip().lower()
        if not word:
            raise LexiconError(f"{opinion_path}:{lineno}: empty word")
        if orientation not in ("positive", "negative"):
            raise LexiconError(
                f"{opinion_path}:{lineno}: unknown orientation {cols[1]!r}"
            )
        try:
            level = int(cols[2])
            degree = DegreeLevel(orientation, level)  # type: ignore[arg-type]
        except ValueError as exc:
            raise LexiconError(f"{opinion_path}:{lineno}: {exc}") from exc
        if word in opinions:
            raise LexiconError(f"{opinion_path}:{lineno}: duplicate word {word!r}")
        flags = _parse_flags(cols)
        opinions[word] = OpinionEntry(
            word, degree, is_core="core" in flags, nn_override="nn" in flags
        )

    intensifiers: dict[str, IntensifierEntry] = {}
    for lineno, cols in _rows(Path(intensifier_path)):
        if len(cols) < 3:
            raise LexiconError(f"{intensifier_path}:{lineno}: expected 3+ columns")
        word = cols[0].strip().lower()
        kind = cols[1].strip().lower()
        if not word:
            raise LexiconError(f"{intensifier_path}:{lineno}: empty word")
        if kind not in ("amplifier", "negator"):
            raise LexiconError(f"{intensifier_path}:{lineno}: unknown kind {cols[1]!r}")
        try:
            level = IntensifierLevel(kind, int(cols[2]))  # type: ignore[arg-type]
        except ValueError as exc:
            raise LexiconError(f"{intensifier_path}:{lineno}: {exc}") from exc
        if word in intensifiers:
            raise LexiconError(f"{intensifier_path}:{lineno}: duplicate word {word!r}")
        intensifiers[word] = IntensifierEntry(word, level)

    return Lexicon(opinions=opinions, intensifiers=intensifiers)


def save_lexicon(lex: Lexicon, opinion_path: str | Path, intensifier_path: str | Path) -> None:
    op_lines = []
    for e in sorted(lex.opinions.values(), key=lambda e: e.word):
        flags = ",".join(
            f for f, on in (("core", e.is_core), ("nn", e.nn_override)) if on
        )
        row = f"{e.word}\t{e.degree.orientation}\t{e.degree.level}"
        op_lines.append(row + (f"\t{flags}" if flags else ""))
    Path(opinion_path).write_text("\n".join(op_lines) + "\n", encoding="utf-8")
    int_lines = [
        f"{e.word}\t{e.level.kind}\t{e.level.level}"
        for e in sorted(lex.intensifiers.values(), key=lambda e: e.word)
    ]
    Path(intensifier_path).write_text("\n".join(int_lines) + "\n", encoding="utf-8")


def _rank_key(word: str, seed: int) -> str:
    return hashlib.sha256(f"{seed}:{word}".encode("utf-8")).hexdigest()


def sample_lexicon(lex: Lexicon, fraction: float, seed: int) -> Lexicon:
    """Deterministic subset of the opinion dictionary.

    Words are ranked by a seed-keyed hash and the smallest floor(n*fraction)
    kept, so subsets are nested across fractions under the same seed.
    Intensifiers are never sampled away.
    """
    if not (0.0 < fraction <= 1.0):
        raise ValueError(f"fraction must be in (0, 1], got {fraction}")
    if fraction == 1.0:
        return lex
    words = sorted(lex.opinions, key=lambda w: _rank_key(w, seed))
    keep = set(words[: int(len(words) * fraction)])
    return Lexicon(
        opinions={w: e for w, e in lex.opinions.items() if w in keep},
        intensifiers=dict(lex.intensifiers),
    )
