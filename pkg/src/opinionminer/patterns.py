"""POS-sequence patterns for candidate opinion phrases.

Eight patterns over consecutive tokens, at most three content words per
unit (pattern 2.3 spans four tokens because the determiner is absorbed).
Tag classes: JJ covers JJ/JJR/JJS, RB covers RB/RBR/RBS, VB covers all
verb inflections, NN covers NN/NNS.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .review_model import Sentence


class PatternId(Enum):
    P1_1 = "1.1"
    P1_2 = "1.2"
    P1_3 = "1.3"
    P2_1 = "2.1"
    P2_2 = "2.2"
    P2_3 = "2.3"
    P3_1 = "3.1"
    P3_2 = "3.2"


def _cls(pos: str) -> str:
    if pos in ("JJ", "JJR", "JJS"):
        return "JJ"
    if pos in ("RB", "RBR", "RBS"):
        return "RB"
    if pos.startswith("VB"):
        return "VB"
    if pos in ("NN", "NNS"):
        return "NN"
    if pos in ("DT", "DET", "PDT"):
        return "DET"
    return pos


# Each template is a tuple of slot alternatives; a slot is a set of classes.
# Listed longest-first so the first match at a start index wins.
_TEMPLATES: list[tuple[PatternId, tuple[frozenset[str], ...]]] = [
    (PatternId.P2_3, (frozenset({"RB"}), frozenset({"VB"}), frozenset({"DET"}), frozenset({"NN"}))),
    (PatternId.P1_1, (frozenset({"JJ"}), frozenset({"NN"}), frozenset({"NN"}))),
    (PatternId.P1_2, (frozenset({"JJ"}), frozenset({"NN"}), frozenset({"RB"}))),
    (PatternId.P1_3, (frozenset({"JJ"}), frozenset({"RB"}), frozenset({"JJ"}))),
    (PatternId.P2_1, (frozenset({"RB"}), frozenset({"JJ", "RB"}), frozenset({"NN"}))),
    (PatternId.P2_2, (frozenset({"RB"}), frozenset({"JJ", "RB"}), frozenset({"JJ"}))),
    (PatternId.P3_1, (frozenset({"VB"}), frozenset({"RB"}), frozenset({"JJ"}))),
    # two-word forms
    (PatternId.P1_1, (frozenset({"JJ"}), frozenset({"NN"}))),
    (PatternId.P2_1, (frozenset({"RB"}), frozenset({"JJ", "RB"}))),
    (PatternId.P3_2, (frozenset({"VB"}), frozenset({"JJ"}))),
]


@dataclass(frozen=True)
class PhraseMatch:
    pattern: PatternId
    start: int  # 1-based token index
    end: int  # inclusive

    @property
    def span(self) -> tuple[int, int]:
        return (self.start, self.end)


def match_patterns(s: Sentence) -> list[PhraseMatch]:
    """All maximal non-overlapping matches, left to right, longest first."""
    classes = [_cls(t.pos) for t in s.tokens]
    n = len(classes)
    matches: list[PhraseMatch] = []
    i = 0
    while i < n:
        hit = None
        for pid, template in _TEMPLATES:
            k = len(template)
            if i + k > n:
                continue
            if all(classes[i + j] in template[j] for j in range(k)):
                hit = PhraseMatch(pid, i + 1, i + k)
                break
        if hit is not None:
            matches.append(hit)
            i = hit.end
        else:
            i += 1
    return matches
