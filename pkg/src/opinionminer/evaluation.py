"""Precision/recall/F harness and the lexicon-size ablation runner.

Gold labels travel in the CoNLL-U MISC column as ``Gold=F|O|DO|N`` so
predictions and gold stay aligned by construction.  Classification
metrics are binary with positive as the target class; neutral items are
excluded before scoring.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .engine import extract_review
from .lexicon import Lexicon, sample_lexicon
from .review_model import ParsedReview
from .scoring import NEUTRAL, POSITIVE

GOLD_LABELS = ("F", "O", "DO", "N")

# gold label carried by each prediction target
_TARGET_LABEL = {"feature": "F", "opinion": "O", "intensifier": "DO"}


@dataclass(frozen=True)
class PRF:
    precision: float
    recall: float
    f_score: float

    @staticmethod
    def from_counts(tp: int, fp: int, fn: int) -> "PRF":
        p = tp / (tp + fp) if tp + fp else 0.0
        r = tp / (tp + fn) if tp + fn else 0.0
        f = 2 * p * r / (p + r) if p + r else 0.0
        return PRF(p, r, f)


def score_extraction(
    predicted: Sequence[set[int]],
    gold: Sequence[Sequence[str]],
    target: str,
) -> PRF:
    """Token-level exact match of predicted index sets against gold labels.

    ``predicted`` holds one token-index set per sentence; ``gold`` the
    aligned per-token label sequences.
    """
    if target not in _TARGET_LABEL:
        raise ValueError(f"unknown target {target!r}")
    if len(predicted) != len(gold):
        raise ValueError(
            f"prediction/gold sentence counts differ: {len(predicted)} vs {len(gold)}"
        )
    want = _TARGET_LABEL[target]
    tp = fp = fn = 0
    for i, (pred, labels) in enumerate(zip(predicted, gold)):
        if pred and max(pred) > len(labels):
            raise ValueError(f"sentence {i}: predicted index beyond gold length")
        gold_idx = {j + 1 for j, lab in enumerate(labels) if lab == want}
        tp += len(pred & gold_idx)
        fp += len(pred - gold_idx)
        fn += len(gold_idx - pred)
    return PRF.from_counts(tp, fp, fn)


def score_classification(
    predictions: Sequence[str], golds: Sequence[str]
) -> PRF:
    """Binary P/R/F with positive as target; neutral pairs are dropped."""
    if len(predictions) != len(golds):
        raise ValueError("prediction/gold counts differ")
    tp = fp = fn = 0
    for p, g in zip(predictions, golds):
        if p == NEUTRAL or g == NEUTRAL:
            continue
        if p == POSITIVE and g == POSITIVE:
            tp += 1
        elif p == POSITIVE:
            fp += 1
        elif g == POSITIVE:
            fn += 1
    return PRF.from_counts(tp, fp, fn)


@dataclass(frozen=True)
class AblationRow:
    fraction: float
    lexicon_size: int
    avg_initial_opinions: float
    avg_new_opinions: float
    prf: PRF


def _review_opinion_counts(review: ParsedReview, lex: Lexicon) -> tuple[int, int]:
    """(dictionary-matched opinions, rule-discovered opinions) for one review."""
    ex = extract_review(review, lex)
    initial = new = 0
    for si, sent_ex in enumerate(ex.sentences):
        s = review.sentences[si]
        for ti in sent_ex.opinions:
            if lex.lookup_opinion(s.surface_lower(ti)) is not None:
                initial += 1
            else:
                new += 1
    return initial, new


def run_ablation(
    corpus: Sequence[ParsedReview],
    lex: Lexicon,
    fractions: Iterable[float],
    seed: int,
) -> list[AblationRow]:
    """Rerun extraction under nested lexicon subsets of increasing size."""
    if not corpus:
        raise ValueError("ablation needs a non-empty corpus")
    rows = []
    for fraction in sorted(fractions):
        sub = sample_lexicon(lex, fraction, seed)
        initials, news = [], []
        pred: list[set[int]] = []
        gold: list[list[str]] = []
        for review in corpus:
            i, n = _review_opinion_counts(review, sub)
            initials.append(i)
            news.append(n)
            ex = extract_review(review, sub)
            for si, s in enumerate(review.sentences):
                if s.gold is None:
                    continue
                pred.append(set(ex.sentences[si].features))
                gold.append(list(s.gold))
        prf = score_extraction(pred, gold, "feature") if gold else PRF(0.0, 0.0, 0.0)
        rows.append(
            AblationRow(
                fraction=fraction,
                lexicon_size=len(sub.opinions),
                avg_initial_opinions=sum(initials) / len(corpus),
                avg_new_opinions=sum(news) / len(corpus),
                prf=prf,
            )
        )
    return rows
