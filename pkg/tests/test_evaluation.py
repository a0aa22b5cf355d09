"""Precision/recall/F metrics and the lexicon-size ablation."""

import random

import pytest

from opinionminer.evaluation import (
    PRF,
    run_ablation,
    score_classification,
    score_extraction,
)
from opinionminer.lexicon import sample_lexicon
from opinionminer.review_model import read_corpus
from opinionminer.scoring import NEGATIVE, NEUTRAL, POSITIVE

from conftest import FIXTURES


def test_prf_hand_counts():
    # 3 predicted, 2 correct, 4 gold
    prf = PRF.from_counts(tp=2, fp=1, fn=2)
    assert prf.precision == pytest.approx(2 / 3)
    assert prf.recall == pytest.approx(0.5)
    assert prf.f_score == pytest.approx(2 * (2 / 3) * 0.5 / ((2 / 3) + 0.5))


def test_prf_zero_denominators():
    assert PRF.from_counts(0, 0, 0) == PRF(0.0, 0.0, 0.0)
    assert PRF.from_counts(0, 2, 0).recall == 0.0
    assert PRF.from_counts(0, 0, 2).precision == 0.0


def test_score_extraction_hand_example():
    # sentence 1: predicted {2,3}, gold F at 2 only -> tp=1 fp=1
    # sentence 2: predicted {1}, gold F at 1 and 3 -> tp=1 fn=1
    prf = score_extraction(
        [{2, 3}, {1}],
        [["N", "F", "N"], ["F", "N", "F"]],
        "feature",
    )
    assert prf.precision == pytest.approx(2 / 3)
    assert prf.recall == pytest.approx(2 / 3)


def test_score_extraction_targets():
    gold = [["O", "DO", "F"]]
    assert score_extraction([{1}], gold, "opinion").f_score == 1.0
    assert score_extraction([{2}], gold, "intensifier").f_score == 1.0
    with pytest.raises(ValueError, match="unknown target"):
        score_extraction([{1}], gold, "holder")


def test_score_extraction_misalignment():
    with pytest.raises(ValueError, match="counts differ"):
        score_extraction([{1}], [["F"], ["F"]], "feature")
    with pytest.raises(ValueError, match="beyond gold"):
        score_extraction([{5}], [["F", "N"]], "feature")


def test_score_classification_confusion_oracle():
    rng = random.Random(3)
    classes = [POSITIVE, NEGATIVE, NEUTRAL]
    for _ in range(200):
        n = rng.randint(1, 30)
        pred = [rng.choice(classes) for _ in range(n)]
        gold = [rng.choice(classes) for _ in range(n)]
        kept = [(p, g) for p, g in zip(pred, gold) if NEUTRAL not in (p, g)]
        tp = sum(p == g == POSITIVE for p, g in kept)
        fp = sum(p == POSITIVE and g == NEGATIVE for p, g in kept)
        fn = sum(p == NEGATIVE and g == POSITIVE for p, g in kept)
        assert score_classification(pred, gold) == PRF.from_counts(tp, fp, fn)


def test_score_classification_misalignment():
    with pytest.raises(ValueError):
        score_classification([POSITIVE], [POSITIVE, NEGATIVE])


class TestAblation:
    def test_rows_are_sorted_and_nested(self, lexicon):
        corpus = read_corpus(
            FIXTURES / "a2400.conllu", FIXTURES / "a2400.meta.jsonl"
        )
        rows = run_ablation(corpus, lexicon, [1.0, 0.5, 0.1], seed=0)
        assert [r.fraction for r in rows] == [0.1, 0.5, 1.0]
        sizes = [r.lexicon_size for r in rows]
        assert sizes == sorted(sizes)
        assert rows[-1].lexicon_size == len(lexicon.opinions)

    def test_full_lexicon_matches_direct_run(self, lexicon):
        corpus = read_corpus(
            FIXTURES / "a2400.conllu", FIXTURES / "a2400.meta.jsonl"
        )
        row = run_ablation(corpus, lexicon, [1.0], seed=7)[0]
        # the fixture is fully hand-labeled, so features score perfectly
        assert row.prf.f_score == pytest.approx(1.0)
        assert row.avg_initial_opinions > 0
        assert row.avg_new_opinions > 0

    def test_smaller_lexicon_never_more_seed_matches(self, lexicon):
        corpus = read_corpus(
            FIXTURES / "a2400.conllu", FIXTURES / "a2400.meta.jsonl"
        )
        rows = run_ablation(corpus, lexicon, [0.1, 0.5, 1.0], seed=1)
        # seed-matched opinion tokens can only grow with the dictionary,
        # because the subsets are nested
        for smaller, larger in zip(rows, rows[1:]):
            sub_small = sample_lexicon(lexicon, smaller.fraction, 1)
            sub_large = sample_lexicon(lexicon, larger.fraction, 1)
            assert set(sub_small.opinions) <= set(sub_large.opinions)

    def test_empty_corpus_rejected(self, lexicon):
        with pytest.raises(ValueError):
            run_ablation([], lexicon, [1.0], seed=0)
