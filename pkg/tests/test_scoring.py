"""Threshold classification and product orientation."""

import pytest

from opinionminer.fuzzy import FuzzyTriple, ReviewWeight
from opinionminer.scoring import (
    NEGATIVE,
    NEUTRAL,
    POSITIVE,
    classify_review,
    gold_class,
    product_orientation,
    score_review,
)


def weight(scalar):
    return ReviewWeight(FuzzyTriple.of(scalar, scalar, scalar), scalar)


@pytest.mark.parametrize(
    "scalar,expected",
    [
        (0.5, POSITIVE),
        (0.1, POSITIVE),     # boundary is inclusive
        (0.0999, NEUTRAL),
        (0.0, NEUTRAL),
        (-0.0999, NEUTRAL),
        (-0.1, NEGATIVE),    # boundary is inclusive
        (-0.8, NEGATIVE),
    ],
)
def test_default_thresholds(scalar, expected):
    assert classify_review(weight(scalar)) == expected


def test_custom_thresholds():
    assert classify_review(weight(0.15), threshold_pos=0.2) == NEUTRAL
    assert classify_review(weight(-0.05), threshold_neg=-0.01) == NEGATIVE


def test_inverted_thresholds_rejected():
    with pytest.raises(ValueError):
        classify_review(weight(0.0), threshold_pos=-0.2, threshold_neg=0.2)


@pytest.mark.parametrize(
    "stars,expected",
    [(1, NEGATIVE), (2, NEGATIVE), (3, NEUTRAL), (4, POSITIVE), (5, POSITIVE)],
)
def test_gold_class(stars, expected):
    assert gold_class(stars) == expected


def test_gold_class_rejects_out_of_range():
    with pytest.raises(ValueError):
        gold_class(0)


def test_score_review_without_weight_is_neutral():
    sc = score_review("r1", "p1", None, 5)
    assert sc.predicted_class == NEUTRAL
    assert sc.gold_class == POSITIVE


def test_product_orientation_normalization():
    scores = [
        score_review("r1", "a", weight(0.8), 5),
        score_review("r2", "a", weight(0.4), 4),
        score_review("r3", "b", weight(-0.2), 2),
        score_review("r4", "c", weight(0.2), 4),
        score_review("r5", "c", None, 3),  # weightless: skipped
    ]
    out = product_orientation(scores)
    assert [o.product_id for o in out] == ["a", "b", "c"]
    a, b, c = out
    assert a.orientation_value == pytest.approx(0.6)
    assert a.review_count == 2
    assert a.normalized_orientation == pytest.approx(1.0)
    assert b.normalized_orientation == pytest.approx(0.0)
    assert c.normalized_orientation == pytest.approx((0.2 + 0.2) / 0.8)
    assert c.review_count == 1


def test_single_product_normalizes_to_one():
    out = product_orientation([score_review("r1", "a", weight(-0.3), 2)])
    assert out[0].normalized_orientation == 1.0


def test_all_weightless_gives_empty():
    assert product_orientation([score_review("r1", "a", None, 3)]) == []
