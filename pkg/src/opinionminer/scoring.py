"""Review classification and per-product orientation aggregation.

A review's class comes from its defuzzified weight against a pair of
thresholds; the gold class is derived from the star rating.  Product
orientation is the plain mean of member review scalars, min-max
normalized across the compared product set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .fuzzy import ReviewWeight

DEFAULT_THRESHOLD_POS = 0.1
DEFAULT_THRESHOLD_NEG = -0.1

POSITIVE = "positive"
NEGATIVE = "negative"
NEUTRAL = "neutral"


def classify_review(
    w: ReviewWeight,
    threshold_pos: float = DEFAULT_THRESHOLD_POS,
    threshold_neg: float = DEFAULT_THRESHOLD_NEG,
) -> str:
    if threshold_neg > threshold_pos:
        raise ValueError("threshold_neg must not exceed threshold_pos")
    if w.scalar >= threshold_pos:
        return POSITIVE
    if w.scalar <= threshold_neg:
        return NEGATIVE
    return NEUTRAL


def gold_class(stars: int) -> str:
    """Star-rating to class: {4,5} positive, {1,2} negative, {3} neutral."""
    if stars in (4, 5):
        return POSITIVE
    if stars in (1, 2):
        return NEGATIVE
    if stars == 3:
        return NEUTRAL
    raise ValueError(f"stars must be 1..5, got {stars}")


@dataclass(frozen=True)
class ReviewScore:
    review_id: str
    product_id: str
    weight: Optional[ReviewWeight]
    predicted_class: str
    gold_class: str


@dataclass(frozen=True)
class ProductOrientation:
    product_id: str
    orientation_value: float
    review_count: int
    normalized_orientation: float


def score_review(
    review_id: str,
    product_id: str,
    weight: Optional[ReviewWeight],
    stars: int,
    threshold_pos: float = DEFAULT_THRESHOLD_POS,
    threshold_neg: float = DEFAULT_THRESHOLD_NEG,
) -> ReviewScore:
    """Reviews with no opinionated content classify as neutral."""
    if weight is None:
        predicted = NEUTRAL
    else:
        predicted = classify_review(weight, threshold_pos, threshold_neg)
    return ReviewScore(review_id, product_id, weight, predicted, gold_class(stars))


def product_orientation(scores: Sequence[ReviewScore]) -> list[ProductOrientation]:
    """Mean scalar per product, min-max normalized across the set.

    Reviews without a weight are skipped; a product left with zero scored
    reviews is omitted.  A single-product set normalizes to 1.0.
    """
    by_product: dict[str, list[float]] = {}
    order: list[str] = []
    for sc in scores:
        if sc.weight is None:
            continue
        if sc.product_id not in by_product:
            by_product[sc.product_id] = []
            order.append(sc.product_id)
        by_product[sc.product_id].append(sc.weight.scalar)

    means = {p: sum(v) / len(v) for p, v in by_product.items()}
    if not means:
        return []
    lo, hi = min(means.values()), max(means.values())
    span = hi - lo
    out = []
    for p in order:
        norm = 1.0 if span == 0 else (means[p] - lo) / span
        out.append(
            ProductOrientation(
                product_id=p,
                orientation_value=means[p],
                review_count=len(by_product[p]),
                normalized_orientation=norm,
            )
        )
    return out
