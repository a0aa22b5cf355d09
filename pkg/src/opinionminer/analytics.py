"""Feature-dimension comparison and linear what-if prediction.

Sextuples are bucketed into named feature dimensions by synonym match,
yielding per-product positive/negative shares.  A monthly series of
dimension negatives plus a response column (orientation value or review
count as a consumption proxy) feeds an ordinary-least-squares model used
for what-if prediction.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np


class AnalyticsError(ValueError):
    pass


@dataclass(frozen=True)
class DimensionConfig:
    """Named synonym sets, e.g. battery -> {battery, batteries, charge}."""

    dimensions: dict[str, frozenset[str]]
    kinds: dict[str, str] = field(default_factory=dict)  # technical | non_technical

    def __post_init__(self) -> None:
        seen: dict[str, str] = {}
        for name, synonyms in self.dimensions.items():
            if not synonyms:
                raise AnalyticsError(f"dimension {name!r} has no synonyms")
            for syn in synonyms:
                if syn in seen:
                    raise AnalyticsError(
                        f"synonym {syn!r} in both {seen[syn]!r} and {name!r}"
                    )
                seen[syn] = name

    def match(self, feature_terms: Sequence[str]) -> str | None:
        """Dimension owning any term of a feature kernel, else None."""
        text = " ".join(feature_terms).lower()
        for name, synonyms in self.dimensions.items():
            for syn in synonyms:
                if syn in text.split() or (" " in syn and syn in text):
                    return name
        return None


def load_dimension_config(path: str | Path) -> DimensionConfig:
    """JSON file: {"dimensions": {name: {"synonyms": [...], "kind": ...}}}."""
    try:
        obj = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise AnalyticsError(f"{path}: bad JSON ({exc})") from exc
    dims = {}
    kinds = {}
    for name, spec in obj.get("dimensions", {}).items():
        dims[name] = frozenset(s.lower() for s in spec["synonyms"])
        kinds[name] = spec.get("kind", "technical")
    if not dims:
        raise AnalyticsError(f"{path}: no dimensions defined")
    return DimensionConfig(dims, kinds)


@dataclass
class DimensionReport:
    product_id: str
    totals: dict[str, int]
    positive_share: dict[str, float]
    negative_share: dict[str, float]
    negative_terms: dict[str, list[str]]  # most frequent first
    other_count: int


def bucket_sextuples(
    sextuples: Sequence[Mapping],
    cfg: DimensionConfig,
    top_k: int = 5,
) -> list[DimensionReport]:
    """One report per product; each sextuple lands in at most one dimension."""
    products: dict[str, dict] = {}
    order: list[str] = []
    for sx in sextuples:
        pid = sx["product_id"]
        if pid not in products:
            products[pid] = {
                "pos": {d: 0 for d in cfg.dimensions},
                "neg": {d: 0 for d in cfg.dimensions},
                "tot": {d: 0 for d in cfg.dimensions},
                "neg_terms": {d: {} for d in cfg.dimensions},
                "other": 0,
            }
            order.append(pid)
        st = products[pid]
        dim = cfg.match(sx["feature"])
        if dim is None:
            st["other"] += 1
            continue
        st["tot"][dim] += 1
        if sx["scalar"] > 0:
            st["pos"][dim] += 1
        elif sx["scalar"] < 0:
            st["neg"][dim] += 1
            for word in sx["opinion"]:
                st["neg_terms"][dim][word] = st["neg_terms"][dim].get(word, 0) + 1

    reports = []
    for pid in order:
        st = products[pid]
        pos_share = {}
        neg_share = {}
        neg_terms = {}
        for d in cfg.dimensions:
            n = st["tot"][d]
            pos_share[d] = st["pos"][d] / n if n else 0.0
            neg_share[d] = st["neg"][d] / n if n else 0.0
            ranked = sorted(st["neg_terms"][d].items(), key=lambda kv: (-kv[1], kv[0]))
            neg_terms[d] = [w for w, _ in ranked[:top_k]]
        reports.append(
            DimensionReport(pid, st["tot"], pos_share, neg_share, neg_terms, st["other"])
        )
    return reports


@dataclass(frozen=True)
class RegressionModel:
    response: str
    predictors: tuple[str, ...]
    coefficients: tuple[float, ...]
    intercept: float
    rmse: float
    predictor_ranges: tuple[tuple[float, float], ...]


def fit_regression(
    predictors: Mapping[str, Sequence[float]],
    response: Sequence[float],
    response_name: str = "OV",
) -> RegressionModel:
    """Ordinary least squares with intercept via numpy lstsq."""
    names = tuple(predictors)
    if not names:
        raise AnalyticsError("need at least one predictor")
    n = len(response)
    p = len(names)
    if n < p + 2:
        raise AnalyticsError(f"need at least {p + 2} rows for {p} predictors, got {n}")
    X = np.column_stack([np.ones(n)] + [np.asarray(predictors[k], float) for k in names])
    y = np.asarray(response, float)
    if X.shape[0] != y.shape[0]:
        raise AnalyticsError("predictor/response row counts differ")
    rank = np.linalg.matrix_rank(X)
    if rank < X.shape[1]:
        raise AnalyticsError(
            f"design matrix is rank deficient (rank {rank} < {X.shape[1]}); "
            f"check for collinear dimensions among {list(names)}"
        )
    beta, *_ = np.linalg.lstsq(X, y, rcond=None)
    resid = y - X @ beta
    rmse = float(np.sqrt(np.mean(resid**2)))
    ranges = tuple(
        (float(np.min(predictors[k])), float(np.max(predictors[k]))) for k in names
    )
    return RegressionModel(
        response=response_name,
        predictors=names,
        coefficients=tuple(float(b) for b in beta[1:]),
        intercept=float(beta[0]),
        rmse=rmse,
        predictor_ranges=ranges,
    )


def predict_whatif(
    model: RegressionModel,
    values: Mapping[str, float],
    extrapolation_margin: float = 0.0,
) -> tuple[float, list[str]]:
    """Linear evaluation at a predictor vector; returns (prediction, flags).

    Unknown dimension names are an error; values outside the observed
    range (plus margin) are flagged, not rejected.
    """
    unknown = set(values) - set(model.predictors)
    if unknown:
        raise AnalyticsError(f"unknown dimension names: {sorted(unknown)}")
    flags = []
    y = model.intercept
    for name, coef, (lo, hi) in zip(
        model.predictors, model.coefficients, model.predictor_ranges
    ):
        if name not in values:
            raise AnalyticsError(f"missing value for dimension {name!r}")
        x = values[name]
        if x < lo - extrapolation_margin or x > hi + extrapolation_margin:
            flags.append(f"{name}: {x} outside observed range [{lo}, {hi}]")
        y += coef * x
    return y, flags


def monthly_series(
    sextuples: Sequence[Mapping],
    cfg: DimensionConfig,
) -> dict[str, dict]:
    """Per-product calendar-month buckets of dimension negatives, mean
    scalar (OV) and review count (consumption-quantity proxy).  Empty
    months between the first and last observation are kept as zero rows."""
    products: dict[str, dict] = {}
    for sx in sextuples:
        pid = sx["product_id"]
        month = dt.date.fromisoformat(sx["time"]).replace(day=1)
        st = products.setdefault(pid, {})
        row = st.setdefault(
            month,
            {
                "negatives": {d: 0 for d in cfg.dimensions},
                "scalars": [],
                "reviews": set(),
            },
        )
        dim = cfg.match(sx["feature"])
        if dim is not None and sx["scalar"] < 0:
            row["negatives"][dim] += 1
        row["scalars"].append(sx["scalar"])
        row["reviews"].add(sx["review_id"])

    out: dict[str, dict] = {}
    for pid, months in products.items():
        lo, hi = min(months), max(months)
        series: dict[dt.date, dict] = {}
        cur = lo
        while cur <= hi:
            if cur in months:
                row = months[cur]
                series[cur] = {
                    "negatives": dict(row["negatives"]),
                    "ov": sum(row["scalars"]) / len(row["scalars"]),
                    "cq": len(row["reviews"]),
                }
            else:
                series[cur] = {
                    "negatives": {d: 0 for d in cfg.dimensions},
                    "ov": 0.0,
                    "cq": 0,
                }
            cur = (cur.replace(day=28) + dt.timedelta(days=4)).replace(day=1)
        out[pid] = series
    return out
