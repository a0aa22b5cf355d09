"""Command-line pipeline: extract, score, compare, predict, eval, ablate.

All outputs are UTF-8, newline-terminated, with stable field order; the
only randomness (lexicon sampling) flows from --seed, so identical
inputs produce byte-identical outputs.  On any error the partially
written outputs are removed and a diagnostic goes to stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .analytics import (
    bucket_sextuples,
    fit_regression,
    load_dimension_config,
    monthly_series,
    predict_whatif,
)
from .engine import emit_sextuples, extract_review
from .evaluation import run_ablation, score_classification, score_extraction
from .fuzzy import FuzzyTriple, ReviewWeight, defuzzify
from .lexicon import load_lexicon
from .review_model import read_corpus
from .scoring import (
    DEFAULT_THRESHOLD_NEG,
    DEFAULT_THRESHOLD_POS,
    product_orientation,
    score_review,
)

_DATA = Path(__file__).parent / "data"
DEFAULT_OPINION_LEXICON = _DATA / "opinion_words.tsv"
DEFAULT_INTENSIFIER_LEXICON = _DATA / "intensifiers.tsv"
DEFAULT_DIMENSIONS = _DATA / "camera_dimensions.json"


def _extract_one(args):
    review, lex = args
    return emit_sextuples(extract_review(review, lex))


def _map_reviews(reviews, lex, workers: int):
    if workers <= 1:
        return [_extract_one((r, lex)) for r in reviews]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(_extract_one, [(r, lex) for r in reviews]))


def _load_lex(args):
    return load_lexicon(args.lexicon, args.intensifiers)


def _read_sextuples(path: str) -> list[dict]:
    out = []
    for lineno, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        if line.strip():
            out.append(json.loads(line))
    return out


def _write_jsonl(path: str, records: list[dict]) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for rec in records:
            fh.write(json.dumps(rec) + "\n")


def cmd_extract(args) -> int:
    lex = _load_lex(args)
    reviews = read_corpus(args.corpus, args.meta)
    records = []
    for batch in _map_reviews(reviews, lex, args.workers):
        records.extend(batch)
    _write_jsonl(args.out, records)
    print(f"wrote {len(records)} sextuples for {len(reviews)} reviews to {args.out}")
    return 0


def _review_weights(sextuples: list[dict]) -> dict[str, tuple[str, ReviewWeight]]:
    """Recompute frequency-weighted review weights from sextuple records.

    Feature frequency is the surface's occurrence count across the
    review's feature kernels; null-feature triples weigh 1.
    """
    by_review: dict[str, list[dict]] = {}
    for sx in sextuples:
        by_review.setdefault(sx["review_id"], []).append(sx)
    out = {}
    for rid, rows in by_review.items():
        counts: dict[str, int] = {}
        for sx in rows:
            for w in sx["feature"]:
                counts[w] = counts.get(w, 0) + 1
        total = 0
        acc = [0.0, 0.0, 0.0]
        for sx in rows:
            freq = sum(counts[w] for w in sx["feature"]) if sx["feature"] else 1
            for i in range(3):
                acc[i] += sx["fuzzy"][i] * freq
            total += freq
        fz = FuzzyTriple.of(acc[0] / total, acc[1] / total, acc[2] / total)
        out[rid] = (rows[0]["product_id"], ReviewWeight(fz, defuzzify(fz)))
    return out


def cmd_score(args) -> int:
    sextuples = _read_sextuples(args.sextuples)
    meta = {}
    for line in Path(args.meta).read_text(encoding="utf-8").splitlines():
        if line.strip():
            obj = json.loads(line)
            meta[obj["review_id"]] = obj
    weights = _review_weights(sextuples)
    scores = []
    for rid, m in meta.items():
        pid, weight = weights.get(rid, (m["product_id"], None))
        scores.append(
            score_review(
                rid, pid, weight, int(m["stars"]), args.threshold_pos, args.threshold_neg
            )
        )
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    review_path = out_dir / "review_scores.csv"
    with open(review_path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["review_id", "product_id", "L", "M", "U", "scalar", "predicted", "gold"])
        for sc in scores:
            if sc.weight is None:
                w.writerow([sc.review_id, sc.product_id, "", "", "", "", sc.predicted_class, sc.gold_class])
            else:
                fz = sc.weight.fuzzy
                w.writerow(
                    [sc.review_id, sc.product_id, f"{fz.L:.6f}", f"{fz.M:.6f}",
                     f"{fz.U:.6f}", f"{sc.weight.scalar:.6f}", sc.predicted_class, sc.gold_class]
                )
    product_path = out_dir / "product_scores.csv"
    with open(product_path, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["product_id", "orientation", "review_count", "normalized"])
        for po in product_orientation(scores):
            w.writerow(
                [po.product_id, f"{po.orientation_value:.6f}", po.review_count,
                 f"{po.normalized_orientation:.6f}"]
            )
    print(f"wrote {review_path} and {product_path}")
    return 0


def cmd_compare(args) -> int:
    cfg = load_dimension_config(args.dimensions)
    sextuples = _read_sextuples(args.sextuples)
    reports = bucket_sextuples(sextuples, cfg)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["product_id", "dimension", "total", "positive_share",
                    "negative_share", "top_negative_terms"])
        for rep in reports:
            for dim in cfg.dimensions:
                w.writerow(
                    [rep.product_id, dim, rep.totals[dim],
                     f"{rep.positive_share[dim]:.4f}",
                     f"{rep.negative_share[dim]:.4f}",
                     " ".join(rep.negative_terms[dim])]
                )
            w.writerow([rep.product_id, "other", rep.other_count, "", "", ""])
    print(f"wrote {args.out}")
    return 0


def cmd_predict(args) -> int:
    cfg = load_dimension_config(args.dimensions)
    sextuples = _read_sextuples(args.sextuples)
    series = monthly_series(sextuples, cfg)
    whatif = {}
    for item in args.set or []:
        name, _, value = item.partition("=")
        whatif[name] = float(value)
    results = {}
    for pid, months in series.items():
        rows = sorted(months)
        predictors = {
            d: [months[m]["negatives"][d] for m in rows] for d in cfg.dimensions
        }
        entry = {}
        for resp in ("ov", "cq"):
            y = [months[m][resp] for m in rows]
            try:
                model = fit_regression(predictors, y, resp.upper())
            except Exception as exc:  # rank deficiency or too few rows
                entry[resp] = {"error": str(exc)}
                continue
            rec = {
                "predictors": list(model.predictors),
                "coefficients": list(model.coefficients),
                "intercept": model.intercept,
                "rmse": model.rmse,
            }
            if whatif:
                base = {
                    d: sum(predictors[d]) / len(predictors[d]) for d in cfg.dimensions
                }
                base.update(whatif)
                pred, flags = predict_whatif(model, base, args.extrapolation_margin)
                rec["whatif"] = {"inputs": base, "prediction": pred, "flags": flags}
            entry[resp] = rec
        results[pid] = entry
    Path(args.out).write_text(json.dumps(results, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {args.out}")
    return 0


def cmd_eval(args) -> int:
    lex = _load_lex(args)
    reviews = read_corpus(args.corpus, args.meta)
    pred = {"feature": [], "opinion": [], "intensifier": []}
    gold = []
    cls_pred, cls_gold = [], []
    for review in reviews:
        ex = extract_review(review, lex)
        for si, s in enumerate(review.sentences):
            if s.gold is None:
                continue
            sent_ex = ex.sentences[si]
            pred["feature"].append(set(sent_ex.features))
            pred["opinion"].append(set(sent_ex.opinions - sent_ex.features))
            odi = set()
            for sp in sent_ex.spans:
                odi.update(sp.tokens)
            pred["intensifier"].append(odi)
            gold.append(list(s.gold))
        sc = score_review(
            review.review_id, review.product_id,
            ex.weight, review.stars, args.threshold_pos, args.threshold_neg,
        )
        cls_pred.append(sc.predicted_class)
        cls_gold.append(sc.gold_class)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["target", "precision", "recall", "f_score"])
        for target in ("feature", "opinion", "intensifier"):
            prf = score_extraction(pred[target], gold, target)
            w.writerow([target, f"{prf.precision:.4f}", f"{prf.recall:.4f}", f"{prf.f_score:.4f}"])
        prf = score_classification(cls_pred, cls_gold)
        w.writerow(["classification", f"{prf.precision:.4f}", f"{prf.recall:.4f}", f"{prf.f_score:.4f}"])
    print(f"wrote {args.out}")
    return 0


def cmd_ablate(args) -> int:
    lex = _load_lex(args)
    reviews = read_corpus(args.corpus, args.meta)
    fractions = [float(f) for f in args.fractions.split(",")]
    rows = run_ablation(reviews, lex, fractions, args.seed)
    with open(args.out, "w", encoding="utf-8", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["fraction", "lexicon_size", "avg_initial_opinions",
                    "avg_new_opinions", "precision", "recall", "f_score"])
        for row in rows:
            w.writerow(
                [row.fraction, row.lexicon_size,
                 f"{row.avg_initial_opinions:.4f}", f"{row.avg_new_opinions:.4f}",
                 f"{row.prf.precision:.4f}", f"{row.prf.recall:.4f}",
                 f"{row.prf.f_score:.4f}"]
            )
    print(f"wrote {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="opinionminer",
        description="Opinion mining over dependency-parsed product reviews",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--threshold-pos", type=float, default=DEFAULT_THRESHOLD_POS,
                       help="scalar at or above which a review is positive (default %(default)s)")
        p.add_argument("--threshold-neg", type=float, default=DEFAULT_THRESHOLD_NEG,
                       help="scalar at or below which a review is negative (default %(default)s)")
        p.add_argument("--seed", type=int, default=0, help="sampling seed (default %(default)s)")
        p.add_argument("--workers", type=int, default=1,
                       help="parallel workers for per-review extraction (default %(default)s)")

    def add_lexicon(p):
        p.add_argument("--lexicon", default=str(DEFAULT_OPINION_LEXICON),
                       help="opinion-word TSV (default: bundled dictionary)")
        p.add_argument("--intensifiers", default=str(DEFAULT_INTENSIFIER_LEXICON),
                       help="intensifier TSV (default: bundled dictionary)")

    p = sub.add_parser("extract", help="corpus -> sextuples JSON-lines")
    p.add_argument("corpus", help="CoNLL-U file")
    p.add_argument("meta", help="JSON-lines metadata file")
    p.add_argument("--out", required=True)
    add_common(p)
    add_lexicon(p)
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("score", help="sextuples -> review/product score tables")
    p.add_argument("sextuples")
    p.add_argument("meta")
    p.add_argument("--out", required=True, help="output directory")
    add_common(p)
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("compare", help="sextuples -> dimension comparison CSV")
    p.add_argument("sextuples")
    p.add_argument("--dimensions", default=str(DEFAULT_DIMENSIONS))
    p.add_argument("--out", required=True)
    add_common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("predict", help="sextuples -> regression + what-if JSON")
    p.add_argument("sextuples")
    p.add_argument("--dimensions", default=str(DEFAULT_DIMENSIONS))
    p.add_argument("--set", action="append", metavar="DIM=VALUE",
                   help="what-if override, repeatable")
    p.add_argument("--extrapolation-margin", type=float, default=0.0)
    p.add_argument("--out", required=True)
    add_common(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("eval", help="gold-labeled corpus -> PRF report CSV")
    p.add_argument("corpus")
    p.add_argument("meta")
    p.add_argument("--out", required=True)
    add_common(p)
    add_lexicon(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("ablate", help="corpus + lexicon -> ablation CSV")
    p.add_argument("corpus")
    p.add_argument("meta")
    p.add_argument("--fractions", default="0.1,0.2,0.5,0.8,1.0")
    p.add_argument("--out", required=True)
    add_common(p)
    add_lexicon(p)
    p.set_defaults(func=cmd_ablate)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    outputs = []
    if getattr(args, "out", None):
        outputs.append(Path(args.out))
    try:
        return args.func(args)
    except Exception as exc:
        for out in outputs:
            if out.is_file():
                out.unlink(missing_ok=True)
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
