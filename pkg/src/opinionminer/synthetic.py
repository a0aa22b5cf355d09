"""Deterministic synthetic review corpus for benchmarks and ablations.

Each review is built from simple templated sentences whose opinion words
are drawn from a dictionary, so extraction quality under a sampled
sub-dictionary is fully predictable: a feature is recoverable exactly
when its sentence's opinion word survived the sampling.  Every token
carries a gold F/O/DO/N label.
"""

from __future__ import annotations

import datetime as dt
import json
import random
from pathlib import Path

from .lexicon import Lexicon
from .review_model import DependencyArc, ParsedReview, Sentence, Token

# product nouns; kept disjoint from the bundled dictionaries
FEATURE_NOUNS = [
    "screen", "lens", "strap", "menu", "viewfinder", "tripod", "sensor",
    "charger", "cable", "manual", "grip", "dial", "housing", "adapter",
]


def _t(index, surface, pos):
    return Token(index, surface, pos)


def _sentence_copular(feature: str, opinion: str, sent_id: str) -> Sentence:
    # The FEATURE is OPINION .
    tokens = [
        _t(1, "The", "DT"), _t(2, feature, "NN"), _t(3, "is", "VBZ"),
        _t(4, opinion, "JJ"), _t(5, ".", "."),
    ]
    arcs = [
        DependencyArc(2, 1, "det"), DependencyArc(4, 2, "nsubj"),
        DependencyArc(4, 3, "cop"), DependencyArc(0, 4, "root"),
        DependencyArc(4, 5, "punct"),
    ]
    return Sentence(tokens, arcs, sent_id=sent_id, gold=["N", "F", "N", "O", "N"])


def _sentence_intensified(feature: str, odi: str, opinion: str, sent_id: str) -> Sentence:
    # The FEATURE is ODI OPINION .
    tokens = [
        _t(1, "The", "DT"), _t(2, feature, "NN"), _t(3, "is", "VBZ"),
        _t(4, odi, "RB"), _t(5, opinion, "JJ"), _t(6, ".", "."),
    ]
    arcs = [
        DependencyArc(2, 1, "det"), DependencyArc(5, 2, "nsubj"),
        DependencyArc(5, 3, "cop"), DependencyArc(5, 4, "advmod"),
        DependencyArc(0, 5, "root"), DependencyArc(5, 6, "punct"),
    ]
    return Sentence(tokens, arcs, sent_id=sent_id, gold=["N", "F", "N", "DO", "O", "N"])


def _sentence_attributive(feature: str, opinion: str, sent_id: str) -> Sentence:
    # It has a OPINION FEATURE .
    tokens = [
        _t(1, "It", "PRP"), _t(2, "has", "VBZ"), _t(3, "a", "DT"),
        _t(4, opinion, "JJ"), _t(5, feature, "NN"), _t(6, ".", "."),
    ]
    arcs = [
        DependencyArc(2, 1, "nsubj"), DependencyArc(0, 2, "root"),
        DependencyArc(5, 3, "det"), DependencyArc(5, 4, "amod"),
        DependencyArc(2, 5, "dobj"), DependencyArc(2, 6, "punct"),
    ]
    return Sentence(tokens, arcs, sent_id=sent_id, gold=["N", "N", "N", "O", "F", "N"])


def build_synthetic_corpus(
    lex: Lexicon, n_reviews: int = 50, seed: int = 0
) -> list[ParsedReview]:
    rng = random.Random(seed)
    # single-word, non-noun-overriding opinion words only, so every draw
    # fits the adjective slot of the templates
    opinion_words = sorted(
        w for w, e in lex.opinions.items() if " " not in w and not e.nn_override
    )
    odi_words = sorted(w for w in lex.intensifiers if " " not in w and w != "n't")
    reviews = []
    for i in range(n_reviews):
        rid = f"syn-{i:03d}"
        sentences = []
        for j in range(rng.randint(1, 2)):
            feature = rng.choice(FEATURE_NOUNS)
            opinion = rng.choice(opinion_words)
            template = rng.randrange(3)
            sid = f"{rid}-s{j + 1}"
            if template == 0:
                sentences.append(_sentence_copular(feature, opinion, sid))
            elif template == 1:
                sentences.append(
                    _sentence_intensified(feature, rng.choice(odi_words), opinion, sid)
                )
            else:
                sentences.append(_sentence_attributive(feature, opinion, sid))
        # star rating tracks the orientation of the last opinion word
        entry = lex.lookup_opinion(opinion)
        positive = entry is None or entry.degree.orientation == "positive"
        stars = rng.choice([4, 5]) if positive else rng.choice([1, 2])
        date = dt.date(2020, 1, 1) + dt.timedelta(days=rng.randrange(365))
        reviews.append(
            ParsedReview(rid, f"product-{i % 3}", stars, date, f"holder-{i}", sentences)
        )
    return reviews


def write_corpus(
    reviews: list[ParsedReview], conllu_path: str | Path, meta_path: str | Path
) -> None:
    """Serialize reviews to CoNLL-U (with Gold= MISC labels) plus metadata."""
    lines = []
    for r in reviews:
        lines.append(f"# review_id = {r.review_id}")
        for s in r.sentences:
            lines.append(f"# sent_id = {s.sent_id}")
            for t in s.tokens:
                head, rel = s.head_of(t.index)
                misc = f"Gold={s.gold[t.index - 1]}" if s.gold else "_"
                lines.append(
                    f"{t.index}\t{t.surface}\t{t.surface.lower()}\t{t.pos}\t{t.pos}"
                    f"\t_\t{head}\t{rel}\t_\t{misc}"
                )
            lines.append("")
    Path(conllu_path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    with open(meta_path, "w", encoding="utf-8") as fh:
        for r in reviews:
            fh.write(
                json.dumps(
                    {
                        "review_id": r.review_id,
                        "product_id": r.product_id,
                        "stars": r.stars,
                        "date": r.date.isoformat(),
                        "holder": r.holder,
                    }
                )
                + "\n"
            )
