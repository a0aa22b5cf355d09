#!/usr/bin/env python3
"""Run the bundled hand-parsed fixtures end to end and print every
intermediate artifact: extraction trace, first-level kernels, relation
groups, final triples, and the review weight."""

import argparse
from pathlib import Path

from opinionminer.cli import DEFAULT_INTENSIFIER_LEXICON, DEFAULT_OPINION_LEXICON
from opinionminer.engine import extract_review, first_level_kernels, relation_strings
from opinionminer.lexicon import load_lexicon
from opinionminer.review_model import read_corpus

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--lexicon", default=str(DEFAULT_OPINION_LEXICON))
    parser.add_argument("--intensifiers", default=str(DEFAULT_INTENSIFIER_LEXICON))
    parser.add_argument("--trace", action="store_true", help="print the rule trace")
    args = parser.parse_args()
    lex = load_lexicon(args.lexicon, args.intensifiers)

    for name in ("a2400", "fig4"):
        review = read_corpus(
            FIXTURES / f"{name}.conllu", FIXTURES / f"{name}.meta.jsonl"
        )[0]
        ex = extract_review(review, lex)
        print(f"== {review.review_id} ({len(review.sentences)} sentences) ==")
        if args.trace:
            for row in ex.trace:
                print(f"  {row.step:<9} {row.rule:<6} s{row.sentence} "
                      f"{row.extracted}" + (f" <- {row.seed}" if row.seed else ""))
        print("first-level kernels:")
        for k in first_level_kernels(ex):
            print(f"  {k}")
        print("relation groups:")
        for r in relation_strings(ex):
            print(f"  {r}")
        print("triples:")
        for t in ex.triples:
            print(f"  {t.render()}  scalar={t.scalar:+.4f}  freq={t.frequency}")
        if ex.weight:
            fz = ex.weight.fuzzy
            print(f"review weight: ({fz.L:.4f}, {fz.M:.4f}, {fz.U:.4f}) "
                  f"scalar={ex.weight.scalar:.4f}")
        print()
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
