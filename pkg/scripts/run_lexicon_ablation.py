#!/usr/bin/env python3
"""Dictionary-size ablation on a deterministic synthetic corpus.

Builds a templated review corpus whose opinion words come from the
bundled dictionary, then reruns extraction under nested dictionary
subsets and prints how opinion counts and feature P/R/F grow with
dictionary size.  Optionally writes the corpus for inspection."""

import argparse

from opinionminer.cli import DEFAULT_INTENSIFIER_LEXICON, DEFAULT_OPINION_LEXICON
from opinionminer.evaluation import run_ablation
from opinionminer.lexicon import load_lexicon
from opinionminer.synthetic import build_synthetic_corpus, write_corpus


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--reviews", type=int, default=50)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--fractions", default="0.1,0.2,0.5,0.8,1.0")
    parser.add_argument("--lexicon", default=str(DEFAULT_OPINION_LEXICON))
    parser.add_argument("--intensifiers", default=str(DEFAULT_INTENSIFIER_LEXICON))
    parser.add_argument("--dump-corpus", metavar="PREFIX",
                        help="also write PREFIX.conllu and PREFIX.meta.jsonl")
    args = parser.parse_args()

    lex = load_lexicon(args.lexicon, args.intensifiers)
    corpus = build_synthetic_corpus(lex, args.reviews, args.seed)
    if args.dump_corpus:
        write_corpus(corpus, args.dump_corpus + ".conllu",
                     args.dump_corpus + ".meta.jsonl")
    fractions = [float(f) for f in args.fractions.split(",")]
    rows = run_ablation(corpus, lex, fractions, args.seed)
    header = f"{'frac':>5} {'words':>6} {'seed-ops':>9} {'new-ops':>8} " \
             f"{'P':>7} {'R':>7} {'F':>7}"
    print(header)
    for r in rows:
        print(f"{r.fraction:>5.2f} {r.lexicon_size:>6d} "
              f"{r.avg_initial_opinions:>9.3f} {r.avg_new_opinions:>8.3f} "
              f"{r.prf.precision:>7.4f} {r.prf.recall:>7.4f} {r.prf.f_score:>7.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
