"""Command line for the review ingestion adapter."""

from __future__ import annotations

import argparse
import logging
import sys

from .adapter import parse_corpus


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="reviewingest",
        description="Convert a raw review CSV export into CoNLL-U + JSON-lines metadata",
    )
    parser.add_argument("csv", help="input CSV (review_id, product_id, stars, date, holder, title, body)")
    parser.add_argument("--out-conllu", required=True)
    parser.add_argument("--out-meta", required=True)
    parser.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(message)s",
    )
    try:
        reviews, sentences = parse_corpus(args.csv, args.out_conllu, args.out_meta)
    except Exception as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {reviews} reviews ({sentences} sentences)")
    if reviews == 0:
        # distinguish "empty input" (clean) from "everything failed"
        had_rows = False
        try:
            with open(args.csv, encoding="utf-8") as fh:
                had_rows = len(fh.readlines()) > 1
        except OSError:
            return 1
        if had_rows:
            print("error: no review could be converted", file=sys.stderr)
            return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
