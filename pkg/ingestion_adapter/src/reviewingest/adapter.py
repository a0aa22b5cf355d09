"""CSV review export -> CoNLL-U + JSON-lines metadata conversion.

The output format is the opinion-mining engine's input contract:
10-column CoNLL-U with ``# review_id`` / ``# sent_id`` comments and one
metadata JSON object per review.  Reviews that fail validation or
parsing are skipped with a logged reason; both output files are written
atomically (temp file + rename).
"""

from __future__ import annotations

import csv
import datetime as dt
import json
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Iterable

from .parse import ParsedSentence, parse_text

log = logging.getLogger("reviewingest")

CSV_COLUMNS = ["review_id", "product_id", "stars", "date", "holder", "title", "body"]

Parser = Callable[[str], "list[ParsedSentence]"]


class IngestError(ValueError):
    pass


@dataclass(frozen=True)
class RawReview:
    review_id: str
    product_id: str
    stars: int
    date: dt.date
    holder: str
    title: str
    body: str

    def __post_init__(self) -> None:
        if not self.review_id:
            raise IngestError("empty review_id")
        if not self.body.strip():
            raise IngestError("empty body")
        if self.stars not in (1, 2, 3, 4, 5):
            raise IngestError(f"stars must be 1..5, got {self.stars}")


def read_raw_csv(path: str | Path) -> Iterable[tuple[int, dict]]:
    """Yield (line number, row dict); header must cover CSV_COLUMNS."""
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = set(CSV_COLUMNS) - set(reader.fieldnames or [])
        if missing:
            raise IngestError(f"{path}: missing CSV columns {sorted(missing)}")
        for lineno, row in enumerate(reader, 2):
            yield lineno, row


def _to_review(row: dict) -> RawReview:
    return RawReview(
        review_id=(row["review_id"] or "").strip(),
        product_id=(row["product_id"] or "").strip(),
        stars=int(row["stars"]),
        date=dt.date.fromisoformat((row["date"] or "").strip()),
        holder=(row["holder"] or "").strip(),
        title=(row["title"] or "").strip(),
        body=(row["body"] or "").strip(),
    )


def review_to_conllu(review: RawReview, parser: Parser) -> tuple[str, int]:
    """(CoNLL-U block for one review, sentence count)."""
    text = f"{review.title}. {review.body}" if review.title else review.body
    sentences = parser(text)
    if not sentences:
        raise IngestError("parser produced no sentences")
    lines = [f"# review_id = {review.review_id}"]
    for si, sent in enumerate(sentences, 1):
        if not sent.tokens:
            raise IngestError(f"sentence {si} has no tokens")
        if len(sent.arcs) != len(sent.tokens):
            raise IngestError(f"sentence {si}: arc/token count mismatch")
        lines.append(f"# sent_id = {review.review_id}-s{si}")
        rel_of = {dep: (head, rel) for head, dep, rel in sent.arcs}
        for ti, tok in enumerate(sent.tokens, 1):
            if ti not in rel_of:
                raise IngestError(f"sentence {si}: token {ti} has no head")
            head, rel = rel_of[ti]
            lines.append(
                f"{ti}\t{tok.surface}\t{tok.surface.lower()}\t{tok.pos}\t{tok.pos}"
                f"\t_\t{head}\t{rel}\t_\t_"
            )
        lines.append("")
    return "\n".join(lines) + "\n", len(sentences)


def _atomic_write(path: Path, content: str) -> None:
    fd, tmp = tempfile.mkstemp(dir=path.parent or Path("."), suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(content)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def parse_corpus(
    raw_path: str | Path,
    out_conllu: str | Path,
    out_meta: str | Path,
    parser: Parser = parse_text,
) -> tuple[int, int]:
    """Convert a CSV export; returns (reviews written, sentences written).

    Failing reviews are skipped with a logged reason.  An empty input is
    a clean zero-count run; both outputs are still (atomically) written.
    """
    conllu_blocks: list[str] = []
    meta_lines: list[str] = []
    n_reviews = n_sentences = 0
    for lineno, row in read_raw_csv(raw_path):
        try:
            review = _to_review(row)
            block, sentences = review_to_conllu(review, parser)
        except (IngestError, ValueError) as exc:
            log.warning("%s:%d: skipping review: %s", raw_path, lineno, exc)
            continue
        conllu_blocks.append(block)
        meta_lines.append(
            json.dumps(
                {
                    "review_id": review.review_id,
                    "product_id": review.product_id,
                    "stars": review.stars,
                    "date": review.date.isoformat(),
                    "holder": review.holder,
                }
            )
        )
        n_reviews += 1
        n_sentences += sentences
    _atomic_write(Path(out_conllu), "".join(conllu_blocks))
    _atomic_write(Path(out_meta), "".join(line + "\n" for line in meta_lines))
    return n_reviews, n_sentences
