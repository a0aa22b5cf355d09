"""Review ingestion adapter: raw CSV exports -> CoNLL-U + metadata."""

from .adapter import IngestError, RawReview, parse_corpus, review_to_conllu
from .parse import ParsedSentence, ParsedToken, load_label_map, map_labels, parse_text

__all__ = [
    "IngestError",
    "ParsedSentence",
    "ParsedToken",
    "RawReview",
    "load_label_map",
    "map_labels",
    "parse_corpus",
    "parse_text",
    "review_to_conllu",
]

__version__ = "0.1.0"
