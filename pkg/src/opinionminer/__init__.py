"""Opinion mining over dependency-parsed product reviews.

Extracts feature/opinion/intensifier triples with triangular-fuzzy
polarity intensities, scores reviews and products, and supports
dimension-level comparison and regression-based what-if analysis.
"""

from .engine import OpinionTriple, ReviewExtraction, emit_sextuples, extract_review
from .fuzzy import (
    DegreeLevel,
    FuzzyTriple,
    IntensifierLevel,
    ReviewWeight,
    combine_case1,
    combine_case2,
    defuzzify,
    review_weight,
)
from .lexicon import Lexicon, load_lexicon, sample_lexicon
from .review_model import ParsedReview, Sentence, Token, read_corpus

__all__ = [
    "DegreeLevel",
    "FuzzyTriple",
    "IntensifierLevel",
    "Lexicon",
    "OpinionTriple",
    "ParsedReview",
    "ReviewExtraction",
    "ReviewWeight",
    "Sentence",
    "Token",
    "combine_case1",
    "combine_case2",
    "defuzzify",
    "emit_sextuples",
    "extract_review",
    "load_lexicon",
    "read_corpus",
    "review_weight",
    "sample_lexicon",
]

__version__ = "0.1.0"
