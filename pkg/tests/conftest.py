import pytest

from opinionminer.lexicon import load_lexicon
from opinionminer.review_model import DependencyArc, Sentence, Token

from pathlib import Path

FIXTURES = Path(__file__).parent / "fixtures"
DATA = Path(__file__).parent.parent / "src" / "opinionminer" / "data"


@pytest.fixture(scope="session")
def lexicon():
    return load_lexicon(DATA / "opinion_words.tsv", DATA / "intensifiers.tsv")


def sent(rows, sent_id="t"):
    """Build a Sentence from (surface, pos, head, relation) rows."""
    tokens = [Token(i + 1, surface, pos) for i, (surface, pos, _, _) in enumerate(rows)]
    arcs = [
        DependencyArc(head, i + 1, rel)
        for i, (_, _, head, rel) in enumerate(rows)
    ]
    return Sentence(tokens, arcs, sent_id=sent_id)
