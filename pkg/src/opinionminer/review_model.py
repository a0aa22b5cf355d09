"""Data model for dependency-parsed reviews and the CoNLL-U reader.

Input is CoNLL-U-style text (10 tab-separated columns; only index,
surface, POS, head and relation are used) with ``# review_id = ...`` and
``# sent_id = ...`` comment lines, blank line between sentences, plus a
JSON-lines metadata file keyed by review_id.
"""

from __future__ import annotations

import datetime as dt
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional

PUNCT_TAGS = {".", ",", ":", "``", "''", "-LRB-", "-RRB-", "HYPH", "SYM", "PUNCT"}

KNOWN_POS = {
    "NN", "NNS", "NNP", "NNPS", "JJ", "JJR", "JJS", "RB", "RBR", "RBS",
    "VB", "VBD", "VBG", "VBN", "VBP", "VBZ", "DT", "DET", "IN", "TO",
    "PRP", "PRP$", "CC", "CD", "MD", "EX", "WDT", "WP", "WRB", "UH",
    "PDT", "POS", "RP", "FW", "LS", "WP$",
} | PUNCT_TAGS


class CorpusError(ValueError):
    pass


@dataclass(frozen=True)
class Token:
    index: int  # 1-based within the sentence
    surface: str
    pos: str

    @property
    def is_noun(self) -> bool:
        return self.pos in ("NN", "NNS")

    @property
    def is_adjective(self) -> bool:
        return self.pos in ("JJ", "JJR", "JJS")

    @property
    def is_adverb(self) -> bool:
        return self.pos in ("RB", "RBR", "RBS")

    @property
    def is_verb(self) -> bool:
        return self.pos.startswith("VB")

    @property
    def is_punct(self) -> bool:
        return self.pos in PUNCT_TAGS


@dataclass(frozen=True)
class DependencyArc:
    head: int  # 0 = root
    dependent: int
    relation: str


@dataclass
class Sentence:
    tokens: list[Token]
    arcs: list[DependencyArc]
    sent_id: str = ""
    gold: list[str] | None = None  # optional per-token F/O/DO/N labels

    def __post_init__(self) -> None:
        self._validate_tree()
        self._head: dict[int, tuple[int, str]] = {
            a.dependent: (a.head, a.relation) for a in self.arcs
        }
        self._children: dict[int, list[tuple[int, str]]] = {}
        for a in self.arcs:
            self._children.setdefault(a.head, []).append((a.dependent, a.relation))

    def _validate_tree(self) -> None:
        n = len(self.tokens)
        indices = [t.index for t in self.tokens]
        if indices != list(range(1, n + 1)):
            raise CorpusError(f"sentence {self.sent_id!r}: token indices not contiguous")
        if len(self.arcs) != n:
            raise CorpusError(
                f"sentence {self.sent_id!r}: expected {n} arcs, got {len(self.arcs)}"
            )
        seen = set()
        for a in self.arcs:
            if a.dependent in seen:
                raise CorpusError(
                    f"sentence {self.sent_id!r}: token {a.dependent} has multiple heads"
                )
            seen.add(a.dependent)
            if not (0 <= a.head <= n) or not (1 <= a.dependent <= n):
                raise CorpusError(f"sentence {self.sent_id!r}: arc index out of range")
        # single root, no cycles: walk each node up to 0
        roots = [a.dependent for a in self.arcs if a.head == 0]
        if len(roots) != 1:
            raise CorpusError(f"sentence {self.sent_id!r}: expected 1 root, got {len(roots)}")
        head_of = {a.dependent: a.head for a in self.arcs}
        for start in head_of:
            node, steps = start, 0
            while node != 0:
                node = head_of[node]
                steps += 1
                if steps > n:
                    raise CorpusError(f"sentence {self.sent_id!r}: cyclic dependency arcs")

    def token(self, index: int) -> Token:
        return self.tokens[index - 1]

    def head_of(self, index: int) -> tuple[int, str]:
        """(head index, relation) for a token; head 0 means root."""
        return self._head[index]

    def children_of(self, index: int) -> list[tuple[int, str]]:
        return self._children.get(index, [])

    def surface_lower(self, index: int) -> str:
        return self.token(index).surface.lower()


@dataclass
class ParsedReview:
    review_id: str
    product_id: str
    stars: int
    date: dt.date
    holder: str
    sentences: list[Sentence]

    def __post_init__(self) -> None:
        if self.stars not in (1, 2, 3, 4, 5):
            raise CorpusError(f"review {self.review_id!r}: stars must be 1..5")


PathStep = tuple[int, str, str]  # (token index, relation, "up" | "down")


def dependency_path(s: Sentence, a: int, b: int) -> list[PathStep]:
    """Unique undirected tree path from a to b.

    Each step is (token reached, relation traversed, direction): "up" when
    moving from dependent to head, "down" when moving head to dependent.
    """
    if a == b:
        return []

    def ancestors(x: int) -> list[tuple[int, str]]:
        out = []
        node = x
        while node != 0:
            head, rel = s.head_of(node)
            out.append((node, rel))
            node = head
        return out

    up_a = ancestors(a)  # (node, rel-to-head) from a upward
    up_b = ancestors(b)
    chain_a = [n for n, _ in up_a] + [0]
    chain_b = {n for n, _ in up_b} | {0}
    lca = next(n for n in chain_a if n in chain_b)

    steps: list[PathStep] = []
    for node, rel in up_a:
        if node == lca:
            break
        head, _ = s.head_of(node)
        steps.append((head, rel, "up"))
    down_part: list[PathStep] = []
    for node, rel in up_b:
        if node == lca:
            break
        down_part.append((node, rel, "down"))
    steps.extend(reversed(down_part))
    return steps


def path_length(s: Sentence, a: int, b: int) -> int:
    return len(dependency_path(s, a, b))


def _parse_conllu_sentences(text: str, path: str) -> Iterator[tuple[str, str, Sentence]]:
    """Yield (review_id, sent_id, Sentence) blocks from CoNLL-U text."""
    review_id = ""
    sent_id = ""
    rows: list[tuple[int, str, str, int, str, str]] = []
    warned: set[str] = set()

    def flush() -> Optional[Sentence]:
        nonlocal rows
        if not rows:
            return None
        tokens = [Token(i, surface, pos) for i, surface, pos, _, _, _ in rows]
        arcs = [DependencyArc(head, i, rel) for i, _, _, head, rel, _ in rows]
        gold = [g for *_, g in rows]
        sent = Sentence(
            tokens, arcs, sent_id=sent_id, gold=gold if any(gold) else None
        )
        rows = []
        return sent

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip():
            sent = flush()
            if sent is not None:
                yield review_id, sent_id, sent
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("review_id"):
                review_id = body.split("=", 1)[1].strip()
            elif body.startswith("sent_id"):
                sent_id = body.split("=", 1)[1].strip()
            continue
        cols = line.split("\t")
        if len(cols) < 8:
            raise CorpusError(f"{path}:{lineno}: expected 10 CoNLL-U columns")
        if "-" in cols[0] or "." in cols[0]:
            continue  # multiword/empty nodes are ignored
        index = int(cols[0])
        surface = cols[1]
        pos = cols[4] if cols[4] != "_" else cols[3]
        if pos not in KNOWN_POS and pos not in warned:
            warned.add(pos)
            import sys

            print(f"warning: {path}:{lineno}: unknown POS tag {pos!r}", file=sys.stderr)
        head = int(cols[6])
        rel = cols[7]
        gold = ""
        if len(cols) >= 10 and cols[9] not in ("_", ""):
            for item in cols[9].split("|"):
                if item.startswith("Gold="):
                    gold = item.split("=", 1)[1]
        rows.append((index, surface, pos, head, rel, gold))
    sent = flush()
    if sent is not None:
        yield review_id, sent_id, sent


def read_corpus(conllu_path: str | Path, meta_path: str | Path) -> list[ParsedReview]:
    """Load a parsed corpus and pair every review with its metadata."""
    meta: dict[str, dict] = {}
    meta_text = Path(meta_path).read_text(encoding="utf-8")
    for lineno, line in enumerate(meta_text.splitlines(), 1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"{meta_path}:{lineno}: bad JSON ({exc})") from exc
        meta[obj["review_id"]] = obj

    grouped: dict[str, list[Sentence]] = {}
    order: list[str] = []
    for review_id, _, sent in _parse_conllu_sentences(
        Path(conllu_path).read_text(encoding="utf-8"), str(conllu_path)
    ):
        if not review_id:
            raise CorpusError(f"{conllu_path}: sentence outside any review block")
        if review_id not in grouped:
            grouped[review_id] = []
            order.append(review_id)
        grouped[review_id].append(sent)

    reviews = []
    for review_id in order:
        if review_id not in meta:
            raise CorpusError(f"review {review_id!r} missing from {meta_path}")
        m = meta[review_id]
        reviews.append(
            ParsedReview(
                review_id=review_id,
                product_id=m["product_id"],
                stars=int(m["stars"]),
                date=dt.date.fromisoformat(m["date"]),
                holder=m.get("holder", ""),
                sentences=grouped[review_id],
            )
        )
    return reviews
