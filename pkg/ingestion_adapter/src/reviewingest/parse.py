"""Built-in heuristic sentence splitter, POS tagger, and dependency parser.

The adapter's parser is pluggable: any callable ``text -> list[ParsedSentence]``
works (see ``adapter.parse_corpus``).  This module provides the default
implementation, a deterministic rule-based tagger/parser with no model
downloads, emitting Penn-style POS tags and Stanford-style dependency
labels.  Output from parsers that use Universal Dependencies labels can
be normalized with the bundled label map (``data/label_map.json``).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path

LABEL_MAP_PATH = Path(__file__).parent / "data" / "label_map.json"


@dataclass(frozen=True)
class ParsedToken:
    surface: str
    pos: str


@dataclass
class ParsedSentence:
    tokens: list[ParsedToken]
    arcs: list[tuple[int, int, str]]  # (head, dependent, relation); head 0 = root


def load_label_map() -> dict[str, str]:
    """Universal-Dependencies-style label -> Stanford-style label."""
    return json.loads(LABEL_MAP_PATH.read_text(encoding="utf-8"))


def map_labels(sentence: ParsedSentence, label_map: dict[str, str]) -> ParsedSentence:
    arcs = [(h, d, label_map.get(rel, rel)) for h, d, rel in sentence.arcs]
    return ParsedSentence(sentence.tokens, arcs)


_SENT_BOUNDARY = re.compile(r"(?<=[.!?])\s+")
_TOKEN = re.compile(r"[A-Za-z0-9]+(?:'[A-Za-z]+)?|[^\w\s]")

_PUNCT = {".", ",", "!", "?", ";", ":", "(", ")", '"', "'"}
_DETERMINERS = {"the", "a", "an", "this", "that", "these", "those", "some", "any"}
_PRONOUNS = {"i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us", "them"}
_POSS_PRONOUNS = {"my", "your", "his", "its", "our", "their"}
_PREPOSITIONS = {
    "in", "on", "at", "for", "with", "of", "from", "by", "about",
    "over", "under", "after", "before", "as", "since", "into",
}
_CONJUNCTIONS = {"and", "or", "but"}
_MODALS = {"can", "could", "will", "would", "should", "may", "might", "must"}
_COPULAS = {"is": "VBZ", "are": "VBP", "was": "VBD", "were": "VBD",
            "am": "VBP", "be": "VB", "been": "VBN", "being": "VBG"}
_AUX_VERBS = {"has": "VBZ", "have": "VBP", "had": "VBD",
              "does": "VBZ", "do": "VBP", "did": "VBD"}
_ADVERBS = {
    "very", "so", "not", "too", "really", "quite", "extremely", "highly",
    "pretty", "barely", "hardly", "never", "also", "just", "only", "even",
    "n't", "much", "still", "again", "here", "there", "now",
}
_VERB_STEMS = {
    "take", "recommend", "love", "like", "use", "work", "buy", "hold",
    "want", "need", "make", "get", "give", "find", "say", "see", "know",
    "think", "go", "come", "look", "keep", "put", "read", "enjoy",
}
_ADJECTIVES = {
    "good", "great", "bad", "nice", "easy", "simple", "friendly",
    "excellent", "cheap", "expensive", "light", "small", "big", "new",
    "old", "high", "low", "happy", "fast", "slow", "heavy", "sharp",
    "clear", "user", "digital", "neat", "annoyed",
}
_ADJ_SUFFIXES = ("ful", "ous", "ive", "able", "ible", "ical")


def split_sentences(text: str) -> list[str]:
    text = re.sub(r"\s+", " ", text).strip()
    return [s for s in _SENT_BOUNDARY.split(text) if s]


def tokenize(sentence: str) -> list[str]:
    out = []
    for tok in _TOKEN.findall(sentence):
        low = tok.lower()
        if low.endswith("n't") and len(tok) > 3:
            out.append(tok[:-3])
            out.append(tok[-3:])
        elif low.endswith("'s") and len(tok) > 2:
            out.append(tok[:-2])
            out.append(tok[-2:])
        else:
            out.append(tok)
    return out


def tag(tokens: list[str]) -> list[str]:
    tags = []
    for i, tok in enumerate(tokens):
        low = tok.lower()
        if tok in _PUNCT:
            tags.append(tok if tok in (".", ",") else ":")
        elif low in _DETERMINERS:
            tags.append("DT")
        elif low in _PRONOUNS:
            tags.append("PRP")
        elif low in _POSS_PRONOUNS:
            tags.append("PRP$")
        elif low == "to":
            tags.append("TO")
        elif low in _CONJUNCTIONS:
            tags.append("CC")
        elif low in _MODALS:
            tags.append("MD")
        elif low in _COPULAS:
            tags.append(_COPULAS[low])
        elif low in _AUX_VERBS:
            tags.append(_AUX_VERBS[low])
        elif low in _ADJECTIVES or low.endswith(_ADJ_SUFFIXES):
            tags.append("JJ")
        elif low in _ADVERBS or low.endswith("ly"):
            tags.append("RB")
        elif low in _PREPOSITIONS:
            tags.append("IN")
        elif low in _VERB_STEMS:
            tags.append("VBP")
        elif low.endswith("s") and low[:-1] in _VERB_STEMS:
            tags.append("VBZ")
        elif low.endswith("ing") and len(low) > 5:
            tags.append("VBG")
        elif low.endswith("ed") and len(low) > 4:
            tags.append("VBD")
        elif any(c.isdigit() for c in tok) or (i > 0 and tok[:1].isupper()):
            tags.append("NNP")
        elif low.endswith("s") and not low.endswith("ss") and len(low) > 3:
            tags.append("NNS")
        else:
            tags.append("NN")
    return tags


def _noun_chunks(tags: list[str]) -> list[tuple[int, int]]:
    """Maximal runs of noun tags as (start, end) 0-based inclusive spans."""
    chunks = []
    i = 0
    while i < len(tags):
        if tags[i] in ("NN", "NNS", "NNP", "NNPS", "PRP"):
            j = i
            while j + 1 < len(tags) and tags[j + 1] in ("NN", "NNS", "NNP", "NNPS"):
                j += 1
            chunks.append((i, j))
            i = j + 1
        else:
            i += 1
    return chunks


def parse_sentence(sentence: str) -> ParsedSentence:
    """Heuristic head assignment producing a single-rooted tree."""
    tokens = tokenize(sentence)
    tags = tag(tokens)
    n = len(tokens)
    head = [None] * n  # 0-based position of head, or -1 for root
    rel = [None] * n

    def attach(dep: int, hd: int, relation: str) -> None:
        if head[dep] is None and dep != hd:
            head[dep] = hd
            rel[dep] = relation

    chunks = _noun_chunks(tags)
    chunk_head = {}  # start index -> head index of that chunk
    for start, end in chunks:
        chunk_head[start] = end
        for k in range(start, end):
            attach(k, end, "nn")

    def owning_chunk_head(i: int):
        for start, end in chunks:
            if start <= i <= end:
                return end
        return None

    # root selection: main verb, else copular predicate adjective, else
    # last noun-chunk head, else the first token
    verb_idx = next(
        (i for i, t in enumerate(tags)
         if t.startswith("VB") and tokens[i].lower() not in _COPULAS),
        None,
    )
    copula_idx = next(
        (i for i, tok in enumerate(tokens) if tok.lower() in _COPULAS), None
    )
    pred_adj = None
    if verb_idx is None and copula_idx is not None:
        # last adjective of the predicate, e.g. "very user friendly"
        adjs = [i for i in range(copula_idx + 1, n) if tags[i] == "JJ"]
        pred_adj = adjs[-1] if adjs else None
    if verb_idx is not None:
        root = verb_idx
    elif pred_adj is not None:
        root = pred_adj
        attach(copula_idx, root, "cop")
    elif chunks:
        root = chunks[-1][1]
    else:
        root = 0

    # adjectives: attach to the next noun chunk if one starts within two
    # tokens, otherwise to the root (predicative)
    for i in range(n):
        if tags[i] in ("JJ", "JJR", "JJS") and i != root:
            target = None
            for start, end in chunks:
                if 0 <= start - i <= 3 and all(
                    tags[k] in ("JJ", "JJR", "JJS", "RB", "CC", ",")
                    for k in range(i + 1, start)
                ):
                    target = end
                    break
            if target is not None:
                attach(i, target, "amod")
            else:
                # coordination with an earlier adjective, e.g. "light and easy"
                prev_adj = next(
                    (j for j in range(i - 1, -1, -1) if tags[j] == "JJ"), None
                )
                if prev_adj is not None and any(
                    tags[k] == "CC" for k in range(prev_adj + 1, i)
                ):
                    attach(i, prev_adj, "conj")
                else:
                    attach(i, root, "acomp" if tags[root].startswith("VB") else "dep")

    # adverbs: attach to the next adjective/verb, else the previous one
    for i in range(n):
        if tags[i].startswith("RB"):
            nxt = next(
                (j for j in range(i + 1, n)
                 if tags[j].startswith(("JJ", "VB"))), None
            )
            prv = next(
                (j for j in range(i - 1, -1, -1)
                 if tags[j].startswith(("JJ", "VB"))), None
            )
            target = nxt if nxt is not None else prv
            if target is not None:
                attach(i, target, "advmod")
            else:
                attach(i, root, "advmod")

    # determiners / possessives to the next chunk head
    for i in range(n):
        if tags[i] in ("DT", "PRP$"):
            nxt = next((end for start, end in chunks if start > i), None)
            attach(i, nxt if nxt is not None else root, "det")

    # prepositions: prep to the root, pobj from the following chunk
    for i in range(n):
        if tags[i] == "IN":
            attach(i, root, "prep")
            nxt = next((end for start, end in chunks if start > i), None)
            if nxt is not None:
                attach(nxt, i, "pobj")

    # infinitival "to VERB" after the root, e.g. "simple to use"
    for i in range(n - 1):
        if tags[i] == "TO" and tags[i + 1].startswith("VB") and i + 1 != root:
            attach(i, i + 1, "aux")
            attach(i + 1, root, "xcomp")

    # noun chunks around a verbal root: subject before, object after;
    # conjoined chunks hang off the previous chunk
    if tags[root].startswith("VB"):
        pre = [end for start, end in chunks if end < root and head[end] is None]
        if pre:
            attach(pre[-1], root, "nsubj")
        post = [end for start, end in chunks if end > root and head[end] is None]
        for k, end in enumerate(post):
            attach(end, root, "dobj" if k == 0 else "dep")
    else:
        pre = [end for start, end in chunks if end < root and head[end] is None]
        if pre:
            attach(pre[-1], root, "nsubj")
    for (s1, e1), (s2, e2) in zip(chunks, chunks[1:]):
        if any(tags[k] == "CC" for k in range(e1 + 1, s2)):
            if head[e2] is None:
                attach(e2, e1, "conj")

    # everything else (incl. punctuation and stray tokens) to the root
    for i in range(n):
        if i == root:
            continue
        if head[i] is None:
            attach(i, root, "punct" if tokens[i] in _PUNCT else "dep")
    head[root] = -1
    rel[root] = "root"

    # break any accidental cycles by re-rooting the offending token
    for start in range(n):
        seen = set()
        node = start
        while node != -1:
            if node in seen:
                head[start], rel[start] = root, "dep"
                break
            seen.add(node)
            node = head[node]

    arcs = [
        (head[i] + 1 if head[i] >= 0 else 0, i + 1, rel[i]) for i in range(n)
    ]
    return ParsedSentence([ParsedToken(t, p) for t, p in zip(tokens, tags)], arcs)


def parse_text(text: str) -> list[ParsedSentence]:
    """Default parser entry point: sentence-split, tag, and parse."""
    return [parse_sentence(s) for s in split_sentences(text)]
