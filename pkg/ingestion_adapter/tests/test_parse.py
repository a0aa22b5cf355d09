"""Heuristic tagger/parser: tokenization, tagging, and tree validity."""

import random

from reviewingest.parse import (
    ParsedSentence,
    load_label_map,
    map_labels,
    parse_sentence,
    parse_text,
    split_sentences,
    tag,
    tokenize,
)


def test_sentence_splitting():
    got = split_sentences("Great camera!  Takes good photos. Buy it?")
    assert got == ["Great camera!", "Takes good photos.", "Buy it?"]


def test_splitting_keeps_decimals_together():
    assert split_sentences("A 12.1 MP sensor. Nice.") == ["A 12.1 MP sensor.", "Nice."]


def test_tokenize_clitics():
    assert tokenize("I haven't liked the camera's menu.") == [
        "I", "have", "n't", "liked", "the", "camera", "'s", "menu", ".",
    ]


def test_tagging_basics():
    tokens = tokenize("The zoom is great and I really like it.")
    tags = tag(tokens)
    assert dict(zip(tokens, tags)) == {
        "The": "DT", "zoom": "NN", "is": "VBZ", "great": "JJ", "and": "CC",
        "I": "PRP", "really": "RB", "like": "VBP", "it": "PRP", ".": ".",
    }


def test_reference_parse_good_photos():
    s = parse_sentence("Canon PowerShot SX510 takes good photos.")
    arcs = {d: (h, rel) for h, d, rel in s.arcs}
    surfaces = [t.surface for t in s.tokens]
    assert surfaces == ["Canon", "PowerShot", "SX510", "takes", "good", "photos", "."]
    assert arcs[5] == (6, "amod")   # good -> photos
    assert arcs[6] == (4, "dobj")   # photos -> takes
    assert arcs[3] == (4, "nsubj")  # SX510 -> takes
    assert arcs[4] == (0, "root")


def test_copular_parse():
    s = parse_sentence("The wifi feature is very user friendly.")
    arcs = {d: (h, rel) for h, d, rel in s.arcs}
    root = next(d for d, (h, _) in arcs.items() if h == 0)
    assert s.tokens[root - 1].surface == "friendly"
    # "wifi feature" forms a noun compound headed by the subject
    assert arcs[2] == (3, "nn")
    assert arcs[3][1] == "nsubj"


def _is_valid_tree(s: ParsedSentence) -> bool:
    n = len(s.tokens)
    if len(s.arcs) != n:
        return False
    head = {}
    for h, d, _ in s.arcs:
        if d in head or not (0 <= h <= n) or not (1 <= d <= n) or h == d:
            return False
        head[d] = h
    if sum(1 for h in head.values() if h == 0) != 1:
        return False
    for start in head:
        node, steps = start, 0
        while node != 0:
            node = head[node]
            steps += 1
            if steps > n:
                return False
    return True


def test_random_text_always_yields_valid_trees():
    vocab = ["the", "camera", "is", "great", "good", "photos", "takes",
             "very", "and", "I", "recommend", "battery", "not", "12.1",
             "PowerShot", "to", "use", "in", "light", "works", "!", ","]
    rng = random.Random(9)
    for _ in range(2000):
        text = " ".join(rng.choice(vocab) for _ in range(rng.randint(1, 15))) + "."
        for s in parse_text(text):
            assert _is_valid_tree(s), text


def test_parse_is_deterministic():
    text = "The camera takes great pictures in low and artificial light."
    a = parse_text(text)
    b = parse_text(text)
    assert [s.arcs for s in a] == [s.arcs for s in b]
    assert [[t.surface for t in s.tokens] for s in a] == [
        [t.surface for t in s.tokens] for s in b
    ]


def test_label_map_normalizes_ud_labels():
    label_map = load_label_map()
    s = ParsedSentence(
        tokens=parse_sentence("good photos").tokens,
        arcs=[(2, 1, "amod"), (0, 2, "root")],
    )
    mapped = map_labels(
        ParsedSentence(s.tokens, [(2, 1, "compound"), (0, 2, "root")]), label_map
    )
    assert mapped.arcs == [(2, 1, "nn"), (0, 2, "root")]
