"""Dependency-relation taxonomy and the twelve extraction rules.

Rules consume known opinion/feature token sets and emit ExtractionHits:
new features from opinions (R1), new opinions from features (R2), new
features from features (R3), new opinions from opinions (R4), plus the
composite long-distance rules R5 and R6.  Rule traversal is restricted to
the relation set MR wherever a rule demands it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .lexicon import Lexicon
from .review_model import Sentence, dependency_path

MR = frozenset({"nn", "nsubj", "amod", "advmod", "prep", "pobj", "dobj", "conj", "dep"})

# Tokens never extracted as features even under a noisy NN tag.
STOP_SURFACES = frozenset({
    "i", "you", "he", "she", "it", "we", "they", "me", "him", "her", "us",
    "them", "this", "that", "these", "those", "which", "who", "whom", "what",
    "anybody", "anyone", "anything", "something", "someone", "one", "some",
    "all", "any", "none", "thing", "things",
})

# Adverbs that are degree carriers or connectives, never opinions themselves,
# plus light/copular/reporting verbs that carry no sentiment.
OPINION_STOP = frozenset({
    "n't", "not", "so", "also", "too", "very", "just", "overall", "still",
    "even", "yet", "then", "thus", "later", "again", "already", "about",
    "be", "is", "are", "was", "were", "been", "being", "am",
    "have", "has", "had", "having", "do", "does", "did", "done",
    "get", "gets", "got", "gotten", "take", "takes", "took", "taken",
    "make", "makes", "made", "go", "goes", "went", "gone", "use", "uses",
    "used", "using", "look", "looks", "looked", "want", "wants", "wanted",
    "see", "sees", "saw", "seen", "say", "says", "said", "read", "reads",
    "come", "comes", "came", "know", "knows", "knew", "think", "thinks",
    "thought", "save", "saves", "saved", "create", "creates", "created",
    "put", "give", "gives", "gave", "seem", "seems", "seemed",
    "buy", "buys", "bought", "keep", "keeps", "kept",
})


class RelationClass(Enum):
    EDR_DIRECT = "EDR_direct"
    EDR_INDIRECT = "EDR_indirect"
    IDR = "IDR"


class RuleId(Enum):
    R1_1 = "R1_1"
    R1_2 = "R1_2"
    R1_3 = "R1_3"
    R2_1 = "R2_1"
    R2_2 = "R2_2"
    R2_3 = "R2_3"
    R3_1 = "R3_1"
    R3_2 = "R3_2"
    R3_3 = "R3_3"
    R4_1 = "R4_1"
    R4_2 = "R4_2"
    R5_1 = "R5_1"
    R6_1 = "R6_1"


LinkKind = str  # "FO" | "OF" | "FF" | "OO"


@dataclass(frozen=True)
class ExtractionHit:
    rule: RuleId
    seeds: tuple[int, ...]
    extracted: int
    middles: tuple[int, ...] = ()
    link: LinkKind = "FO"
    derived: bool = False

    def endpoints(self) -> tuple[int, int]:
        return (self.seeds[0], self.extracted)


def classify_relation(s: Sentence, a: int, b: int) -> RelationClass:
    """EDR_direct: adjacent; EDR_indirect: one middle word; IDR: the rest."""
    if a == b:
        raise ValueError("classify_relation needs two distinct tokens")
    middles = len(dependency_path(s, a, b)) - 1
    if middles == 0:
        return RelationClass.EDR_DIRECT
    if middles == 1:
        return RelationClass.EDR_INDIRECT
    return RelationClass.IDR


def _neighbors(s: Sentence, x: int) -> list[tuple[int, str, str]]:
    """(other token, relation, direction) for every arc touching x."""
    out = []
    head, rel = s.head_of(x)
    if head != 0:
        out.append((head, rel, "up"))
    for child, rel in s.children_of(x):
        out.append((child, rel, "down"))
    return out


def _two_step(s: Sentence, x: int) -> list[tuple[int, int, str, str, str]]:
    """Distance-2 contexts: (middle, other, rel1, rel2, shape).

    shape is "chain" when both steps go the same direction and "shared"
    when x and the other token both depend on the middle (common head).
    """
    out = []
    for h, rel1, d1 in _neighbors(s, x):
        for y, rel2, d2 in _neighbors(s, h):
            if y == x:
                continue
            if d1 == d2:
                out.append((h, y, rel1, rel2, "chain"))
            elif d1 == "up" and d2 == "down":
                out.append((h, y, rel1, rel2, "shared"))
    return out


def _feature_ok(s: Sentence, idx: int) -> bool:
    t = s.token(idx)
    return t.is_noun and s.surface_lower(idx) not in STOP_SURFACES


def _opinion_ok(s: Sentence, idx: int, lex: Lexicon) -> bool:
    t = s.token(idx)
    if not (t.is_adjective or t.is_adverb or t.is_verb):
        return False
    w = s.surface_lower(idx)
    return w not in OPINION_STOP and lex.lookup_intensifier(w) is None


def apply_rule(
    rule: RuleId,
    s: Sentence,
    known_opinions: set[int],
    known_features: set[int],
    lex: Lexicon,
) -> list[ExtractionHit]:
    """Run one Table-7 rule over a sentence; empty list when nothing fires."""
    hits: list[ExtractionHit] = []

    def add(seeds, extracted, middles, link):
        if extracted in seeds:
            return
        hit = ExtractionHit(rule, tuple(seeds), extracted, tuple(middles), link)
        if hit not in hits:
            hits.append(hit)

    if rule is RuleId.R1_1:
        for o in sorted(known_opinions):
            for f, rel, _ in _neighbors(s, o):
                if rel in MR and _feature_ok(s, f):
                    add([o], f, [], "FO")

    elif rule is RuleId.R1_2:
        for o in sorted(known_opinions):
            for h, f, rel1, rel2, shape in _two_step(s, o):
                if shape != "shared":
                    continue
                if rel1 in MR and rel2 in MR and _feature_ok(s, f) and h not in known_opinions and h not in known_features:
                    add([o], f, [h], "FO")

    elif rule is RuleId.R1_3:
        for o in sorted(known_opinions):
            for h, f, rel1, rel2, shape in _two_step(s, o):
                if shape != "chain":
                    continue
                if rel1 in MR and rel2 in MR and _feature_ok(s, f) and h not in known_opinions and h not in known_features:
                    add([o], f, [h], "FO")

    elif rule is RuleId.R2_1:
        for f in sorted(known_features):
            for o, rel, _ in _neighbors(s, f):
                if rel in MR and _opinion_ok(s, o, lex):
                    add([f], o, [], "OF")

    elif rule is RuleId.R2_2:
        for f in sorted(known_features):
            for h, o, rel1, rel2, shape in _two_step(s, f):
                if shape != "shared":
                    continue
                if rel1 in MR and rel2 in MR and _opinion_ok(s, o, lex) and h not in known_opinions and h not in known_features:
                    add([f], o, [h], "OF")

    elif rule is RuleId.R2_3:
        for f in sorted(known_features):
            for h, o, rel1, rel2, shape in _two_step(s, f):
                if shape != "chain":
                    continue
                if rel1 in MR and rel2 in MR and _opinion_ok(s, o, lex) and h not in known_opinions and h not in known_features:
                    add([f], o, [h], "OF")

    elif rule is RuleId.R3_1:
        for f in sorted(known_features):
            for g, rel, _ in _neighbors(s, f):
                if rel == "conj" and _feature_ok(s, g):
                    add([f], g, [], "FF")

    elif rule is RuleId.R3_2:
        for f in sorted(known_features):
            for g, rel, _ in _neighbors(s, f):
                if rel == "nn" and _feature_ok(s, g):
                    add([f], g, [], "FF")

    elif rule is RuleId.R3_3:
        for f in sorted(known_features):
            for h, g, rel1, rel2, shape in _two_step(s, f):
                if rel1 in MR and rel2 in MR and _feature_ok(s, g) \
                        and h not in known_opinions and not _feature_ok(s, h):
                    add([f], g, [h], "FF")

    elif rule is RuleId.R4_1:
        for o in sorted(known_opinions):
            for p, rel, _ in _neighbors(s, o):
                if rel == "advmod" and s.token(p).is_adverb and _opinion_ok(s, p, lex):
                    add([o], p, [], "OO")
                elif rel == "conj" and _opinion_ok(s, p, lex):
                    add([o], p, [], "OO")

    elif rule is RuleId.R4_2:
        for o in sorted(known_opinions):
            head, rel = s.head_of(o)
            if head == 0 or rel not in MR:
                continue
            for sib, rel2 in s.children_of(head):
                if sib == o or rel2 != rel:
                    continue
                if s.token(sib).is_adjective and _opinion_ok(s, sib, lex):
                    add([o], sib, [head], "OO")

    elif rule is RuleId.R5_1:
        first = apply_rule(RuleId.R1_1, s, known_opinions, known_features, lex)
        for h1 in first:
            bridge = {h1.extracted}
            for r3 in (RuleId.R3_2, RuleId.R3_3):
                for h2 in apply_rule(r3, s, known_opinions | {h1.seeds[0]}, bridge, lex):
                    add([h1.seeds[0], h1.extracted], h2.extracted,
                        h2.middles, "FO")

    elif rule is RuleId.R6_1:
        first = apply_rule(RuleId.R1_1, s, known_opinions, known_features, lex)
        for h1 in first:
            bridge = {h1.extracted}
            for r2 in (RuleId.R2_2, RuleId.R2_3):
                for h2 in apply_rule(r2, s, known_opinions, bridge, lex):
                    if h2.extracted in known_opinions:
                        continue
                    add([h1.seeds[0], h1.extracted], h2.extracted, h2.middles, "OO")

    else:
        raise ValueError(f"unknown rule {rule}")

    return hits


def apply_rules(
    rules: list[RuleId],
    s: Sentence,
    known_opinions: set[int],
    known_features: set[int],
    lex: Lexicon,
) -> list[ExtractionHit]:
    out: list[ExtractionHit] = []
    for r in rules:
        out.extend(apply_rule(r, s, known_opinions, known_features, lex))
    return out


def transitive_lift(s: Sentence, hits: list[ExtractionHit]) -> list[ExtractionHit]:
    """Derive direct links A-C from A-B, B-C hits whose tree steps share a
    direction, so conjunction chains like easy-nice-button bind A to C.

    A hit's link kind names the extracted word's role first, the seed's
    second (FO: extracted feature, seed opinion), which gives each
    endpoint a role for composing the derived link.
    """

    def step_dir(a: int, b: int) -> str | None:
        if s.head_of(a)[0] == b:
            return "up"
        if s.head_of(b)[0] == a:
            return "down"
        return None

    # undirected adjacency with per-endpoint roles
    role: dict[tuple[int, int], str] = {}
    adjacent: dict[int, set[int]] = {}
    for h in hits:
        if h.middles:
            continue
        seed, extracted = h.seeds[0], h.extracted
        role[(seed, extracted)] = h.link[1]
        role[(extracted, seed)] = h.link[0]
        adjacent.setdefault(seed, set()).add(extracted)
        adjacent.setdefault(extracted, set()).add(seed)

    out = list(hits)
    existing = {frozenset(h.endpoints()) for h in hits}
    for a in sorted(adjacent):
        for b in sorted(adjacent[a]):
            d1 = step_dir(a, b)
            if d1 is None:
                continue
            for c in sorted(adjacent.get(b, ())):
                if c == a or frozenset((a, c)) in existing:
                    continue
                if step_dir(b, c) != d1:
                    continue
                existing.add(frozenset((a, c)))
                link = role[(c, b)] + role[(a, b)]
                out.append(ExtractionHit(RuleId.R5_1, (a,), c, (b,), link, derived=True))
    return out
