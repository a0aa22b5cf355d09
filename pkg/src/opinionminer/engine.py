"""Feature/opinion extraction engine and kernel builder.

Runs the double-propagation loop over a parsed review: seed opinion
words and intensifiers from the dictionaries, expand opinions along
conjunctions (R4), pull in features (R1), then iterate R3/R2/R1 on the
newly found words until no unseen feature surface remains.  Token
clusters are then folded into kernels (two layers, never more) and each
kernel group becomes one opinion triple carrying a fuzzy polarity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .fuzzy import (
    DegreeLevel,
    FuzzyTriple,
    ReviewWeight,
    combine_case1,
    combine_case2,
    defuzzify,
    review_weight,
)
from .lexicon import IntensifierEntry, Lexicon, OpinionEntry
from .review_model import ParsedReview, Sentence, dependency_path, path_length
from .rules import (
    ExtractionHit,
    RuleId,
    STOP_SURFACES,
    apply_rule,
    classify_relation,
    transitive_lift,
)

# Relations that bind two words into the same first-layer kernel: noun
# compounds, conjunction, and plain adjacent modification.
L1_RELATIONS = frozenset({"nn", "conj", "amod", "advmod"})

# Degree level assigned to opinion words discovered by rules but absent
# from the dictionary.
DEFAULT_NEW_WORD_LEVEL = 3


@dataclass(frozen=True)
class IntensifierSpan:
    """A matched intensifier occurrence bound to its nearest target token."""

    sentence: int
    start: int
    end: int  # inclusive
    entry: IntensifierEntry
    target: Optional[int] = None  # token index of the bound opinion/feature

    @property
    def tokens(self) -> tuple[int, ...]:
        return tuple(range(self.start, self.end + 1))


@dataclass(frozen=True)
class TraceRow:
    """One propagation event: which rule fired at which algorithm step."""

    step: str  # seed | expand | features | propagate | kernels
    rule: str
    sentence: int
    extracted: str
    seed: str = ""


@dataclass
class OpinionTriple:
    """One (intensifier, opinion kernel, feature kernel) unit of a review."""

    sentence: int
    intensifiers: list[str]
    opinions: list[str]
    features: list[str]
    fuzzy: FuzzyTriple
    scalar: float
    frequency: int
    relations: list[dict] = field(default_factory=list)

    @staticmethod
    def _slot(words: list[str]) -> str:
        if not words:
            return "null"
        if len(words) == 1:
            return words[0]
        return "<" + ", ".join(words) + ">"

    def render(self) -> str:
        return "({}, {}, {})".format(
            self._slot(self.intensifiers),
            self._slot(self.opinions),
            self._slot(self.features),
        )


@dataclass
class SentenceExtraction:
    opinions: set[int]
    features: set[int]
    hits: list[ExtractionHit]
    spans: list[IntensifierSpan]
    layer1: list[list[int]] = field(default_factory=list)
    layer2: list[list[int]] = field(default_factory=list)


@dataclass
class ReviewExtraction:
    review: ParsedReview
    sentences: list[SentenceExtraction]
    triples: list[OpinionTriple]
    trace: list[TraceRow]
    weight: Optional[ReviewWeight]

    def rendered_triples(self) -> list[str]:
        return [t.render() for t in self.triples]


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def add(self, x: int) -> None:
        self.parent.setdefault(x, x)

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        self.add(a)
        self.add(b)
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def groups(self) -> list[list[int]]:
        by_root: dict[int, list[int]] = {}
        for x in self.parent:
            by_root.setdefault(self.find(x), []).append(x)
        return [sorted(v) for v in sorted(by_root.values(), key=min)]


def _scan_intensifiers(s: Sentence, lex: Lexicon) -> list[IntensifierSpan]:
    """Greedy left-to-right matching, longest multiword entries first."""
    spans: list[IntensifierSpan] = []
    multi = lex.multiword_intensifiers()
    n = len(s.tokens)
    i = 1
    while i <= n:
        hit = None
        for entry in multi:
            words = entry.word.split()
            k = len(words)
            if i + k - 1 <= n and [s.surface_lower(i + j) for j in range(k)] == words:
                hit = IntensifierSpan(0, i, i + k - 1, entry)
                break
        if hit is None:
            entry = lex.lookup_intensifier(s.surface_lower(i))
            if entry is not None and " " not in entry.word:
                hit = IntensifierSpan(0, i, i, entry)
        if hit is not None:
            spans.append(hit)
            i = hit.end + 1
        else:
            i += 1
    return spans


def _is_layer1(s: Sentence, a: int, b: int) -> bool:
    path = [rel for _, rel, _ in dependency_path(s, a, b)]
    return len(path) <= 2 and all(rel in L1_RELATIONS for rel in path)


def extract_review(
    review: ParsedReview,
    lex: Lexicon,
    new_word_level: int = DEFAULT_NEW_WORD_LEVEL,
) -> ReviewExtraction:
    """Run the full propagation algorithm over one review."""
    trace: list[TraceRow] = []
    sents = review.sentences
    eo: list[set[int]] = [set() for _ in sents]
    feats: list[set[int]] = [set() for _ in sents]
    feat_origin: list[dict[int, str]] = [{} for _ in sents]
    hits: list[list[ExtractionHit]] = [[] for _ in sents]
    spans: list[list[IntensifierSpan]] = [[] for _ in sents]
    odi_tokens: list[set[int]] = [set() for _ in sents]

    def record(si: int, step: str, rule: str, extracted: int, seed: int = 0) -> None:
        trace.append(
            TraceRow(
                step,
                rule,
                si,
                sents[si].surface_lower(extracted),
                sents[si].surface_lower(seed) if seed else "",
            )
        )

    def add_hits(si: int, step: str, new: list[ExtractionHit], target: str) -> list[int]:
        """Merge rule output; returns tokens newly added to the target set."""
        s = sents[si]
        added: list[int] = []
        pool = eo[si] if target == "opinion" else feats[si]
        for h in new:
            if h in hits[si]:
                continue
            if target == "opinion" and h.extracted in odi_tokens[si]:
                continue
            hits[si].append(h)
            if h.extracted not in pool:
                pool.add(h.extracted)
                if target == "feature":
                    feat_origin[si][h.extracted] = "rule"
                added.append(h.extracted)
                record(si, step, h.rule.value, h.extracted, h.seeds[0])
        return added

    # seed opinion words from the dictionary
    for si, s in enumerate(sents):
        for t in s.tokens:
            entry = lex.lookup_opinion(t.surface.lower())
            if entry is None:
                continue
            if t.is_adjective or t.is_adverb or t.is_verb:
                eo[si].add(t.index)
                record(si, "seed", "dict", t.index)
            elif t.is_noun and entry.nn_override:
                eo[si].add(t.index)
                feats[si].add(t.index)
                feat_origin[si][t.index] = "seed"
                record(si, "seed", "dict", t.index)
        # degree intensifiers, greedy longest match
        for sp in _scan_intensifiers(s, lex):
            sp = IntensifierSpan(si, sp.start, sp.end, sp.entry)
            spans[si].append(sp)
            odi_tokens[si].update(sp.tokens)
            record(si, "seed", "odi", sp.end)

    # expand opinion targets along conjunction/adverbial links (R4)
    for si, s in enumerate(sents):
        for rule in (RuleId.R4_1, RuleId.R4_2):
            add_hits(si, "expand", apply_rule(rule, s, eo[si], feats[si], lex), "opinion")

    # first feature harvest (R1), updating the feature set between
    # sub-rules so two-step middles are checked against fresh features
    for rule in (RuleId.R1_1, RuleId.R1_2, RuleId.R1_3):
        for si, s in enumerate(sents):
            add_hits(si, "features", apply_rule(rule, s, eo[si], feats[si], lex), "feature")

    # propagation loop: each round seeds R3 with feature tokens whose
    # surface form has not been processed yet; exclusion stops reseeding,
    # not extraction, so repeated mentions still join their kernels
    seen_surfaces: set[str] = set()
    for _ in range(sum(len(s.tokens) for s in sents) + 1):
        fresh: list[tuple[int, int]] = []
        for si, s in enumerate(sents):
            for ti in sorted(feats[si]):
                w = s.surface_lower(ti)
                if w not in seen_surfaces:
                    fresh.append((si, ti))
        if not fresh:
            break
        for si, ti in fresh:
            seen_surfaces.add(sents[si].surface_lower(ti))

        # R3: feature-to-feature, seeded by the fresh tokens only
        for rule in (RuleId.R3_1, RuleId.R3_2, RuleId.R3_3):
            for si, s in enumerate(sents):
                seeds = {ti for sj, ti in fresh if sj == si}
                if seeds:
                    add_hits(si, "propagate", apply_rule(rule, s, eo[si], seeds, lex), "feature")

        # repeated mentions of an already-known feature surface become
        # features themselves; opinions found from them count as the
        # long-distance rule R6
        for si, s in enumerate(sents):
            for t in s.tokens:
                if (
                    t.is_noun
                    and t.index not in feats[si]
                    and t.surface.lower() in seen_surfaces
                    and t.surface.lower() not in STOP_SURFACES
                ):
                    feats[si].add(t.index)
                    feat_origin[si][t.index] = "surface"

        # R2: new opinions from the full feature set
        new_ops: list[tuple[int, int]] = []
        for rule in (RuleId.R2_1, RuleId.R2_2, RuleId.R2_3):
            for si, s in enumerate(sents):
                out = apply_rule(rule, s, eo[si], feats[si], lex)
                relabel = []
                for h in out:
                    if feat_origin[si].get(h.seeds[0]) == "surface":
                        h = ExtractionHit(
                            RuleId.R6_1, h.seeds, h.extracted, h.middles, "OF", h.derived
                        )
                    relabel.append(h)
                for ti in add_hits(si, "propagate", relabel, "opinion"):
                    new_ops.append((si, ti))

        # composite long-distance rules
        for si, s in enumerate(sents):
            for rule in (RuleId.R5_1, RuleId.R6_1):
                add_hits(si, "propagate", apply_rule(rule, s, eo[si], feats[si], lex), "feature" if rule is RuleId.R5_1 else "opinion")

        # R1 again, from this round's new opinions only
        for rule in (RuleId.R1_1, RuleId.R1_2, RuleId.R1_3):
            for si, s in enumerate(sents):
                seeds = {ti for sj, ti in new_ops if sj == si}
                if seeds:
                    add_hits(si, "propagate", apply_rule(rule, s, seeds, feats[si], lex), "feature")

    # make indirect chains with uniform direction direct
    for si, s in enumerate(sents):
        hits[si] = transitive_lift(s, hits[si])

    # bind each intensifier to its nearest opinion or feature token
    for si, s in enumerate(sents):
        bound: list[IntensifierSpan] = []
        candidates = sorted(eo[si] | feats[si])
        for sp in spans[si]:
            if not candidates:
                continue
            anchor = sp.end
            target = min(
                candidates,
                key=lambda ti: (path_length(s, anchor, ti), abs(ti - anchor)),
            )
            bound.append(IntensifierSpan(si, sp.start, sp.end, sp.entry, target))
        spans[si] = bound

    sent_ex = [
        SentenceExtraction(eo[si], feats[si], hits[si], spans[si])
        for si in range(len(sents))
    ]
    triples = _build_triples(review, sent_ex, lex, new_word_level, trace)
    weight = None
    items = [(t.fuzzy, t.frequency) for t in triples]
    if items:
        weight = review_weight(items)
    return ReviewExtraction(review, sent_ex, triples, trace, weight)


def _surface_counts(review: ParsedReview) -> dict[str, int]:
    counts: dict[str, int] = {}
    for s in review.sentences:
        for t in s.tokens:
            w = t.surface.lower()
            counts[w] = counts.get(w, 0) + 1
    return counts


def _nearest_orientation(
    s: Sentence, ti: int, known: dict[int, OpinionEntry]
) -> str:
    """Orientation of the closest dictionary opinion in the sentence."""
    if not known:
        return "positive"
    best = min(known, key=lambda o: (path_length(s, ti, o), abs(o - ti)))
    return known[best].degree.orientation


def _phrase_polarity(
    base: FuzzyTriple,
    base_positive: bool,
    ordered_spans: list[IntensifierSpan],
) -> FuzzyTriple:
    """Apply stacked intensifiers: rightmost is innermost (case 1), the
    rest wrap around it left-to-right as outer modifiers (case 2)."""
    if not ordered_spans:
        return base
    inner = ordered_spans[-1]
    result = combine_case1(inner.entry.triple(), base)
    for sp in reversed(ordered_spans[:-1]):
        result = combine_case2(sp.entry.triple(), sp.entry.kind, result, base_positive)
    return result


def _build_triples(
    review: ParsedReview,
    sent_ex: list[SentenceExtraction],
    lex: Lexicon,
    new_word_level: int,
    trace: list[TraceRow],
) -> list[OpinionTriple]:
    counts = _surface_counts(review)
    triples: list[OpinionTriple] = []

    for si, ex in enumerate(sent_ex):
        s = review.sentences[si]
        members = ex.opinions | ex.features
        if not members:
            continue
        opinion_tokens = ex.opinions - ex.features  # dual-role words render as features

        # edge list with layer tags; for each opinion keep only its
        # nearest feature links so remote features fall out of the group
        edges: dict[tuple[int, int], dict] = {}
        for h in ex.hits:
            a, b = h.endpoints()
            if a not in members or b not in members:
                continue
            key = (min(a, b), max(a, b))
            if key[0] == key[1]:
                continue
            dist = path_length(s, a, b)
            rec = edges.setdefault(
                key,
                {
                    "dist": dist,
                    "layer1": _is_layer1(s, a, b),
                    "kinds": set(),
                    "rules": set(),
                },
            )
            rec["kinds"].add(h.link)
            rec["rules"].add(h.rule.value)

        kept: dict[tuple[int, int], dict] = {}
        for o in opinion_tokens:
            fo = {
                k: v
                for k, v in edges.items()
                if o in k and (set(k) - {o}).issubset(ex.features)
            }
            if not fo:
                continue
            best = min(v["dist"] for v in fo.values())
            for k, v in fo.items():
                if v["dist"] == best:
                    kept[k] = v
        for k, v in edges.items():
            a, b = k
            both_feat = a in ex.features and b in ex.features
            both_op = a in opinion_tokens and b in opinion_tokens
            if both_feat or both_op:
                kept[k] = v

        uf2 = _UnionFind()
        uf1 = _UnionFind()
        for ti in members:
            uf2.add(ti)
            uf1.add(ti)
        for (a, b), v in kept.items():
            uf2.union(a, b)
            if v["layer1"]:
                uf1.union(a, b)
        ex.layer1 = uf1.groups()
        ex.layer2 = uf2.groups()

        dict_entries = {
            o: lex.lookup_opinion(s.surface_lower(o))
            for o in ex.opinions
            if lex.lookup_opinion(s.surface_lower(o)) is not None
        }

        for group in ex.layer2:
            group_set = set(group)
            ops = sorted(o for o in group if o in opinion_tokens)
            fs = sorted(f for f in group if f in ex.features)
            group_spans = sorted(
                (sp for sp in ex.spans if sp.target in group_set),
                key=lambda sp: sp.start,
            )
            if not ops:
                # dual-role tokens (dictionary nouns like "problem") can
                # carry the polarity when no plain opinion joined
                dual = [f for f in fs if f in ex.opinions]
                if not dual:
                    continue
                ops_for_polarity = dual
            else:
                ops_for_polarity = ops

            results: list[FuzzyTriple] = []
            for o in ops_for_polarity:
                entry = dict_entries.get(o)
                if entry is not None:
                    base = entry.triple()
                    positive = entry.degree.orientation == "positive"
                else:
                    orientation = _nearest_orientation(s, o, dict_entries)
                    base = DegreeLevel(orientation, new_word_level).triple()
                    positive = orientation == "positive"
                own = [sp for sp in group_spans if sp.target == o or sp.target in fs]
                results.append(_phrase_polarity(base, positive, own))
            n = len(results)
            fz = FuzzyTriple.of(
                sum(r.L for r in results) / n,
                sum(r.M for r in results) / n,
                sum(r.U for r in results) / n,
            )

            freq = sum(counts[s.surface_lower(f)] for f in fs) if fs else 1
            relations = [
                {
                    "source": s.surface_lower(a),
                    "target": s.surface_lower(b),
                    "kinds": sorted(v["kinds"]),
                    "rules": sorted(v["rules"]),
                    "class": classify_relation(s, a, b).value,
                }
                for (a, b), v in sorted(kept.items())
                if a in group_set and b in group_set
            ]
            triples.append(
                OpinionTriple(
                    sentence=si,
                    intensifiers=[sp.entry.word for sp in group_spans],
                    opinions=[s.surface_lower(o) for o in ops],
                    features=[s.surface_lower(f) for f in fs],
                    fuzzy=fz,
                    scalar=defuzzify(fz),
                    frequency=freq,
                    relations=relations,
                )
            )

    # stable order: sentence, then leftmost member; drop exact duplicates
    keyed: list[tuple[tuple, OpinionTriple]] = []
    seen: set[tuple] = set()
    for t in triples:
        ident = (tuple(t.intensifiers), tuple(t.opinions), tuple(t.features))
        if ident in seen:
            continue
        seen.add(ident)
        keyed.append((ident, t))
    for _, t in keyed:
        trace.append(
            TraceRow("kernels", "triple", t.sentence, t.render())
        )
    return [t for _, t in keyed]


def _with_intensifiers(
    s: Sentence, members: list[int], spans: list[IntensifierSpan]
) -> list[int]:
    tokens = set(members)
    for sp in spans:
        if sp.target in tokens:
            tokens.update(sp.tokens)
    return sorted(tokens)


def first_level_kernels(ex: ReviewExtraction) -> list[str]:
    """Layer-1 kernels rendered as "(great pictures)"; singletons with no
    attached intensifier are omitted."""
    out = []
    for si, sent_ex in enumerate(ex.sentences):
        s = ex.review.sentences[si]
        for cluster in sent_ex.layer1:
            tokens = _with_intensifiers(s, cluster, sent_ex.spans)
            if len(tokens) < 2:
                continue
            out.append("(" + " ".join(s.surface_lower(t) for t in tokens) + ")")
    return out


def relation_strings(ex: ReviewExtraction) -> list[str]:
    """Layer-2 relations rendered as "<camera great pictures ...>"; groups
    that never grew past one token are omitted."""
    out = []
    for si, sent_ex in enumerate(ex.sentences):
        s = ex.review.sentences[si]
        for group in sent_ex.layer2:
            if len(group) < 2:
                continue
            tokens = _with_intensifiers(s, group, sent_ex.spans)
            out.append("<" + " ".join(s.surface_lower(t) for t in tokens) + ">")
    return out


def emit_sextuples(ex: ReviewExtraction) -> list[dict]:
    """JSON-ready records, one per triple, in the canonical field order."""
    out = []
    r = ex.review
    for t in ex.triples:
        out.append(
            {
                "review_id": r.review_id,
                "product_id": r.product_id,
                "feature": t.features,
                "opinion": t.opinions,
                "intensifier": t.intensifiers,
                "fuzzy": [t.fuzzy.L, t.fuzzy.M, t.fuzzy.U],
                "scalar": t.scalar,
                "relations": t.relations,
                "holder": r.holder,
                "time": r.date.isoformat(),
            }
        )
    return out
