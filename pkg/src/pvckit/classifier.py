"""Rule-based construction classification for located matches.

Fossilized adpositional constructions tolerate only adnominal and
connective verb forms; tense infixes, matrix-predicate endings, and
adverbs wedged between the postposition and the stem all betray a
different construction.  Rules apply in a fixed order and the first
decisive one wins:

R1  tense infix before a non-final ending        -> Rejected
R2  final ending closing the clause              -> Rejected, or VerbArg
                                                    for predicative stems
R3  adverb between postposition and stem         -> Rejected, or VerbArg
                                                    for predicative stems
R4  connective form feeding a following verb     -> PVC + SerialNonFinal
R5  adnominal form modifying a following nominal -> PVC
R6  postposition shared with a homonymous verb   -> flag as ambiguous
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .config import Options
from .corpus_io import TaggedSentence
from .lexicon import (ADNOMINAL_SUFFIX, CONNECTIVE_SUFFIXES, GERUNDIAL_SUFFIX,
                      Lexicon, PvcEntry)
from .matcher import Match, match_tagged
from .miner import StemStats, boundness


class Label(enum.Enum):
    PVC_N = 'PvcN'
    PVC_P = 'PvcP'
    VERB_ARG = 'VerbArg'
    LVC = 'Lvc'
    REJECTED = 'Rejected'


class Flag(enum.Enum):
    TENSE_INFLECTION = 'TenseInflection'
    MAIN_PREDICATE = 'MainPredicate'
    INTERVENING_ADVERB = 'InterveningAdverb'
    SERIAL_NON_FINAL = 'SerialNonFinal'
    HOMONYM_AMBIGUOUS = 'HomonymAmbiguous'
    FREE_NOUN_STEM = 'FreeNounStem'


@dataclass(frozen=True)
class Classification:
    label: Label
    flags: frozenset[Flag]
    confidence: str  # 'certain' or 'heuristic'
    rationale: tuple[str, ...]  # rule ids in firing order


def _pvc_label(entry: PvcEntry) -> Label:
    return Label.PVC_P if entry.predicative else Label.PVC_N


def _expand_postposition_spec(spec: str) -> list[str]:
    """에(게) denotes both 에 and 에게."""
    if '(' in spec and spec.endswith(')'):
        head, _, optional = spec[:-1].partition('(')
        return [head, head + optional]
    return [spec]


def homonym_postpositions(entry: PvcEntry) -> set[str]:
    """Leading postpositions of the entry's homonymous verb patterns.

    Patterns like 불구가 되다 lead with the stem itself rather than a bare
    particle; those have no postposition to collide on.
    """
    lemmas: set[str] = set()
    for pattern, _gloss in entry.homonyms:
        head, _, rest = pattern.partition(' ')
        if rest and not head.startswith(entry.stem_hangul):
            lemmas.update(_expand_postposition_spec(head))
    return lemmas


def classify(match: Match, ctx: TaggedSentence, lex: Lexicon,
             options: Options | None = None) -> Classification:
    """Decide which construction a tagged-layer match instantiates."""
    options = options or Options()
    tagset = options.tagset
    entry = lex.by_stem(match.stem)
    if entry is None:
        raise ValueError(f"stem {match.stem!r} not in lexicon; "
                         "use classify_open for mined candidates")
    if match.layer != 'tagged' or match.adp_span is None:
        raise ValueError("classification needs a tagged-layer match")
    v_start, v_end = match.verb_span
    if (match.sent_id != ctx.sent_id or v_end > len(ctx.tokens)
            or ctx.tokens[v_start].surface != match.stem):
        raise ValueError(
            f"match for {match.stem!r} does not belong to sentence "
            f"{ctx.sent_id!r}")

    verb_tokens = ctx.tokens[v_start:v_end]
    ending = verb_tokens[-1]
    has_tense = any(tagset.is_tense(t.tag) for t in verb_tokens)
    is_final_ending = ending.tag == tagset.final_tag
    is_gerundial = match.suffix == GERUNDIAL_SUFFIX
    # Clause surrogate: a final ending with no later predicate.
    closes_clause = not any(tagset.is_verbal(t.tag)
                            for t in ctx.tokens[v_end:])

    # R1: a tense infix fossilized forms never take.  A tensed matrix
    # predicate is R2's case instead.
    if has_tense and not (is_final_ending and closes_clause):
        return Classification(Label.REJECTED,
                              frozenset({Flag.TENSE_INFLECTION}),
                              'certain', ('R1',))

    # R2: matrix-predicate use.  The gerundial 함 counts unless the
    # legal-register switch licenses it.
    if ((is_final_ending and closes_clause)
            or (is_gerundial and not options.legal_register)):
        if entry.predicative:
            return Classification(Label.VERB_ARG,
                                  frozenset({Flag.MAIN_PREDICATE}),
                                  'certain', ('R2',))
        return Classification(Label.REJECTED,
                              frozenset({Flag.MAIN_PREDICATE}),
                              'certain', ('R2',))

    # R3: an adverb between the postposition and the stem.
    between = ctx.tokens[match.adp_span[1]:v_start]
    if any(tagset.is_adverb(t.tag) for t in between):
        if entry.predicative:
            return Classification(Label.VERB_ARG,
                                  frozenset({Flag.INTERVENING_ADVERB}),
                                  'certain', ('R3',))
        return Classification(Label.REJECTED,
                              frozenset({Flag.INTERVENING_ADVERB}),
                              'certain', ('R3',))

    flags: set[Flag] = set()
    rationale: list[str] = []

    # R4: connective form serialized before another verb complex.
    if match.suffix in CONNECTIVE_SUFFIXES:
        next_eojeol = _next_eojeol_tokens(ctx, v_end)
        if next_eojeol and any(tagset.is_verbal(t.tag) for t in next_eojeol):
            flags.add(Flag.SERIAL_NON_FINAL)
            rationale.append('R4')

    # R5: adnominal form in front of a nominal.
    if not rationale and match.suffix == ADNOMINAL_SUFFIX:
        next_eojeol = _next_eojeol_tokens(ctx, v_end)
        if next_eojeol and tagset.is_noun(next_eojeol[0].tag):
            rationale.append('R5')

    confidence = 'certain'
    # R6: the postposition also introduces a homonymous full verb.
    if match.post_lemma in homonym_postpositions(entry):
        flags.add(Flag.HOMONYM_AMBIGUOUS)
        confidence = 'heuristic'
        rationale.append('R6')

    return Classification(_pvc_label(entry), frozenset(flags), confidence,
                          tuple(rationale))


def _next_eojeol_tokens(ctx: TaggedSentence, after: int):
    """Tokens of the first eojeol starting at or after token index `after`."""
    tokens = ctx.tokens
    if after >= len(tokens):
        return []
    current = tokens[after - 1].eojeol_index if after > 0 else -1
    start = after
    while start < len(tokens) and tokens[start].eojeol_index == current:
        start += 1
    if start >= len(tokens):
        return []
    eojeol = tokens[start].eojeol_index
    end = start
    while end < len(tokens) and tokens[end].eojeol_index == eojeol:
        end += 1
    return list(tokens[start:end])


def classify_open(stem: str, stats: StemStats, lex: Lexicon,
                  options: Options | None = None) -> str:
    """Triage a mined stem outside the lexicon.

    Free-noun evidence (low boundness) suggests a light verb construction;
    a bound stem with few distinct sequences is a construction candidate;
    a bound stem inflecting freely is just a verb.
    """
    options = options or Options()
    if lex.by_stem(stem) is not None:
        raise ValueError(f"{stem!r} is already a lexicon entry")
    score = boundness(stats)
    if score < options.theta_free:
        return 'LvcLikely'
    if stats.distinct_triples <= options.theta_fixed:
        return 'PvcCandidate'
    return 'VerbLikely'


def classify_all(corpus, lex: Lexicon, options: Options | None = None
                 ) -> list[tuple[TaggedSentence, list[tuple[Match, Classification]]]]:
    """Match and classify every sentence, preserving corpus order."""
    options = options or Options()
    out = []
    for sentence in corpus:
        results = [(m, classify(m, sentence, lex, options))
                   for m in match_tagged(sentence, lex, options)]
        out.append((sentence, results))
    return out
