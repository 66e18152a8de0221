"""Turning accepted classifications into cupt annotations and JSON reports.

The lexicalized components are the postposition morphemes and the verb
complex; the governed noun and any trailing discourse particle stay
outside the span.  Only PVC-labeled results are annotated; everything
else survives in the JSON report with its diagnostic flags.
"""

from __future__ import annotations

import json

from .classifier import Classification, Label
from .config import Options
from .corpus_io import CuptSentence, MweSpan, TaggedSentence
from .matcher import Match

SCHEMA_MATCH = 'pvc-match/1'
SCHEMA_REPORT = 'pvc-report/1'

PVC_LABELS = (Label.PVC_N, Label.PVC_P)


class AnnotationConflictError(ValueError):
    """Two annotations claim the same token."""


def match_record(match: Match) -> dict:
    """Canonical JSON-ready view of a match; key order is part of the schema."""
    return {
        'schema': SCHEMA_MATCH,
        'sent_id': match.sent_id,
        'layer': match.layer,
        'host_eojeol': match.host_eojeol,
        'adp_span': list(match.adp_span) if match.adp_span else None,
        'verb_span': list(match.verb_span),
        'stem': match.stem,
        'post_lemma': match.post_lemma,
        'post_surface': match.post_surface,
        'suffix': match.suffix,
        'post_offset': match.post_offset,
        'trailing': match.trailing,
    }


def result_record(match: Match, classification: Classification) -> dict:
    record = match_record(match)
    record['schema'] = SCHEMA_REPORT
    record['label'] = classification.label.value
    record['flags'] = sorted(f.value for f in classification.flags)
    record['rules'] = list(classification.rationale)
    record['confidence'] = classification.confidence
    return record


def _dump(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, separators=(',', ':'))


def annotate(sentence: TaggedSentence,
             results: list[tuple[Match, Classification]],
             options: Options | None = None) -> CuptSentence:
    """Project PVC-labeled results onto an 11-column sentence.

    Annotated tokens are the postposition and verb-complex morphemes; ids
    run 1..k in textual order.
    """
    options = options or Options()
    spans: list[tuple[int, ...]] = []
    for match, classification in results:
        if classification.label not in PVC_LABELS:
            continue
        if match.layer != 'tagged' or match.adp_span is None:
            raise ValueError("annotation needs tagged-layer matches")
        indices = tuple(range(*match.adp_span)) + tuple(range(*match.verb_span))
        spans.append(indices)
    spans.sort(key=lambda ix: ix[0])
    claimed: set[int] = set()
    mwes = []
    for mwe_id, indices in enumerate(spans, start=1):
        overlap = claimed.intersection(indices)
        if overlap:
            raise AnnotationConflictError(
                f"{sentence.sent_id}: tokens {sorted(overlap)} claimed twice")
        claimed.update(indices)
        mwes.append(MweSpan(mwe_id, options.mwe_category, indices))
    rows = tuple(
        (str(i + 1), t.surface, '_', '_', t.tag, '_', '_', '_', '_', '_')
        for i, t in enumerate(sentence.tokens))
    return CuptSentence(sent_id=sentence.sent_id, rows=rows, mwes=tuple(mwes))


def annotate_corpus(classified, options: Options | None = None
                    ) -> list[CuptSentence]:
    return [annotate(sentence, results, options)
            for sentence, results in classified]


def report_json(classified) -> bytes:
    """JSON-lines report over classify_all output, one record per result."""
    lines = []
    for _sentence, results in classified:
        for match, classification in results:
            lines.append(_dump(result_record(match, classification)))
    if not lines:
        return b''
    return ('\n'.join(lines) + '\n').encode('utf-8')


def matches_json(matches) -> bytes:
    """JSON-lines stream of bare matches (no classification)."""
    lines = [_dump(match_record(m)) for m in matches]
    if not lines:
        return b''
    return ('\n'.join(lines) + '\n').encode('utf-8')
