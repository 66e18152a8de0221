#!/usr/bin/env python3
"""Regenerate the golden files under tests/data/.

The miner golden comes from the brute-force oracle, not from the miner,
so the two stay an independent cross-check.  The cupt and JSON goldens
come from a pipeline run over the hand-built fixture corpus and are
reviewed by hand before being committed.

Run from the repository root:  python3 tools/gen_goldens.py
"""

import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parents[1]
sys.path.insert(0, str(ROOT / 'src'))
sys.path.insert(0, str(ROOT / 'tests'))

from pvckit import annotator, classifier, corpus_io, lexicon, matcher  # noqa: E402
from _oracle import oracle_tsv  # noqa: E402

DATA = ROOT / 'tests' / 'data'


def miner_golden():
    corpus = corpus_io.read_tagged((DATA / 'synthetic.tagged').read_bytes())
    out = DATA / 'synthetic_report.tsv'
    out.write_bytes(oracle_tsv(corpus))
    print(f"wrote {out}")


def fixture_goldens():
    corpus = corpus_io.read_tagged((DATA / 'fixtures.tagged').read_bytes())
    lex = lexicon.builtin()
    classified = []
    for sentence in corpus:
        results = [(m, classifier.classify(m, sentence, lex))
                   for m in matcher.match_tagged(sentence, lex)]
        classified.append((sentence, results))
    report = annotator.report_json(classified)
    (DATA / 'fixtures_report.jsonl').write_bytes(report)
    print(f"wrote {DATA / 'fixtures_report.jsonl'}")
    cupt = corpus_io.write_cupt(
        [annotator.annotate(s, results) for s, results in classified])
    (DATA / 'fixtures.cupt').write_bytes(cupt)
    print(f"wrote {DATA / 'fixtures.cupt'}")


if __name__ == '__main__':
    miner_golden()
    fixture_goldens()
