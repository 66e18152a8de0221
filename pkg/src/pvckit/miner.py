"""Corpus mining: per-stem distributional statistics and candidate ranking.

Every adposition + stem + 하 + ending window counts toward its stem's
totals, whatever the stem; bare-noun occurrences of the same string count
separately.  A stem that never stands alone as a noun scores boundness 1.0,
which is what separates fossilized bound stems from light-verb nouns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import Options
from .matcher import scan_occurrences


@dataclass(frozen=True)
class StemStats:
    stem: str
    total: int
    distinct_adpositions: int
    distinct_suffixes: int
    distinct_triples: int
    standalone_count: int


@dataclass(frozen=True)
class RankedStem:
    stats: StemStats
    boundness: float


@dataclass(frozen=True)
class CandidateReport:
    rows: tuple[RankedStem, ...]
    k: int


class _Tally:
    __slots__ = ('total', 'adpositions', 'suffixes', 'triples')

    def __init__(self):
        self.total = 0
        self.adpositions: set[str] = set()
        self.suffixes: set[str] = set()
        self.triples: set[tuple[str, str]] = set()


def mine(corpus, options: Options | None = None) -> dict[str, StemStats]:
    """Aggregate pattern and standalone counts over tagged sentences.

    Only stems attested in at least one pattern window get a row; their
    standalone counts come from bare-noun tokens of the same surface.
    """
    options = options or Options()
    tagset = options.tagset
    tallies: dict[str, _Tally] = {}
    standalone: dict[str, int] = {}
    for sentence in corpus:
        for occ in scan_occurrences(sentence, tagset):
            tally = tallies.get(occ.stem)
            if tally is None:
                tally = tallies[occ.stem] = _Tally()
            suffix = occ.suffix_realization()
            tally.total += 1
            tally.adpositions.add(occ.adp_surface)
            tally.suffixes.add(suffix)
            tally.triples.add((occ.adp_surface, suffix))
        tokens = sentence.tokens
        for i, token in enumerate(tokens):
            if not tagset.is_noun(token.tag):
                continue
            nxt = tokens[i + 1] if i + 1 < len(tokens) else None
            if (nxt is not None and nxt.surface == '하'
                    and nxt.tag == tagset.verbalizer_tag):
                continue
            standalone[token.surface] = standalone.get(token.surface, 0) + 1
    return {
        stem: StemStats(
            stem=stem,
            total=tally.total,
            distinct_adpositions=len(tally.adpositions),
            distinct_suffixes=len(tally.suffixes),
            distinct_triples=len(tally.triples),
            standalone_count=standalone.get(stem, 0),
        )
        for stem, tally in tallies.items()
    }


def boundness(stats: StemStats) -> float:
    """Pattern share of all attestations; 1.0 means never a free noun."""
    denominator = stats.total + stats.standalone_count
    if denominator == 0:
        raise ValueError(f"{stats.stem}: no attestations, boundness undefined")
    return stats.total / denominator


def rank(stats: dict[str, StemStats], k: int = 300) -> CandidateReport:
    """Top-k stems by pattern frequency; ties break on code-point order."""
    if k <= 0:
        raise ValueError(f"k must be positive, got {k}")
    ordered = sorted(stats.values(), key=lambda s: (-s.total, s.stem))
    rows = tuple(RankedStem(s, boundness(s)) for s in ordered[:k])
    return CandidateReport(rows=rows, k=k)


REPORT_COLUMNS = ('stem', 'total', 'distinct_adps', 'distinct_suffixes',
                  'distinct_triples', 'standalone', 'boundness')


def report_tsv(report: CandidateReport) -> bytes:
    """Candidate table as UTF-8 TSV, boundness to four decimal places."""
    lines = ['\t'.join(REPORT_COLUMNS)]
    for row in report.rows:
        s = row.stats
        lines.append('\t'.join((
            s.stem, str(s.total), str(s.distinct_adpositions),
            str(s.distinct_suffixes), str(s.distinct_triples),
            str(s.standalone_count), f"{row.boundness:.4f}",
        )))
    return ('\n'.join(lines) + '\n').encode('utf-8')
