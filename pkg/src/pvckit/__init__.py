"""Toolkit for Korean postpositional verb-based constructions (PVCs).

Identify, mine, classify, and annotate noun+postposition plus fossilized
bound-stem verb constructions in raw and morphologically tagged corpora.
"""

from .classifier import Classification, Flag, Label, classify, classify_all, classify_open
from .config import Options, Tagset, load_config
from .corpus_io import (CuptSentence, MorphToken, RawSentence, TaggedSentence,
                        read_conllu, read_plain, read_tagged, write_cupt)
from .hangul import FinalKind, SyllableParts, allomorph, compose, decompose, final_kind
from .lexicon import Lexicon, PvcEntry, builtin, validate
from .matcher import (FormIndex, Match, SurfaceForm, expand, match_raw,
                      match_tagged)
from .miner import CandidateReport, StemStats, boundness, mine, rank, report_tsv

__version__ = '0.1.0'

__all__ = [
    'Classification', 'Flag', 'Label', 'classify', 'classify_all',
    'classify_open', 'Options', 'Tagset', 'load_config', 'CuptSentence',
    'MorphToken', 'RawSentence', 'TaggedSentence', 'read_conllu',
    'read_plain', 'read_tagged', 'write_cupt', 'FinalKind', 'SyllableParts',
    'allomorph', 'compose', 'decompose', 'final_kind', 'Lexicon', 'PvcEntry',
    'builtin', 'validate', 'FormIndex', 'Match', 'SurfaceForm', 'expand',
    'match_raw', 'match_tagged', 'CandidateReport', 'StemStats', 'boundness',
    'mine', 'rank', 'report_tsv',
]
