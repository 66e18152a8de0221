import sys
from pathlib import Path

import pytest

TESTS = Path(__file__).resolve().parent
sys.path.insert(0, str(TESTS))

from pvckit import corpus_io, lexicon  # noqa: E402

DATA = TESTS / 'data'


@pytest.fixture(scope='session')
def data_dir() -> Path:
    return DATA


@pytest.fixture(scope='session')
def lex():
    return lexicon.builtin()


@pytest.fixture(scope='session')
def fixture_corpus():
    return corpus_io.read_tagged((DATA / 'fixtures.tagged').read_bytes())


@pytest.fixture(scope='session')
def fixture_raw():
    return corpus_io.read_plain((DATA / 'fixtures.raw').read_bytes())


@pytest.fixture(scope='session')
def synthetic_corpus():
    return corpus_io.read_tagged((DATA / 'synthetic.tagged').read_bytes())


@pytest.fixture(scope='session')
def expected_rows():
    """The classification expectation table, keyed by sentence id."""
    lines = (DATA / 'fixtures_expected.tsv').read_text(
        encoding='utf-8').strip().split('\n')
    header = lines[0].split('\t')
    rows = {}
    for line in lines[1:]:
        cells = dict(zip(header, line.split('\t')))
        cells['flags'] = ([] if cells['flags'] == '-'
                          else cells['flags'].split(','))
        cells['rules'] = cells['rules'].split(',')
        rows[cells['sent_id']] = cells
    return rows
