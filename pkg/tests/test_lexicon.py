import dataclasses
import io

import pytest

from pvckit import lexicon
from pvckit.lexicon import Lexicon


def test_builtin_has_fourteen_entries(lex):
    assert len(lex.entries) == 14


def test_builtin_order_and_stems(lex):
    stems = [e.stem_hangul for e in lex.entries]
    assert stems == ['대', '의', '통', '위', '인', '관', '속', '향', '비',
                     '불구', '비롯', '기', '반', '위시']


def test_builtin_kwan_row(lex):
    entry = lex.entries[5]
    assert entry.stem_hangul == '관'
    assert entry.stem_roman == 'kwan'
    assert entry.postpositions == ('에',)
    assert entry.gloss == 'about'
    assert entry.suffix_forms == ('한', '해', '해서', '하여')
    assert entry.predicative is False


def test_builtin_pwulkwu_row(lex):
    entry = lex.entries[9]
    assert entry.stem_hangul == '불구'
    assert entry.postpositions == ('에도',)
    assert entry.suffix_forms == ('하고',)
    assert any('불구되다' in pattern for pattern, _ in entry.homonyms)


def test_builtin_hyang_row(lex):
    entry = lex.entries[7]
    assert entry.stem_hangul == '향'
    assert entry.postpositions == ('로', '를')
    assert entry.predicative is True
    assert entry.suffix_forms == ('한', '해')
    assert entry.extra_postpositions == (('에게', 'animate'),)
    assert entry.licensed_lemmas() == ('로', '를', '에게')


def test_builtin_predicative_stems(lex):
    flagged = {e.stem_hangul for e in lex.entries if e.predicative}
    assert flagged == {'속', '향', '기'}


def test_builtin_glosses(lex):
    glosses = {e.stem_hangul: e.gloss for e in lex.entries}
    assert glosses['대'] == 'about'
    assert glosses['통'] == 'via, through'
    assert glosses['불구'] == 'although'
    assert glosses['반'] == 'against, unlike'
    assert glosses['비롯'] == glosses['위시'] == 'such as'


def test_builtin_homonym_notes(lex):
    entry = {e.stem_hangul: e for e in lex.entries}
    assert entry['대'].homonyms == (('를 대하다', 'treat'),)
    assert entry['반'].homonyms == (('에(게) 반하다', 'fall for'),)
    assert entry['통'].homonyms == (('와 통하다', 'connect, flow'),)
    assert entry['관'].homonyms == ()


def test_builtin_validates_clean(lex):
    assert lexicon.validate(lex) == []


def test_validate_empty_postpositions(lex):
    bad = dataclasses.replace(lex.entries[0], postpositions=())
    problems = lexicon.validate(Lexicon(entries=(bad,)))
    assert any('postpositions' in p for p in problems)


def test_validate_predicative_whitelist(lex):
    bad = dataclasses.replace(lex.entries[0], predicative=True)  # 대
    problems = lexicon.validate(Lexicon(entries=(bad,)))
    assert any('predicative' in p for p in problems)


def test_validate_unknown_suffix(lex):
    bad = dataclasses.replace(lex.entries[0], suffix_forms=('한', '했'))
    problems = lexicon.validate(Lexicon(entries=(bad,)))
    assert any('했' in p for p in problems)


def test_validate_duplicate_stem(lex):
    problems = lexicon.validate(
        Lexicon(entries=(lex.entries[5], lex.entries[5])))
    assert any('duplicate' in p for p in problems)


def test_tsv_round_trip(lex):
    data = lexicon.export_tsv(lex)
    loaded = lexicon.load(io.BytesIO(data), format='tsv')
    assert loaded.entries == lex.entries
    assert lexicon.export_tsv(loaded) == data


def test_text_round_trip(lex):
    data = lexicon.export_text(lex)
    loaded = lexicon.load(io.BytesIO(data), format='text')
    assert loaded.entries == lex.entries
    assert lexicon.export_text(loaded) == data


def test_load_rejects_unknown_suffix(lex):
    data = lexicon.export_tsv(lex).decode('utf-8')
    broken = data.replace('한,해,해서,하여', '했,해,해서,하여', 1)
    with pytest.raises(lexicon.LexiconFormatError, match='했'):
        lexicon.load(broken.encode('utf-8'))


def test_load_rejects_duplicate_stem(lex):
    lines = lexicon.export_tsv(lex).decode('utf-8').rstrip('\n').split('\n')
    lines.append(lines[6])  # repeat the 관 row
    with pytest.raises(lexicon.LexiconFormatError, match='duplicate'):
        lexicon.load(('\n'.join(lines) + '\n').encode('utf-8'))


def test_load_reports_line_numbers():
    data = '\t'.join(lexicon.TSV_HEADER) + '\nonly-three\tcells\there\n'
    with pytest.raises(lexicon.LexiconFormatError, match='line 2'):
        lexicon.load_tsv(data.encode('utf-8'))


def test_load_rejects_bad_header():
    with pytest.raises(lexicon.LexiconFormatError, match='header'):
        lexicon.load_tsv(b'stem\troman\n')


def test_suffix_inventory_is_extensible(lex):
    extended = lexicon.with_suffixes(lex, ('함',))
    assert all('함' in e.suffix_forms for e in extended.entries)
    # gerundial forms stay outside the default inventory
    problems = lexicon.validate(extended)
    assert any('함' in p for p in problems)
    assert lexicon.validate(
        extended,
        suffix_inventory=lexicon.SUFFIX_INVENTORY + ('함',)) == []


def test_by_stem(lex):
    assert lex.by_stem('관').gloss == 'about'
    assert lex.by_stem('산책') is None
    assert '불구' in lex.stems()
