#!/usr/bin/env python3
"""Generate the bundled synthetic tagged corpus (deterministic).

About a thousand sentences mixing three populations around the same
surface pattern: lexicon constructions (bound stems, licensed
postpositions and suffixes only, never standalone), light-verb nouns
(pattern occurrences plus plenty of bare-noun evidence), and full verb
stems (many distinct postposition/suffix combinations).  Plus filler.

Run from the repository root:  python3 tools/gen_synthetic_corpus.py
"""

import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / 'src'))

from pvckit import hangul, lexicon  # noqa: E402

OUT = Path(__file__).resolve().parents[1] / 'tests' / 'data' / 'synthetic.tagged'

VOWEL_HOSTS = ['친구', '경제', '역사', '나라', '문제', '회사', '사회', '주제', '미래', '게']
CONSONANT_HOSTS = ['책', '사람', '음악', '정책', '계획', '과학', '믿음', '배경', '질문']
RIEUL_HOSTS = ['하늘', '서울', '마을', '길']
FOREIGN_HOSTS = ['OECD', 'IMF', '2020', 'AI']
ALL_HOSTS = VOWEL_HOSTS + CONSONANT_HOSTS + RIEUL_HOSTS

TAIL_NOUNS = ['책', '사람', '공', '정책', '토론', '문제', '결과', '이야기', '모습']
SUBJECTS = ['강아지', '학생', '작가', '기자', '교수']
CONT_VERBS = ['날아가', '떠나', '달리', '서술하', '시작하', '만들', '이어지']
NOISE_NOUNS = ['학교', '도시', '바다', '숲', '시간', '나무', '꽃', '별', '빛',
               '거리', '마음', '아침', '저녁', '소리', '그림']
ADVERBS = ['명백히', '확실히', '분명히', '갑자기']

ENTRY_TOTALS = {
    '대': 60, '의': 52, '통': 46, '위': 40, '인': 34, '관': 30, '속': 24,
    '향': 21, '비': 16, '불구': 12, '비롯': 10, '기': 8, '반': 6, '위시': 5,
}

# (stem, pattern occurrences, standalone occurrences)
LVC_STEMS = [
    ('산책', 12, 18), ('공부', 10, 25), ('요리', 8, 12), ('운동', 14, 28),
    ('여행', 9, 16),
]

# Full verbs mined through the same window: many distinct sequences.
VERB_COMBOS = {
    '구': [('를', '한'), ('을', '한'), ('를', '해'), ('을', '해서'),
          ('에서', '한'), ('에서', '하였다'), ('로', '하여'), ('으로', '한'),
          ('를', '하였다'), ('를', '하였던'), ('을', '한다')],
    '정': [('를', '한'), ('을', '한'), ('로', '한'), ('으로', '해'),
          ('를', '하였다'), ('을', '하였던'), ('에', '한'), ('를', '한다'),
          ('을', '해서')],
}
VERB_OCCURRENCES = {'구': 22, '정': 14}

# A planted bound stem outside the lexicon: candidate-shaped statistics.
PLANTED_BOUND = ('즈음', [('에', '한'), ('에', '해')], 6)

NOISE_COUNT = 442

ENDINGS = {
    '한': [('ㄴ', 'ETM')],
    '해': [('아', 'EC')],
    '해서': [('아서', 'EC')],
    '하여': [('여', 'EC')],
    '하고': [('고', 'EC')],
    '하였다': [('였', 'EP'), ('다', 'EF')],
    '하였던': [('였', 'EP'), ('던', 'ETM')],
    '함': [('ㅁ', 'ETN')],
    '한다': [('ㄴ다', 'EF')],
}

ADNOMINAL_LIKE = {'한', '하였던'}
SENTENCE_FINAL = {'하였다', '함', '한다'}


def post_tag(surface):
    return 'JKO' if surface in ('를', '을') else 'JKB'


def eojeol(tokens, index):
    return [(surface, tag, index) for surface, tag in tokens]


def pattern_sentence(rng, stem, lemma, suffix, *, stem_tag='XR',
                     allow_trailing=True, adverb=False, host=None):
    """One host+postposition eojeol, the verb complex, and a continuation."""
    if host is None:
        if lemma in ('를', '로'):
            host = rng.choice(ALL_HOSTS + FOREIGN_HOSTS)
        else:
            host = rng.choice(ALL_HOSTS)
    surface = hangul.allomorph(lemma, host) if lemma in hangul.ALLOMORPHS else lemma
    sent = []
    index = 0
    if suffix in SENTENCE_FINAL and rng.random() < 0.5:
        sent += eojeol([(rng.choice(SUBJECTS), 'NNG'),
                        (rng.choice(['이', '가']), 'JKS')], index)
        index += 1
    if surface == '에도' and rng.random() < 0.5:
        sent += eojeol([(host, 'NNG'), ('에', 'JKB'), ('도', 'JX')], index)
    else:
        sent += eojeol([(host, 'NNG'), (surface, post_tag(surface))], index)
    index += 1
    if adverb:
        sent += eojeol([(rng.choice(ADVERBS), 'MAG')], index)
        index += 1
    complex_tokens = [(stem, stem_tag), ('하', 'XSV')] + ENDINGS[suffix]
    trailing = (allow_trailing and suffix in lexicon.CONNECTIVE_SUFFIXES
                and rng.random() < 0.12)
    if trailing:
        complex_tokens.append((rng.choice(['는', '도', '만']), 'JX'))
    sent += eojeol(complex_tokens, index)
    index += 1
    if suffix in ADNOMINAL_LIKE:
        sent += eojeol([(rng.choice(TAIL_NOUNS), 'NNG')], index)
    elif suffix not in SENTENCE_FINAL:
        verb = rng.choice(CONT_VERBS)
        if rng.random() < 0.4:
            sent += eojeol([(verb, 'VV'), ('았', 'EP'), ('다', 'EF')], index)
        else:
            sent += eojeol([(verb, 'VV'), ('다', 'EF')], index)
    return sent


def lexicon_sentences(rng):
    sentences = []
    for entry in lexicon.builtin().entries:
        stem = entry.stem_hangul
        total = ENTRY_TOTALS[stem]
        lemmas = list(entry.licensed_lemmas())
        suffixes = list(entry.suffix_forms)
        for i in range(total):
            lemma = lemmas[i % len(lemmas)]
            if rng.random() < 0.08:
                suffix = '하였다'
            elif rng.random() < 0.03:
                suffix = '하였던'
            else:
                suffix = suffixes[i % len(suffixes)]
            stem_tag = 'XR' if rng.random() < 0.7 else 'NNG'
            adverb = rng.random() < 0.05
            sentences.append(pattern_sentence(
                rng, stem, lemma, suffix, stem_tag=stem_tag, adverb=adverb))
    # a taste of the legal-register gerundial
    sentences.append(pattern_sentence(rng, '관', '에', '함', adverb=False,
                                      allow_trailing=False))
    sentences.append(pattern_sentence(rng, '관', '에', '함', adverb=False,
                                      allow_trailing=False))
    return sentences


def lvc_sentences(rng):
    sentences = []
    for stem, total, standalone in LVC_STEMS:
        for i in range(total):
            lemma = ['를', '에', '로'][i % 3]
            suffix = ['한', '해', '해서', '하였다', '한다'][i % 5]
            sentences.append(pattern_sentence(
                rng, stem, lemma, suffix, stem_tag='NNG', allow_trailing=False))
        for i in range(standalone):
            shape = i % 3
            if shape == 0:
                sentences.append(
                    eojeol([(rng.choice(NOISE_NOUNS), 'NNG')], 0)
                    + eojeol([(stem, 'NNG')], 1))
            elif shape == 1:
                sentences.append(
                    eojeol([(stem, 'NNG'), ('이', 'JKS')], 0)
                    + eojeol([('좋', 'VA'), ('다', 'EF')], 1))
            else:
                sentences.append(
                    eojeol([(stem, 'NNG'), ('은', 'JX')], 0)
                    + eojeol([(rng.choice(CONT_VERBS), 'VV'), ('다', 'EF')], 1))
    return sentences


def verb_sentences(rng):
    sentences = []
    for stem, occurrences in VERB_OCCURRENCES.items():
        combos = VERB_COMBOS[stem]
        for i in range(occurrences):
            adp, suffix = combos[i % len(combos)]
            if adp in hangul.ALLOMORPHS:
                sentences.append(pattern_sentence(
                    rng, stem, adp, suffix, stem_tag='NNG',
                    allow_trailing=False))
            else:
                host = rng.choice(ALL_HOSTS)
                sent = eojeol([(host, 'NNG'), (adp, 'JKB')], 0)
                sent += eojeol([(stem, 'NNG'), ('하', 'XSV')]
                               + ENDINGS[suffix], 1)
                if suffix in ADNOMINAL_LIKE:
                    sent += eojeol([(rng.choice(TAIL_NOUNS), 'NNG')], 2)
                sentences.append(sent)
    stem, combos, occurrences = PLANTED_BOUND
    for i in range(occurrences):
        adp, suffix = combos[i % len(combos)]
        sentences.append(pattern_sentence(
            rng, stem, adp, suffix, stem_tag='XR', allow_trailing=False))
    return sentences


def noise_sentences(rng):
    sentences = []
    for i in range(NOISE_COUNT):
        shape = i % 5
        noun = rng.choice(NOISE_NOUNS)
        other = rng.choice(NOISE_NOUNS)
        verb = rng.choice(CONT_VERBS)
        if shape == 0:
            sentences.append(eojeol([(noun, 'NNG')], 0)
                             + eojeol([(other, 'NNG')], 1))
        elif shape == 1:
            sentences.append(
                eojeol([(noun, 'NNG'), (rng.choice(['은', '는']), 'JX')], 0)
                + eojeol([(verb, 'VV'), ('다', 'EF')], 1))
        elif shape == 2:
            sentences.append(
                eojeol([(noun, 'NNG'), (rng.choice(['이', '가']), 'JKS')], 0)
                + eojeol([(verb, 'VV'), ('았', 'EP'), ('다', 'EF')], 1))
        elif shape == 3:
            accusative = hangul.allomorph('를', noun)
            sentences.append(
                eojeol([(rng.choice(ADVERBS), 'MAG')], 0)
                + eojeol([(noun, 'NNG'), (accusative, 'JKO')], 1)
                + eojeol([(verb, 'VV'), ('다', 'EF')], 2))
        else:
            sentences.append(
                eojeol([(noun, 'NNG'), ('의', 'JKG')], 0)
                + eojeol([(other, 'NNG'), ('가', 'JKS')], 1)
                + eojeol([('좋', 'VA'), ('다', 'EF')], 2))
    return sentences


def main():
    rng = random.Random(20240901)
    sentences = (lexicon_sentences(rng) + lvc_sentences(rng)
                 + verb_sentences(rng) + noise_sentences(rng))
    random.Random(77).shuffle(sentences)
    blocks = []
    for sent in sentences:
        blocks.append('\n'.join(f"{s}\t{t}\t{e}" for s, t, e in sent))
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text('\n\n'.join(blocks) + '\n', encoding='utf-8')
    print(f"wrote {len(sentences)} sentences to {OUT}")


if __name__ == '__main__':
    main()
