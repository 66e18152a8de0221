"""Hangul syllable arithmetic and postposition allomorph selection.

Precomposed syllables (U+AC00..U+D7A3) decompose into an initial, a medial,
and an optional final jamo by integer arithmetic.  The final consonant
(batchim) of a word's last syllable decides which allomorph a postposition
takes (를/을, 로/으로).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

SYLLABLE_BASE = 0xAC00
SYLLABLE_LAST = 0xD7A3
INITIAL_STRIDE = 588  # 21 medials * 28 finals
MEDIAL_STRIDE = 28

INITIALS = ['ㄱ', 'ㄲ', 'ㄴ', 'ㄷ', 'ㄸ', 'ㄹ', 'ㅁ', 'ㅂ', 'ㅃ', 'ㅅ', 'ㅆ',
            'ㅇ', 'ㅈ', 'ㅉ', 'ㅊ', 'ㅋ', 'ㅌ', 'ㅍ', 'ㅎ']

MEDIALS = ['ㅏ', 'ㅐ', 'ㅑ', 'ㅒ', 'ㅓ', 'ㅔ', 'ㅕ', 'ㅖ', 'ㅗ', 'ㅘ', 'ㅙ',
           'ㅚ', 'ㅛ', 'ㅜ', 'ㅝ', 'ㅞ', 'ㅟ', 'ㅠ', 'ㅡ', 'ㅢ', 'ㅣ']

# Index 0 is the empty final.
FINALS = ['', 'ㄱ', 'ㄲ', 'ㄳ', 'ㄴ', 'ㄵ', 'ㄶ', 'ㄷ', 'ㄹ', 'ㄺ', 'ㄻ', 'ㄼ',
          'ㄽ', 'ㄾ', 'ㄿ', 'ㅀ', 'ㅁ', 'ㅂ', 'ㅄ', 'ㅅ', 'ㅆ', 'ㅇ', 'ㅈ',
          'ㅊ', 'ㅋ', 'ㅌ', 'ㅍ', 'ㅎ']

FINAL_RIEUL = 8  # index of ㄹ in FINALS

FINAL_INDEX = {jamo: i for i, jamo in enumerate(FINALS) if jamo}

# Postposition lemmas the toolkit knows, mapped to their surface variants:
# (form after a vowel-final host, form after a consonant-final host).
# ㄹ-final hosts take the vowel form of 로.
ALLOMORPHS = {
    '에': ('에', '에'),
    '에도': ('에도', '에도'),
    '에게': ('에게', '에게'),
    '를': ('를', '을'),
    '로': ('로', '으로'),
}

# Reverse map: every surface form back to its lemma.
SURFACE_TO_LEMMA = {}
for _lemma, (_v, _c) in ALLOMORPHS.items():
    SURFACE_TO_LEMMA[_v] = _lemma
    SURFACE_TO_LEMMA[_c] = _lemma


class UnknownPostpositionError(ValueError):
    """Raised for a postposition lemma outside the known inventory."""


class FinalKind(enum.Enum):
    VOWEL = 'vowel'
    RIEUL = 'rieul'
    OTHER_CONSONANT = 'other_consonant'
    NON_HANGUL = 'non_hangul'


@dataclass(frozen=True)
class SyllableParts:
    initial: int
    medial: int
    final: int  # 0 = no final consonant


def decompose(syllable: str) -> SyllableParts | None:
    """Split one precomposed syllable into jamo indices; None outside the block."""
    if len(syllable) != 1:
        raise ValueError(f"expected a single character, got {syllable!r}")
    cp = ord(syllable)
    if not SYLLABLE_BASE <= cp <= SYLLABLE_LAST:
        return None
    offset = cp - SYLLABLE_BASE
    initial = offset // INITIAL_STRIDE
    medial = (offset % INITIAL_STRIDE) // MEDIAL_STRIDE
    final = offset % MEDIAL_STRIDE
    return SyllableParts(initial, medial, final)


def compose(parts: SyllableParts) -> str:
    """Inverse of decompose; raises on out-of-range indices."""
    if not (0 <= parts.initial <= 18 and 0 <= parts.medial <= 20
            and 0 <= parts.final <= 27):
        raise ValueError(f"jamo index out of range: {parts}")
    return chr(SYLLABLE_BASE + parts.initial * INITIAL_STRIDE
               + parts.medial * MEDIAL_STRIDE + parts.final)


def attach_final(syllable: str, final_jamo: str) -> str:
    """Attach a compatibility-jamo final to an open syllable (하 + ㄴ -> 한)."""
    parts = decompose(syllable)
    if parts is None or parts.final != 0:
        raise ValueError(f"{syllable!r} cannot take a final consonant")
    if final_jamo not in FINAL_INDEX:
        raise ValueError(f"{final_jamo!r} is not a final jamo")
    return compose(SyllableParts(parts.initial, parts.medial,
                                 FINAL_INDEX[final_jamo]))


def is_final_jamo(char: str) -> bool:
    return char in FINAL_INDEX


def final_kind(word: str) -> FinalKind:
    """Classify the last character of `word` for allomorph selection."""
    if not word:
        raise ValueError("empty word")
    parts = decompose(word[-1])
    if parts is None:
        return FinalKind.NON_HANGUL
    if parts.final == 0:
        return FinalKind.VOWEL
    if parts.final == FINAL_RIEUL:
        return FinalKind.RIEUL
    return FinalKind.OTHER_CONSONANT


def allomorph(lemma: str, host: str, *, non_hangul_form: str = 'lemma') -> str:
    """Pick the surface form of `lemma` after `host`.

    를 takes 을 after any consonant; 로 takes 으로 after consonants other
    than ㄹ; the 에 family never alternates.  Hosts ending outside the
    syllable block fall back to `non_hangul_form` ('lemma' or 'alternate').
    """
    if lemma not in ALLOMORPHS:
        raise UnknownPostpositionError(f"unknown postposition lemma {lemma!r}")
    vowel_form, consonant_form = ALLOMORPHS[lemma]
    kind = final_kind(host)
    if kind is FinalKind.VOWEL:
        return vowel_form
    if kind is FinalKind.RIEUL:
        # ㄹ-final hosts keep 로 but still take 을.
        return vowel_form if lemma == '로' else consonant_form
    if kind is FinalKind.OTHER_CONSONANT:
        return consonant_form
    if non_hangul_form == 'alternate':
        return consonant_form if vowel_form == lemma else vowel_form
    return lemma


def surface_forms(lemma: str) -> list[str]:
    """All surface variants of a lemma, lemma form first."""
    if lemma not in ALLOMORPHS:
        raise UnknownPostpositionError(f"unknown postposition lemma {lemma!r}")
    vowel_form, consonant_form = ALLOMORPHS[lemma]
    forms = [lemma]
    for form in (vowel_form, consonant_form):
        if form not in forms:
            forms.append(form)
    return forms


def compatible(lemma: str, surface: str, host: str,
               *, non_hangul_form: str = 'lemma') -> bool:
    """True if `surface` is the allomorph `lemma` takes after `host`."""
    return allomorph(lemma, host, non_hangul_form=non_hangul_form) == surface
