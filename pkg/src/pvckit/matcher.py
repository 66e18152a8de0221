"""Locating candidate constructions in raw and tagged sentences.

Raw matching expands the lexicon into concrete surfaces (postposition
allomorph x verb form) and looks for adjacent eojeol pairs.  Tagged
matching walks morpheme tags: an adposition closing one eojeol, a bound
stem opening the next, the verbalizer 하, and an inflectional ending.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hangul
from .config import Options, Tagset
from .corpus_io import RawSentence, TaggedSentence
from .lexicon import CONNECTIVE_SUFFIXES, GERUNDIAL_SUFFIX, Lexicon


@dataclass(frozen=True)
class SurfaceForm:
    stem: str
    post_lemma: str
    post_surface: str
    verb_surface: str  # stem + suffix form, e.g. 관한
    suffix: str


@dataclass(frozen=True)
class Match:
    sent_id: str
    layer: str  # 'raw' or 'tagged'
    host_eojeol: int
    verb_span: tuple[int, int]  # eojeol range (raw) or token range (tagged)
    stem: str
    post_lemma: str
    post_surface: str
    suffix: str
    post_offset: int  # character offset of the postposition in the host eojeol
    adp_span: tuple[int, int] | None = None  # token range, tagged only
    trailing: str | None = None


def expand(lex: Lexicon, options: Options | None = None) -> list[SurfaceForm]:
    """All concrete surfaces an entry licenses, in deterministic order.

    Entries in lexicon order; per entry, each licensed postposition expands
    to every allomorph (lemma form first); suffixes in declared order.
    """
    options = options or Options()
    forms: list[SurfaceForm] = []
    for entry in lex.entries:
        suffixes = entry.suffix_forms
        if options.legal_register and GERUNDIAL_SUFFIX not in suffixes:
            suffixes = suffixes + (GERUNDIAL_SUFFIX,)
        for lemma in entry.licensed_lemmas():
            for surface in hangul.surface_forms(lemma):
                for suffix in suffixes:
                    forms.append(SurfaceForm(
                        stem=entry.stem_hangul,
                        post_lemma=lemma,
                        post_surface=surface,
                        verb_surface=entry.stem_hangul + suffix,
                        suffix=suffix,
                    ))
    return forms


class FormIndex:
    """Surface forms indexed by their verb eojeol for pair lookup."""

    def __init__(self, forms: list[SurfaceForm]):
        self.by_verb: dict[str, list[SurfaceForm]] = {}
        for form in forms:
            self.by_verb.setdefault(form.verb_surface, []).append(form)

    @classmethod
    def from_lexicon(cls, lex: Lexicon,
                     options: Options | None = None) -> 'FormIndex':
        return cls(expand(lex, options))


def realize_verb(parts: list[str]) -> str:
    """Spell 하 plus following morpheme surfaces as written Korean.

    A bare final jamo attaches to the open syllable (하+ㄴ -> 한); the
    vowel endings 아/어 contract with 하 to 해 (앗/었 to 했); everything
    else concatenates (하+고 -> 하고, 하+여 -> 하여).
    """
    acc = '하'
    for part in parts:
        if not part:
            continue
        first = part[0]
        last = acc[-1]
        last_parts = hangul.decompose(last)
        if (hangul.is_final_jamo(first) and last_parts is not None
                and last_parts.final == 0):
            acc = acc[:-1] + hangul.attach_final(last, first) + part[1:]
        elif acc == '하' and first in ('아', '어'):
            acc = '해' + part[1:]
        elif acc == '하' and first in ('았', '었'):
            acc = '했' + part[1:]
        else:
            acc += part
    return acc


@dataclass(frozen=True)
class Occurrence:
    """One adposition + stem + 하 + ending window in a tagged sentence."""
    host_eojeol: int
    host: str
    adp_span: tuple[int, int]
    adp_surface: str
    stem: str
    verb_span: tuple[int, int]  # stem token .. ending token, end-exclusive
    ep_surfaces: tuple[str, ...]
    ending_surface: str
    ending_tag: str
    trailing: tuple[str, ...]  # particle tokens after the ending
    adverb_between: bool

    def suffix_realization(self) -> str:
        return realize_verb(list(self.ep_surfaces) + [self.ending_surface])


def scan_occurrences(sentence: TaggedSentence,
                     tagset: Tagset | None = None) -> list[Occurrence]:
    """Find every pattern window, stem unrestricted.

    The adposition run must close its eojeol behind a nonempty host; the
    stem must open a following eojeol, with only adverb eojeols allowed in
    between; tense infixes may sit between 하 and the ending; anything
    after the ending must be particle-tagged.
    """
    tagset = tagset or Tagset()
    tokens = sentence.tokens
    spans = sentence.eojeol_spans()
    found: list[Occurrence] = []
    for position, (start, end) in enumerate(spans):
        adp_start = end
        while adp_start > start and tagset.is_adposition(tokens[adp_start - 1].tag):
            adp_start -= 1
        if adp_start == end or adp_start == start:
            continue  # no adposition run, or nothing for it to attach to
        host = ''.join(t.surface for t in tokens[start:adp_start])
        adp_surface = ''.join(t.surface for t in tokens[adp_start:end])

        verb_position = position + 1
        adverb_between = False
        while (verb_position < len(spans)
               and all(tagset.is_adverb(tokens[i].tag)
                       for i in range(*spans[verb_position]))):
            adverb_between = True
            verb_position += 1
        if verb_position >= len(spans):
            continue
        v_start, v_end = spans[verb_position]

        if not tagset.is_stem(tokens[v_start].tag):
            continue
        stem = tokens[v_start].surface
        if v_start + 1 >= v_end:
            continue
        verbalizer = tokens[v_start + 1]
        if verbalizer.surface != '하' or not tagset.is_verbalizer(verbalizer.tag):
            continue
        cursor = v_start + 2
        ep_surfaces: list[str] = []
        while cursor < v_end and tagset.is_tense(tokens[cursor].tag):
            ep_surfaces.append(tokens[cursor].surface)
            cursor += 1
        if cursor >= v_end or not tagset.is_ending(tokens[cursor].tag):
            continue
        ending = tokens[cursor]
        trailing = tokens[cursor + 1:v_end]
        if any(not tagset.is_adposition(t.tag) for t in trailing):
            continue
        found.append(Occurrence(
            host_eojeol=tokens[start].eojeol_index,
            host=host,
            adp_span=(adp_start, end),
            adp_surface=adp_surface,
            stem=stem,
            verb_span=(v_start, cursor + 1),
            ep_surfaces=tuple(ep_surfaces),
            ending_surface=ending.surface,
            ending_tag=ending.tag,
            trailing=tuple(t.surface for t in trailing),
            adverb_between=adverb_between,
        ))
    return found


def _licensed_suffixes(entry, options: Options) -> tuple[str, ...]:
    if options.legal_register and GERUNDIAL_SUFFIX not in entry.suffix_forms:
        return entry.suffix_forms + (GERUNDIAL_SUFFIX,)
    return entry.suffix_forms


def match_tagged(sentence: TaggedSentence, lex: Lexicon,
                 options: Options | None = None) -> list[Match]:
    """Locate lexicon constructions in a tagged sentence.

    Strict mode drops windows with a tense infix; the default keeps them
    (and bare final-ending inflections) so the classifier can reject them
    with diagnostics.
    """
    options = options or Options()
    tagset = options.tagset
    matches: list[Match] = []
    consumed_until = -1  # eojeol index; hosts may not serve two matches
    for occ in scan_occurrences(sentence, tagset):
        if occ.host_eojeol <= consumed_until:
            continue
        entry = lex.by_stem(occ.stem)
        if entry is None:
            continue
        lemma = hangul.SURFACE_TO_LEMMA.get(occ.adp_surface)
        if lemma is None or lemma not in entry.licensed_lemmas():
            continue
        if not hangul.compatible(lemma, occ.adp_surface, occ.host,
                                 non_hangul_form=options.non_hangul_form):
            continue
        suffix = occ.suffix_realization()
        if occ.ep_surfaces:
            if options.strict:
                continue
        else:
            licensed = suffix in _licensed_suffixes(entry, options)
            is_final = occ.ending_tag == tagset.final_tag
            if not licensed and not is_final and suffix != GERUNDIAL_SUFFIX:
                continue
        trailing = None
        if occ.trailing:
            if len(occ.trailing) > 1:
                continue
            particle = occ.trailing[0]
            if (particle not in options.trailing_particles
                    or suffix not in CONNECTIVE_SUFFIXES):
                continue
            trailing = particle
        matches.append(Match(
            sent_id=sentence.sent_id,
            layer='tagged',
            host_eojeol=occ.host_eojeol,
            verb_span=occ.verb_span,
            stem=occ.stem,
            post_lemma=lemma,
            post_surface=occ.adp_surface,
            suffix=suffix,
            post_offset=len(occ.host),
            adp_span=occ.adp_span,
            trailing=trailing,
        ))
        consumed_until = sentence.tokens[occ.verb_span[0]].eojeol_index
    return matches


def match_raw(sentence: RawSentence, index: FormIndex,
              options: Options | None = None,
              sent_id: str = '') -> list[Match]:
    """Locate surface forms over adjacent eojeol pairs.

    The host must end in the allomorph its final consonant selects; the
    longest matching postposition wins; a connective verb form may carry
    one trailing particle from the configured set.
    """
    options = options or Options()
    matches: list[Match] = []
    eojeols = sentence.eojeols
    i = 0
    while i + 1 < len(eojeols):
        match = _match_pair(i, eojeols[i], eojeols[i + 1], index, options,
                            sent_id)
        if match is not None:
            matches.append(match)
            i += 2
        else:
            i += 1
    return matches


def _candidate_forms(verb_eojeol: str, index: FormIndex,
                     options: Options) -> list[tuple[SurfaceForm, str | None]]:
    candidates = [(form, None) for form in index.by_verb.get(verb_eojeol, [])]
    for particle in sorted(options.trailing_particles, key=len, reverse=True):
        if not verb_eojeol.endswith(particle):
            continue
        rest = verb_eojeol[:-len(particle)]
        if not rest:
            continue
        for form in index.by_verb.get(rest, []):
            if form.suffix in CONNECTIVE_SUFFIXES:
                candidates.append((form, particle))
    return candidates


def _match_pair(i: int, host_eojeol: str, verb_eojeol: str, index: FormIndex,
                options: Options, sent_id: str) -> Match | None:
    best: tuple[SurfaceForm, str, str | None] | None = None
    for form, trailing in _candidate_forms(verb_eojeol, index, options):
        post = form.post_surface
        if not host_eojeol.endswith(post) or len(host_eojeol) <= len(post):
            continue
        host = host_eojeol[:-len(post)]
        if not hangul.compatible(form.post_lemma, post, host,
                                 non_hangul_form=options.non_hangul_form):
            continue
        if best is None or len(post) > len(best[0].post_surface):
            best = (form, host, trailing)
    if best is None:
        return None
    form, host, trailing = best
    return Match(
        sent_id=sent_id,
        layer='raw',
        host_eojeol=i,
        verb_span=(i + 1, i + 2),
        stem=form.stem,
        post_lemma=form.post_lemma,
        post_surface=form.post_surface,
        suffix=form.suffix,
        post_offset=len(host),
        adp_span=None,
        trailing=trailing,
    )
