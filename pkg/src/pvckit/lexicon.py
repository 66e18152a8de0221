"""The closed-class lexicon of postpositional verb-based constructions.

Each entry pairs a bound verb stem with the postpositions it licenses, the
verb surface forms it fossilizes into, and bookkeeping for homonymous full
verbs.  The built-in lexicon carries the fourteen attested constructions in
corpus-frequency order.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from . import hangul

# Verb surfaces an entry may license: the adnominal form, the connective
# forms, and the conjunctive form.
SUFFIX_INVENTORY = ('한', '해', '해서', '하여', '하고')

ADNOMINAL_SUFFIX = '한'
CONNECTIVE_SUFFIXES = frozenset({'해', '해서', '하여', '하고'})
# Clause-closing gerundial attested in legal text; licensed only by config.
GERUNDIAL_SUFFIX = '함'

# The only stems whose verb can also stand as a main predicate.
PREDICATIVE_STEMS = frozenset({'속', '향', '기'})

POSTPOSITION_LEMMAS = frozenset(hangul.ALLOMORPHS)

TSV_HEADER = ('stem_hangul', 'stem_roman', 'postpositions',
              'extra_postpositions', 'gloss', 'suffix_forms', 'predicative',
              'homonyms')


class LexiconFormatError(ValueError):
    """Malformed lexicon input; carries a line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class PvcEntry:
    stem_hangul: str
    stem_roman: str
    postpositions: tuple[str, ...]
    gloss: str
    suffix_forms: tuple[str, ...]
    predicative: bool = False
    extra_postpositions: tuple[tuple[str, str], ...] = ()
    homonyms: tuple[tuple[str, str], ...] = ()

    def licensed_lemmas(self) -> tuple[str, ...]:
        """Base postpositions plus conditional extensions, in declared order."""
        extras = tuple(lemma for lemma, _cond in self.extra_postpositions
                       if lemma not in self.postpositions)
        return self.postpositions + extras


@dataclass(frozen=True)
class Lexicon:
    entries: tuple[PvcEntry, ...]
    version: str = 'builtin-1'

    def by_stem(self, stem: str) -> PvcEntry | None:
        for entry in self.entries:
            if entry.stem_hangul == stem:
                return entry
        return None

    def stems(self) -> frozenset[str]:
        return frozenset(e.stem_hangul for e in self.entries)


FULL = ('한', '해', '해서', '하여')
SHORT = ('한', '해')

_BUILTIN = (
    PvcEntry('대', 'tay', ('에',), 'about', FULL,
             homonyms=(('를 대하다', 'treat'),)),
    PvcEntry('의', 'ui', ('에',), 'by', FULL),
    PvcEntry('통', 'thong', ('를',), 'via, through', FULL,
             homonyms=(('와 통하다', 'connect, flow'),)),
    PvcEntry('위', 'wi', ('를',), 'for', FULL,
             homonyms=(('를 위하다', 'care for'),)),
    PvcEntry('인', 'in', ('로',), 'due to', FULL),
    PvcEntry('관', 'kwan', ('에',), 'about', FULL),
    PvcEntry('속', 'sok', ('에',), 'in, belong to', SHORT, predicative=True),
    PvcEntry('향', 'hyang', ('로', '를'), 'towards', SHORT, predicative=True,
             extra_postpositions=(('에게', 'animate'),)),
    PvcEntry('비', 'pi', ('에',), 'than, compared to', FULL,
             homonyms=(('와 비하다', 'be comparable to'),)),
    PvcEntry('불구', 'pwulkwu', ('에도',), 'although', ('하고',),
             homonyms=(('불구되다', ''), ('불구가 되다', ''))),
    PvcEntry('비롯', 'piros', ('를',), 'such as', FULL,
             homonyms=(('에서 비롯하다', ''), ('비롯되다', ''))),
    PvcEntry('기', 'ki', ('를',), 'since', SHORT, predicative=True),
    PvcEntry('반', 'pan', ('에',), 'against, unlike', FULL,
             homonyms=(('에(게) 반하다', 'fall for'),)),
    PvcEntry('위시', 'wisi', ('를',), 'such as', FULL),
)


def builtin() -> Lexicon:
    """The built-in fourteen-entry lexicon."""
    return Lexicon(entries=_BUILTIN)


def validate(lex: Lexicon, *,
             suffix_inventory: tuple[str, ...] = SUFFIX_INVENTORY) -> list[str]:
    """Check every entry against the lexicon invariants.

    Returns one message per violation, empty when the lexicon is clean.
    """
    problems: list[str] = []
    seen: set[str] = set()
    for entry in lex.entries:
        stem = entry.stem_hangul
        if not stem:
            problems.append("entry with empty stem")
            continue
        if any(hangul.decompose(ch) is None for ch in stem):
            problems.append(f"{stem}: stem contains non-syllable characters")
        if stem in seen:
            problems.append(f"{stem}: duplicate stem")
        seen.add(stem)
        if not entry.postpositions:
            problems.append(f"{stem}: postpositions must be nonempty")
        for lemma in entry.licensed_lemmas():
            if lemma not in POSTPOSITION_LEMMAS:
                problems.append(f"{stem}: unknown postposition {lemma!r}")
        if not entry.suffix_forms:
            problems.append(f"{stem}: suffix_forms must be nonempty")
        for form in entry.suffix_forms:
            if form not in suffix_inventory:
                problems.append(f"{stem}: unknown suffix form {form!r}")
        if entry.predicative and stem not in PREDICATIVE_STEMS:
            problems.append(f"{stem}: predicative flag not allowed for this stem")
    return problems


def _parse_homonym(text: str) -> tuple[str, str]:
    pattern, _, gloss = text.partition('=')
    return pattern.strip(), gloss.strip()


def _format_homonym(hom: tuple[str, str]) -> str:
    pattern, gloss = hom
    return f"{pattern}={gloss}" if gloss else pattern


def _split_list(cell: str) -> list[str]:
    return [part.strip() for part in cell.split(',') if part.strip()]


def _read_text(source) -> str:
    if isinstance(source, (bytes, bytearray)):
        return bytes(source).decode('utf-8')
    if isinstance(source, str):
        return source
    raw = source.read()
    return raw.decode('utf-8') if isinstance(raw, bytes) else raw


def load_tsv(source) -> Lexicon:
    """Parse the tab-separated lexicon format (header row required)."""
    text = _read_text(source)
    lines = text.split('\n')
    if lines and lines[-1] == '':
        lines.pop()
    if not lines:
        raise LexiconFormatError("empty lexicon", line=1)
    header = tuple(lines[0].split('\t'))
    if header != TSV_HEADER:
        raise LexiconFormatError(
            f"bad header, expected {list(TSV_HEADER)}", line=1)
    entries = []
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        cells = line.split('\t')
        if len(cells) != len(TSV_HEADER):
            raise LexiconFormatError(
                f"expected {len(TSV_HEADER)} columns, got {len(cells)}",
                line=lineno)
        stem, roman, posts, extras, gloss, suffixes, pred, homs = cells
        if pred not in ('0', '1'):
            raise LexiconFormatError(
                f"predicative must be 0 or 1, got {pred!r}", line=lineno)
        extra_pairs = []
        for part in _split_list(extras):
            lemma, sep, cond = part.partition(':')
            if not sep:
                raise LexiconFormatError(
                    f"extra postposition needs lemma:tag, got {part!r}",
                    line=lineno)
            extra_pairs.append((lemma.strip(), cond.strip()))
        homonyms = tuple(_parse_homonym(h) for h in homs.split(';')
                         if h.strip())
        entries.append(PvcEntry(
            stem_hangul=stem,
            stem_roman=roman,
            postpositions=tuple(_split_list(posts)),
            extra_postpositions=tuple(extra_pairs),
            gloss=gloss,
            suffix_forms=tuple(_split_list(suffixes)),
            predicative=pred == '1',
            homonyms=homonyms,
        ))
    return Lexicon(entries=tuple(entries), version='file')


def export_tsv(lex: Lexicon) -> bytes:
    """Serialize in the canonical column order; inverse of load_tsv."""
    out = ['\t'.join(TSV_HEADER)]
    for e in lex.entries:
        out.append('\t'.join((
            e.stem_hangul,
            e.stem_roman,
            ','.join(e.postpositions),
            ','.join(f"{lemma}:{cond}" for lemma, cond in e.extra_postpositions),
            e.gloss,
            ','.join(e.suffix_forms),
            '1' if e.predicative else '0',
            ';'.join(_format_homonym(h) for h in e.homonyms),
        )))
    return ('\n'.join(out) + '\n').encode('utf-8')


_TEXT_KEYS = ('stem', 'roman', 'postpositions', 'extra', 'gloss', 'suffixes',
              'predicative', 'homonyms')


def load_text(source) -> Lexicon:
    """Parse the block format: `key: value` lines, blank line between entries."""
    text = _read_text(source)
    entries = []
    block: dict[str, str] = {}
    block_line = 1

    def finish(lineno: int):
        if not block:
            return
        missing = [k for k in ('stem', 'postpositions', 'suffixes')
                   if k not in block]
        if missing:
            raise LexiconFormatError(
                f"entry missing keys {missing}", line=lineno)
        extras = []
        for part in _split_list(block.get('extra', '')):
            lemma, sep, cond = part.partition(':')
            if not sep:
                raise LexiconFormatError(
                    f"extra postposition needs lemma:tag, got {part!r}",
                    line=lineno)
            extras.append((lemma.strip(), cond.strip()))
        entries.append(PvcEntry(
            stem_hangul=block['stem'],
            stem_roman=block.get('roman', ''),
            postpositions=tuple(_split_list(block['postpositions'])),
            extra_postpositions=tuple(extras),
            gloss=block.get('gloss', ''),
            suffix_forms=tuple(_split_list(block['suffixes'])),
            predicative=block.get('predicative', '0') == '1',
            homonyms=tuple(_parse_homonym(h)
                           for h in block.get('homonyms', '').split(';')
                           if h.strip()),
        ))
        block.clear()

    for lineno, line in enumerate(text.split('\n'), start=1):
        stripped = line.strip()
        if not stripped:
            finish(block_line)
            block_line = lineno + 1
            continue
        key, sep, value = stripped.partition(':')
        key = key.strip()
        if not sep or key not in _TEXT_KEYS:
            raise LexiconFormatError(f"bad line {stripped!r}", line=lineno)
        block[key] = value.strip()
    finish(block_line)
    return Lexicon(entries=tuple(entries), version='file')


def export_text(lex: Lexicon) -> bytes:
    blocks = []
    for e in lex.entries:
        lines = [f"stem: {e.stem_hangul}"]
        if e.stem_roman:
            lines.append(f"roman: {e.stem_roman}")
        lines.append(f"postpositions: {','.join(e.postpositions)}")
        if e.extra_postpositions:
            lines.append("extra: " + ','.join(
                f"{lemma}:{cond}" for lemma, cond in e.extra_postpositions))
        if e.gloss:
            lines.append(f"gloss: {e.gloss}")
        lines.append(f"suffixes: {','.join(e.suffix_forms)}")
        lines.append(f"predicative: {'1' if e.predicative else '0'}")
        if e.homonyms:
            lines.append("homonyms: "
                         + ';'.join(_format_homonym(h) for h in e.homonyms))
        blocks.append('\n'.join(lines))
    return ('\n\n'.join(blocks) + '\n').encode('utf-8')


def load(source, format: str = 'tsv') -> Lexicon:
    """Load and validate a lexicon from a stream in `tsv` or `text` format."""
    if format == 'tsv':
        lex = load_tsv(source)
    elif format in ('text', 'structured-text'):
        lex = load_text(source)
    else:
        raise ValueError(f"unknown lexicon format {format!r}")
    problems = validate(lex)
    if problems:
        raise LexiconFormatError(
            "invalid lexicon: " + '; '.join(problems))
    return lex


def with_suffixes(lex: Lexicon, extra_suffixes: tuple[str, ...]) -> Lexicon:
    """Extend every entry's suffix inventory (e.g. the gerundial 함 for legal text)."""
    new = tuple(
        replace(e, suffix_forms=e.suffix_forms + tuple(
            s for s in extra_suffixes if s not in e.suffix_forms))
        for e in lex.entries)
    return Lexicon(entries=new, version=lex.version + '+suffixes')
