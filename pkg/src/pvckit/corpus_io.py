"""Corpus readers and writers.

Three line formats, all UTF-8 with LF endings:

* plain text: sentences split on newlines and on terminal punctuation
  followed by whitespace; eojeols split on Unicode whitespace;
* tagged: one `surface<TAB>tag<TAB>eojeol_index` line per morpheme, blank
  line between sentences; `+`-joined surface/tag pairs are split;
* treebank: 10-column CoNLL-U records in, 11-column cupt records out
  (the extra column carries MWE annotations).
"""

from __future__ import annotations

from dataclasses import dataclass, field

TERMINAL_PUNCT = frozenset('.?!')

CUPT_COLUMNS = ('ID', 'FORM', 'LEMMA', 'UPOS', 'XPOS', 'FEATS', 'HEAD',
                'DEPREL', 'DEPS', 'MISC')
CUPT_HEADER = ('# global.columns = ID FORM LEMMA UPOS XPOS FEATS HEAD '
               'DEPREL DEPS MISC PARSEME:MWE')


class CorpusFormatError(ValueError):
    """Malformed corpus input; carries a line or byte position when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class RawSentence:
    eojeols: tuple[str, ...]
    offsets: tuple[tuple[int, int], ...]  # byte span per eojeol


@dataclass(frozen=True)
class MorphToken:
    surface: str
    tag: str
    eojeol_index: int


@dataclass(frozen=True)
class TaggedSentence:
    sent_id: str
    tokens: tuple[MorphToken, ...]

    def eojeol_spans(self) -> list[tuple[int, int]]:
        """Token index ranges (end-exclusive), one per eojeol."""
        spans: list[tuple[int, int]] = []
        start = 0
        for i in range(1, len(self.tokens)):
            if self.tokens[i].eojeol_index != self.tokens[start].eojeol_index:
                spans.append((start, i))
                start = i
        if self.tokens:
            spans.append((start, len(self.tokens)))
        return spans

    def eojeol_surface(self, eojeol_index: int) -> str:
        return ''.join(t.surface for t in self.tokens
                       if t.eojeol_index == eojeol_index)


@dataclass(frozen=True)
class MweSpan:
    mwe_id: int
    category: str
    token_indices: tuple[int, ...]  # 0-based into rows


@dataclass(frozen=True)
class CuptSentence:
    sent_id: str
    rows: tuple[tuple[str, ...], ...]  # ten treebank columns per token
    mwes: tuple[MweSpan, ...] = field(default_factory=tuple)


def _decode(source) -> str:
    if isinstance(source, str):
        return source
    if isinstance(source, (bytes, bytearray)):
        data = bytes(source)
    else:
        data = source.read()
        if isinstance(data, str):
            return data
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as exc:
        raise CorpusFormatError(
            f"invalid UTF-8 at byte {exc.start}") from None


def read_plain(source) -> list[RawSentence]:
    """Split raw text into sentences of whitespace-delimited eojeols.

    A newline always ends a sentence; so does an eojeol ending in terminal
    punctuation once whitespace follows.  The punctuation stays attached to
    its eojeol, so no non-whitespace character is lost.
    """
    text = _decode(source)
    sentences: list[RawSentence] = []
    eojeols: list[str] = []
    offsets: list[tuple[int, int]] = []
    word_chars: list[str] = []
    word_start = 0
    byte_pos = 0

    def end_word():
        if word_chars:
            eojeols.append(''.join(word_chars))
            offsets.append((word_start, byte_pos))
            word_chars.clear()

    def end_sentence():
        end_word()
        if eojeols:
            sentences.append(RawSentence(tuple(eojeols), tuple(offsets)))
            eojeols.clear()
            offsets.clear()

    for ch in text:
        if ch.isspace():
            pending_break = bool(word_chars) and word_chars[-1] in TERMINAL_PUNCT
            end_word()
            if ch == '\n' or pending_break:
                end_sentence()
        else:
            if not word_chars:
                word_start = byte_pos
            word_chars.append(ch)
        byte_pos += len(ch.encode('utf-8'))
    end_sentence()
    return sentences


def _split_joined(surface: str, tag: str, lineno: int) -> list[tuple[str, str]]:
    """Expand `+`-joined surface/tag pairs into aligned morphemes."""
    if '+' not in tag:
        return [(surface, tag)]
    tags = tag.split('+')
    surfaces = surface.split('+')
    if len(surfaces) != len(tags):
        raise CorpusFormatError(
            f"{len(surfaces)} surfaces for {len(tags)} tags in {surface!r}/{tag!r}",
            line=lineno)
    if any(not s for s in surfaces) or any(not t for t in tags):
        raise CorpusFormatError(
            f"empty morpheme in {surface!r}/{tag!r}", line=lineno)
    return list(zip(surfaces, tags))


def read_tagged(source) -> list[TaggedSentence]:
    """Parse the three-column tagged format."""
    text = _decode(source)
    sentences: list[TaggedSentence] = []
    tokens: list[MorphToken] = []

    def end_sentence():
        if tokens:
            sentences.append(TaggedSentence(str(len(sentences) + 1),
                                            tuple(tokens)))
            tokens.clear()

    for lineno, line in enumerate(text.split('\n'), start=1):
        line = line.rstrip('\r')
        if not line.strip():
            end_sentence()
            continue
        cells = line.split('\t')
        if len(cells) != 3:
            raise CorpusFormatError(
                f"expected 3 columns, got {len(cells)}", line=lineno)
        surface, tag, index_text = cells
        try:
            eojeol_index = int(index_text)
        except ValueError:
            raise CorpusFormatError(
                f"eojeol index must be an integer, got {index_text!r}",
                line=lineno) from None
        if eojeol_index < 0:
            raise CorpusFormatError("negative eojeol index", line=lineno)
        if tokens and eojeol_index < tokens[-1].eojeol_index:
            raise CorpusFormatError(
                f"eojeol index decreased ({tokens[-1].eojeol_index} -> "
                f"{eojeol_index})", line=lineno)
        if not surface:
            raise CorpusFormatError("empty surface", line=lineno)
        for morph_surface, morph_tag in _split_joined(surface, tag, lineno):
            tokens.append(MorphToken(morph_surface, morph_tag, eojeol_index))
    end_sentence()
    return sentences


def write_tagged(sentences) -> bytes:
    """Serialize tagged sentences; inverse of read_tagged up to sent ids."""
    blocks = []
    for sentence in sentences:
        blocks.append('\n'.join(
            f"{t.surface}\t{t.tag}\t{t.eojeol_index}" for t in sentence.tokens))
    return ('\n\n'.join(blocks) + '\n').encode('utf-8')


def read_conllu(source) -> list[TaggedSentence]:
    """Read 10-column treebank records, splitting `+`-joined analyses.

    XPOS carries the morpheme tags; when joined, the LEMMA column supplies
    the aligned morpheme surfaces.  Each word row is one eojeol.  Range
    rows (`a-b` ids) and empty nodes (`a.b` ids) are skipped.
    """
    text = _decode(source)
    sentences: list[TaggedSentence] = []
    tokens: list[MorphToken] = []
    sent_id: str | None = None
    expected_id = 1
    eojeol_index = 0

    def end_sentence():
        nonlocal sent_id, expected_id, eojeol_index
        if tokens:
            sentences.append(TaggedSentence(
                sent_id or str(len(sentences) + 1), tuple(tokens)))
            tokens.clear()
        sent_id = None
        expected_id = 1
        eojeol_index = 0

    for lineno, line in enumerate(text.split('\n'), start=1):
        line = line.rstrip('\r')
        if not line.strip():
            end_sentence()
            continue
        if line.startswith('#'):
            key, sep, value = line[1:].partition('=')
            if sep and key.strip() == 'sent_id':
                sent_id = value.strip()
            continue
        cells = line.split('\t')
        if len(cells) != 10:
            raise CorpusFormatError(
                f"expected 10 columns, got {len(cells)}", line=lineno)
        token_id, form, lemma, _upos, xpos = cells[:5]
        if '-' in token_id or '.' in token_id:
            continue
        try:
            numeric_id = int(token_id)
        except ValueError:
            raise CorpusFormatError(
                f"bad token id {token_id!r}", line=lineno) from None
        if numeric_id != expected_id:
            raise CorpusFormatError(
                f"token id {numeric_id} out of sequence (expected "
                f"{expected_id})", line=lineno)
        expected_id += 1
        if '+' in xpos:
            pairs = _split_joined(lemma, xpos, lineno)
        else:
            pairs = [(form, xpos)]
        for morph_surface, morph_tag in pairs:
            tokens.append(MorphToken(morph_surface, morph_tag, eojeol_index))
        eojeol_index += 1
    end_sentence()
    return sentences


def _check_cupt(sentence: CuptSentence):
    n_rows = len(sentence.rows)
    for row in sentence.rows:
        if len(row) != 10:
            raise CorpusFormatError(
                f"{sentence.sent_id}: row with {len(row)} columns")
    ids = [m.mwe_id for m in sentence.mwes]
    if ids != list(range(1, len(ids) + 1)):
        raise CorpusFormatError(
            f"{sentence.sent_id}: MWE ids must be 1..k consecutive, got {ids}")
    for mwe in sentence.mwes:
        if not mwe.token_indices:
            raise CorpusFormatError(
                f"{sentence.sent_id}: MWE {mwe.mwe_id} has no tokens")
        if list(mwe.token_indices) != sorted(set(mwe.token_indices)):
            raise CorpusFormatError(
                f"{sentence.sent_id}: MWE {mwe.mwe_id} indices must be "
                "strictly increasing")
        if mwe.token_indices[-1] >= n_rows:
            raise CorpusFormatError(
                f"{sentence.sent_id}: MWE {mwe.mwe_id} index out of range")


def write_cupt(sentences) -> bytes:
    """Serialize cupt: global header, then 11-column sentence blocks."""
    out = [CUPT_HEADER]
    for sentence in sentences:
        _check_cupt(sentence)
        cells_by_token: dict[int, list[str]] = {}
        for mwe in sentence.mwes:
            for position, token_index in enumerate(mwe.token_indices):
                label = (f"{mwe.mwe_id}:{mwe.category}" if position == 0
                         else str(mwe.mwe_id))
                cells_by_token.setdefault(token_index, []).append(label)
        out.append(f"# sent_id = {sentence.sent_id}")
        for i, row in enumerate(sentence.rows):
            mwe_cell = ';'.join(cells_by_token[i]) if i in cells_by_token else '*'
            out.append('\t'.join(row) + '\t' + mwe_cell)
        out.append('')
    return ('\n'.join(out) + '\n').encode('utf-8')


def read_cupt(source) -> list[CuptSentence]:
    """Parse cupt back into sentences; inverse of write_cupt."""
    text = _decode(source)
    lines = text.split('\n')
    if not lines or lines[0] != CUPT_HEADER:
        raise CorpusFormatError("missing global.columns header", line=1)
    sentences: list[CuptSentence] = []
    rows: list[tuple[str, ...]] = []
    sent_id: str | None = None
    mwe_tokens: dict[int, tuple[str | None, list[int]]] = {}

    def end_sentence(lineno: int):
        nonlocal sent_id
        if rows:
            mwes = []
            for mwe_id in sorted(mwe_tokens):
                category, indices = mwe_tokens[mwe_id]
                if category is None:
                    raise CorpusFormatError(
                        f"MWE {mwe_id} never carries a category", line=lineno)
                mwes.append(MweSpan(mwe_id, category, tuple(indices)))
            sentence = CuptSentence(sent_id or str(len(sentences) + 1),
                                    tuple(rows), tuple(mwes))
            _check_cupt(sentence)
            sentences.append(sentence)
        rows.clear()
        mwe_tokens.clear()
        sent_id = None

    for lineno, line in enumerate(lines[1:], start=2):
        line = line.rstrip('\r')
        if not line.strip():
            end_sentence(lineno)
            continue
        if line.startswith('#'):
            key, sep, value = line[1:].partition('=')
            if sep and key.strip() == 'sent_id':
                sent_id = value.strip()
            continue
        cells = line.split('\t')
        if len(cells) != 11:
            raise CorpusFormatError(
                f"expected 11 columns, got {len(cells)}", line=lineno)
        token_index = len(rows)
        rows.append(tuple(cells[:10]))
        mwe_cell = cells[10]
        if mwe_cell not in ('*', '_'):
            for part in mwe_cell.split(';'):
                id_text, sep, category = part.partition(':')
                try:
                    mwe_id = int(id_text)
                except ValueError:
                    raise CorpusFormatError(
                        f"bad MWE code {part!r}", line=lineno) from None
                known_category, indices = mwe_tokens.get(mwe_id, (None, []))
                if sep:
                    known_category = category
                indices.append(token_index)
                mwe_tokens[mwe_id] = (known_category, indices)
    end_sentence(len(lines))
    return sentences
