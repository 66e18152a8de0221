"""Command-line interface: every pipeline stage as a subcommand.

All runs are deterministic: identical inputs and configuration produce
byte-identical outputs, whatever the degree of internal parallelism.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import replace
from pathlib import Path

from . import annotator, classifier, corpus_io, lexicon, matcher, miner
from .config import Options, apply_setting, load_config


class InputError(Exception):
    """Unreadable or undecodable input; maps to exit code 2."""


def _read_input(path: str) -> bytes:
    if path == '-':
        return sys.stdin.buffer.read()
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _write_output(path: str | None, data: bytes):
    if path is None or path == '-':
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    else:
        Path(path).write_bytes(data)


def _load_lexicon(args, validate: bool = True) -> lexicon.Lexicon:
    if args.lexicon is None:
        return lexicon.builtin()
    data = _read_input(args.lexicon)
    try:
        if validate:
            return lexicon.load(data, format=args.lexicon_format)
        if args.lexicon_format == 'tsv':
            return lexicon.load_tsv(data)
        return lexicon.load_text(data)
    except lexicon.LexiconFormatError as exc:
        raise InputError(f"lexicon: {exc}") from None


def _build_options(args) -> Options:
    options = Options()
    if getattr(args, 'config', None):
        try:
            text = _read_input(args.config).decode('utf-8')
        except UnicodeDecodeError:
            raise InputError(f"config file {args.config} is not UTF-8") from None
        options = load_config(text, options)
    for setting in getattr(args, 'set', None) or []:
        key, sep, value = setting.partition('=')
        if not sep:
            raise InputError(f"--set expects key=value, got {setting!r}")
        options = apply_setting(options, key, value)
    if getattr(args, 'strict', False):
        options = replace(options, strict=True)
    if getattr(args, 'legal_register', False):
        options = replace(options, legal_register=True)
    if getattr(args, 'k', None) is not None:
        options = replace(options, rank_k=args.k)
    return options.validated()


def _read_corpus(args) -> list[corpus_io.TaggedSentence]:
    reader = (corpus_io.read_conllu
              if getattr(args, 'format', 'tagged') == 'conllu'
              else corpus_io.read_tagged)
    try:
        return reader(_read_input(args.corpus))
    except corpus_io.CorpusFormatError as exc:
        raise InputError(f"{args.corpus}: {exc}") from None


def _pmap(function, items, jobs: int) -> list:
    """Order-preserving map, optionally over a worker pool."""
    if jobs <= 1:
        return [function(item) for item in items]
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(function, items))


def cmd_lexicon(args) -> int:
    if args.action == 'validate':
        # parse errors stay usage errors; rule violations exit 1
        lex = _load_lexicon(args, validate=False)
        problems = lexicon.validate(lex)
        print(f"{len(lex.entries)} entries, {len(problems)} violations")
        for problem in problems:
            print(problem, file=sys.stderr)
        return 1 if problems else 0
    lex = _load_lexicon(args)
    if args.format == 'tsv':
        _write_output(args.output, lexicon.export_tsv(lex))
    else:
        _write_output(args.output, lexicon.export_text(lex))
    return 0


def cmd_forms(args) -> int:
    lex = _load_lexicon(args)
    options = _build_options(args)
    lines = ['\t'.join(('stem', 'post_lemma', 'post_surface', 'verb_surface',
                        'suffix'))]
    for form in matcher.expand(lex, options):
        lines.append('\t'.join((form.stem, form.post_lemma, form.post_surface,
                                form.verb_surface, form.suffix)))
    _write_output(args.output, ('\n'.join(lines) + '\n').encode('utf-8'))
    return 0


def cmd_match(args) -> int:
    lex = _load_lexicon(args)
    options = _build_options(args)
    if args.input == 'raw':
        try:
            sentences = corpus_io.read_plain(_read_input(args.corpus))
        except corpus_io.CorpusFormatError as exc:
            raise InputError(f"{args.corpus}: {exc}") from None
        index = matcher.FormIndex.from_lexicon(lex, options)
        matches = []
        for n, sentence in enumerate(sentences, start=1):
            matches.extend(matcher.match_raw(sentence, index, options,
                                             sent_id=str(n)))
    else:
        args.format = args.input
        tagged_sentences = _read_corpus(args)
        per_sentence = _pmap(
            lambda s: matcher.match_tagged(s, lex, options),
            tagged_sentences, args.jobs)
        matches = [m for group in per_sentence for m in group]
    _write_output(args.output, annotator.matches_json(matches))
    return 0


def cmd_mine(args) -> int:
    options = _build_options(args)
    sentences = _read_corpus(args)
    stats = miner.mine(sentences, options)
    report = miner.rank(stats, k=options.rank_k)
    _write_output(args.output, miner.report_tsv(report))
    if args.figures:
        from . import plots
        for path in plots.render_report_figures(report, Path(args.figures),
                                                options):
            print(f"wrote {path}", file=sys.stderr)
    return 0


def cmd_classify(args) -> int:
    lex = _load_lexicon(args)
    options = _build_options(args)
    sentences = _read_corpus(args)

    def work(sentence):
        results = [(m, classifier.classify(m, sentence, lex, options))
                   for m in matcher.match_tagged(sentence, lex, options)]
        return (sentence, results)

    classified = _pmap(work, sentences, args.jobs)
    _write_output(args.output, annotator.report_json(classified))
    return 0


def cmd_annotate(args) -> int:
    lex = _load_lexicon(args)
    options = _build_options(args)
    sentences = _read_corpus(args)

    def work(sentence):
        results = [(m, classifier.classify(m, sentence, lex, options))
                   for m in matcher.match_tagged(sentence, lex, options)]
        return (sentence, results)

    classified = _pmap(work, sentences, args.jobs)
    cupt_sentences = [annotator.annotate(sentence, results, options)
                      for sentence, results in classified]
    _write_output(args.output, corpus_io.write_cupt(cupt_sentences))
    if args.report:
        _write_output(args.report, annotator.report_json(classified))
    return 0


def _add_common(parser: argparse.ArgumentParser, corpus: bool = True):
    parser.add_argument('--lexicon', metavar='PATH',
                        help='lexicon file (default: built-in)')
    parser.add_argument('--lexicon-format', choices=('tsv', 'text'),
                        default='tsv')
    parser.add_argument('--config', metavar='PATH',
                        help='key = value configuration file')
    parser.add_argument('--set', action='append', metavar='KEY=VALUE',
                        help='override one config setting')
    parser.add_argument('-o', '--output', metavar='PATH',
                        help='output path (default: stdout)')
    if corpus:
        parser.add_argument('corpus', nargs='?', default='-',
                            help="input path or '-' for stdin")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog='pvckit',
        description='Mine, classify, and annotate Korean postpositional '
                    'verb-based constructions.')
    sub = parser.add_subparsers(dest='command', required=True)

    p_lex = sub.add_parser('lexicon', help='validate or export a lexicon')
    p_lex.add_argument('action', choices=('validate', 'export'))
    p_lex.add_argument('--format', choices=('tsv', 'text'), default='tsv')
    _add_common(p_lex, corpus=False)
    p_lex.set_defaults(func=cmd_lexicon)

    p_forms = sub.add_parser('forms', help='print the surface-form table')
    _add_common(p_forms, corpus=False)
    p_forms.set_defaults(func=cmd_forms)

    p_match = sub.add_parser('match', help='locate candidate constructions')
    p_match.add_argument('--input', choices=('raw', 'tagged', 'conllu'),
                         default='tagged')
    p_match.add_argument('--strict', action='store_true',
                         help='drop windows with tense infixes')
    p_match.add_argument('--jobs', type=int, default=1)
    _add_common(p_match)
    p_match.set_defaults(func=cmd_match)

    p_mine = sub.add_parser('mine', help='per-stem distributional report')
    p_mine.add_argument('--format', choices=('tagged', 'conllu'),
                        default='tagged')
    p_mine.add_argument('-k', type=int, help='rank cutoff (default 300)')
    p_mine.add_argument('--figures', metavar='DIR',
                        help='also render diagnostic figures into DIR')
    _add_common(p_mine)
    p_mine.set_defaults(func=cmd_mine)

    p_classify = sub.add_parser('classify',
                                help='label matches with construction types')
    p_classify.add_argument('--format', choices=('tagged', 'conllu'),
                            default='tagged')
    p_classify.add_argument('--strict', action='store_true')
    p_classify.add_argument('--legal-register', action='store_true',
                            help='license the gerundial 함 form')
    p_classify.add_argument('--jobs', type=int, default=1)
    _add_common(p_classify)
    p_classify.set_defaults(func=cmd_classify)

    p_annotate = sub.add_parser('annotate',
                                help='emit cupt with MWE annotations')
    p_annotate.add_argument('--format', choices=('tagged', 'conllu'),
                            default='tagged')
    p_annotate.add_argument('--strict', action='store_true')
    p_annotate.add_argument('--legal-register', action='store_true')
    p_annotate.add_argument('--report', metavar='PATH',
                            help='also write the JSON-lines report')
    p_annotate.add_argument('--jobs', type=int, default=1)
    _add_common(p_annotate)
    p_annotate.set_defaults(func=cmd_annotate)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"pvckit: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"pvckit: {exc}", file=sys.stderr)
        return 1


if __name__ == '__main__':
    sys.exit(main())
