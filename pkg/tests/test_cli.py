import json

import pytest

from pvckit import cli, lexicon, matcher


def run(argv, capsysbinary):
    code = cli.main(argv)
    captured = capsysbinary.readouterr()
    return code, captured.out, captured.err


class TestLexiconCommand:

    def test_validate_builtin(self, capsysbinary):
        code, out, _ = run(['lexicon', 'validate'], capsysbinary)
        assert code == 0
        assert out.decode('utf-8').strip() == '14 entries, 0 violations'

    def test_validate_broken_lexicon(self, tmp_path, capsysbinary):
        data = lexicon.export_tsv(lexicon.builtin()).decode('utf-8')
        lines = data.rstrip('\n').split('\n')
        lines.append(lines[6])  # duplicate row
        path = tmp_path / 'lex.tsv'
        path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
        code, out, err = run(['lexicon', 'validate', '--lexicon', str(path)],
                             capsysbinary)
        assert code == 1
        assert b'15 entries, 1 violations' in out
        assert b'duplicate' in err

    def test_validate_malformed_file_is_usage_error(self, tmp_path,
                                                    capsysbinary):
        path = tmp_path / 'lex.tsv'
        path.write_text('not\ta\tlexicon\n', encoding='utf-8')
        code, _, err = run(['lexicon', 'validate', '--lexicon', str(path)],
                           capsysbinary)
        assert code == 2
        assert b'header' in err

    def test_match_rejects_invalid_lexicon(self, tmp_path, data_dir,
                                           capsysbinary):
        data = lexicon.export_tsv(lexicon.builtin()).decode('utf-8')
        lines = data.rstrip('\n').split('\n')
        lines.append(lines[6])
        path = tmp_path / 'lex.tsv'
        path.write_text('\n'.join(lines) + '\n', encoding='utf-8')
        code, _, err = run(
            ['match', '--lexicon', str(path),
             str(data_dir / 'fixtures.tagged')], capsysbinary)
        assert code == 2
        assert b'invalid lexicon' in err

    def test_export_round_trips(self, tmp_path, capsysbinary):
        out_path = tmp_path / 'lex.tsv'
        code, _, _ = run(['lexicon', 'export', '-o', str(out_path)],
                         capsysbinary)
        assert code == 0
        loaded = lexicon.load(out_path.read_bytes())
        assert loaded.entries == lexicon.builtin().entries

    def test_export_text_format(self, capsysbinary):
        code, out, _ = run(['lexicon', 'export', '--format', 'text'],
                           capsysbinary)
        assert code == 0
        assert out.startswith('stem: 대\n'.encode('utf-8'))


class TestFormsCommand:

    def test_row_count_equals_expansion(self, capsysbinary, lex):
        code, out, _ = run(['forms'], capsysbinary)
        assert code == 0
        lines = out.decode('utf-8').strip().split('\n')
        assert len(lines) - 1 == len(matcher.expand(lex))
        assert lines[0] == 'stem\tpost_lemma\tpost_surface\tverb_surface\tsuffix'
        assert '관\t에\t에\t관한\t한' in lines


class TestMatchCommand:

    def test_raw_input(self, tmp_path, capsysbinary):
        path = tmp_path / 'raw.txt'
        path.write_text('게에 관한 책\n', encoding='utf-8')
        code, out, _ = run(['match', '--input', 'raw', str(path)],
                           capsysbinary)
        assert code == 0
        record = json.loads(out.decode('utf-8'))
        assert record['schema'] == 'pvc-match/1'
        assert record['stem'] == '관'
        assert record['layer'] == 'raw'

    def test_tagged_input(self, data_dir, capsysbinary):
        code, out, _ = run(['match', str(data_dir / 'fixtures.tagged')],
                           capsysbinary)
        assert code == 0
        lines = out.decode('utf-8').strip().split('\n')
        assert len(lines) == 18  # one per classified fixture row
        assert all(json.loads(l)['schema'] == 'pvc-match/1' for l in lines)

    def test_strict_flag_drops_tense_windows(self, data_dir, capsysbinary):
        code, out, _ = run(
            ['match', '--strict', str(data_dir / 'fixtures.tagged')],
            capsysbinary)
        assert code == 0
        suffixes = [json.loads(l)['suffix']
                    for l in out.decode('utf-8').strip().split('\n')]
        assert all('였' not in s for s in suffixes)

    def test_missing_file_is_usage_error(self, capsysbinary):
        code, _, err = run(['match', '/nonexistent/corpus.tsv'], capsysbinary)
        assert code == 2
        assert b'cannot read' in err

    def test_conllu_input(self, tmp_path, capsysbinary):
        path = tmp_path / 'ex1.conllu'
        path.write_text(
            '# sent_id = ex1\n'
            '1\t게에\t게+에\tNOUN\tNNG+JKB\t_\t0\troot\t_\t_\n'
            '2\t관한\t관+하+ㄴ\tVERB\tXR+XSV+ETM\t_\t1\tacl\t_\t_\n'
            '3\t책\t책\tNOUN\tNNG\t_\t2\tobj\t_\t_\n',
            encoding='utf-8')
        code, out, _ = run(['match', '--input', 'conllu', str(path)],
                           capsysbinary)
        assert code == 0
        record = json.loads(out.decode('utf-8'))
        assert record['stem'] == '관'
        assert record['sent_id'] == 'ex1'


class TestMineCommand:

    def test_report_matches_golden(self, data_dir, capsysbinary):
        code, out, _ = run(['mine', str(data_dir / 'synthetic.tagged')],
                           capsysbinary)
        assert code == 0
        assert out == (data_dir / 'synthetic_report.tsv').read_bytes()

    def test_k_cutoff(self, data_dir, capsysbinary):
        code, out, _ = run(['mine', '-k', '3',
                            str(data_dir / 'synthetic.tagged')], capsysbinary)
        assert code == 0
        assert len(out.decode('utf-8').strip().split('\n')) == 4

    def test_figures_rendered(self, data_dir, tmp_path, capsysbinary):
        figure_dir = tmp_path / 'figs'
        code, _, err = run(
            ['mine', str(data_dir / 'synthetic.tagged'),
             '-o', str(tmp_path / 'report.tsv'), '--figures',
             str(figure_dir)], capsysbinary)
        assert code == 0
        frequency = figure_dir / 'candidate_frequency.png'
        boundness = figure_dir / 'candidate_boundness.png'
        assert frequency.exists() and frequency.stat().st_size > 0
        assert boundness.exists() and boundness.stat().st_size > 0
        assert (tmp_path / 'report.tsv').read_bytes() == (
            data_dir / 'synthetic_report.tsv').read_bytes()


class TestClassifyCommand:

    def test_report_matches_golden(self, data_dir, capsysbinary):
        code, out, _ = run(['classify', str(data_dir / 'fixtures.tagged')],
                           capsysbinary)
        assert code == 0
        assert out == (data_dir / 'fixtures_report.jsonl').read_bytes()

    def test_stdin_streaming(self, data_dir, capsysbinary, monkeypatch):
        import io
        import sys
        payload = (data_dir / 'fixtures.tagged').read_bytes()
        monkeypatch.setattr(sys, 'stdin',
                            type('S', (), {'buffer': io.BytesIO(payload)})())
        code, out, _ = run(['classify', '-'], capsysbinary)
        assert code == 0
        assert out == (data_dir / 'fixtures_report.jsonl').read_bytes()


class TestAnnotateCommand:

    def test_cupt_matches_golden(self, data_dir, capsysbinary):
        code, out, _ = run(['annotate', str(data_dir / 'fixtures.tagged')],
                           capsysbinary)
        assert code == 0
        assert out == (data_dir / 'fixtures.cupt').read_bytes()

    def test_report_side_channel(self, data_dir, tmp_path, capsysbinary):
        report = tmp_path / 'report.jsonl'
        code, out, _ = run(
            ['annotate', str(data_dir / 'fixtures.tagged'),
             '--report', str(report)], capsysbinary)
        assert code == 0
        assert report.read_bytes() == (
            data_dir / 'fixtures_report.jsonl').read_bytes()

    def test_parallel_run_is_byte_identical(self, data_dir, tmp_path,
                                            capsysbinary):
        serial = run(['annotate', str(data_dir / 'fixtures.tagged')],
                     capsysbinary)
        parallel = run(['annotate', '--jobs', '4',
                        str(data_dir / 'fixtures.tagged')], capsysbinary)
        assert serial[0] == parallel[0] == 0
        assert serial[1] == parallel[1]


class TestConfig:

    def test_config_file_applies(self, data_dir, tmp_path, capsysbinary):
        config = tmp_path / 'run.cfg'
        config.write_text('strict = 1\n# comment\n', encoding='utf-8')
        code, out, _ = run(
            ['match', '--config', str(config),
             str(data_dir / 'fixtures.tagged')], capsysbinary)
        assert code == 0
        suffixes = [json.loads(l)['suffix']
                    for l in out.decode('utf-8').strip().split('\n')]
        assert all('였' not in s for s in suffixes)

    def test_unknown_config_key_rejected(self, data_dir, tmp_path,
                                         capsysbinary):
        config = tmp_path / 'run.cfg'
        config.write_text('no_such_key = 1\n', encoding='utf-8')
        code, _, err = run(
            ['match', '--config', str(config),
             str(data_dir / 'fixtures.tagged')], capsysbinary)
        assert code == 1
        assert b'unknown config key' in err

    def test_set_overrides_config(self, data_dir, tmp_path, capsysbinary):
        config = tmp_path / 'run.cfg'
        config.write_text('rank_k = 5\n', encoding='utf-8')
        code, out, _ = run(
            ['mine', '--config', str(config), '--set', 'rank_k=2',
             str(data_dir / 'synthetic.tagged')], capsysbinary)
        assert code == 0
        assert len(out.decode('utf-8').strip().split('\n')) == 3

    def test_bad_threshold_rejected(self, data_dir, capsysbinary):
        code, _, err = run(
            ['classify', '--set', 'theta_free=1.5',
             str(data_dir / 'fixtures.tagged')], capsysbinary)
        assert code == 1
        assert b'theta_free' in err


class TestUsageErrors:

    def test_no_command(self, capsysbinary):
        with pytest.raises(SystemExit) as exc:
            cli.main([])
        assert exc.value.code == 2

    def test_unknown_command(self, capsysbinary):
        with pytest.raises(SystemExit) as exc:
            cli.main(['frobnicate'])
        assert exc.value.code == 2
