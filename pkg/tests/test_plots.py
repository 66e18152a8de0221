from pvckit import miner, plots


def small_report():
    stats = {
        '관': miner.StemStats('관', 30, 1, 4, 4, 0),
        '산책': miner.StemStats('산책', 12, 3, 4, 8, 18),
        '구': miner.StemStats('구', 22, 5, 7, 13, 0),
    }
    return miner.rank(stats, k=300)


def test_render_report_figures(tmp_path):
    paths = plots.render_report_figures(small_report(), tmp_path)
    assert [p.name for p in paths] == ['candidate_frequency.png',
                                       'candidate_boundness.png']
    for path in paths:
        assert path.exists()
        assert path.stat().st_size > 0
        assert path.read_bytes()[:8] == b'\x89PNG\r\n\x1a\n'


def test_render_creates_directory(tmp_path):
    target = tmp_path / 'nested' / 'figs'
    paths = plots.render_report_figures(small_report(), target)
    assert all(p.parent == target for p in paths)
