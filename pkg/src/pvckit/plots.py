"""Diagnostic figures for candidate reports.

Rendered next to the TSV so a mining run can be eyeballed: how steep the
frequency curve is, and whether boundness cleanly separates fossilized
stems from free light-verb nouns.
"""

from __future__ import annotations

import warnings
from pathlib import Path

import matplotlib

matplotlib.use('Agg')

import matplotlib.pyplot as plt  # noqa: E402

from .config import Options  # noqa: E402
from .miner import CandidateReport  # noqa: E402


def _save(fig, path: Path):
    # headless hosts often lack Hangul glyphs; the figure is still useful
    with warnings.catch_warnings():
        warnings.filterwarnings('ignore', message='Glyph .* missing')
        fig.tight_layout()
        fig.savefig(path, dpi=120)
    plt.close(fig)


def plot_frequency(report: CandidateReport, path: Path, top: int = 30):
    rows = report.rows[:top]
    fig, ax = plt.subplots(figsize=(max(6, len(rows) * 0.35), 4))
    ax.bar(range(len(rows)), [r.stats.total for r in rows], color='#4878a8')
    ax.set_xticks(range(len(rows)))
    ax.set_xticklabels([r.stats.stem for r in rows], rotation=60, fontsize=8)
    ax.set_ylabel('pattern occurrences')
    ax.set_title('candidate stems by frequency')
    _save(fig, path)


def plot_boundness(report: CandidateReport, path: Path,
                   options: Options | None = None):
    options = options or Options()
    totals = [r.stats.total for r in report.rows]
    scores = [r.boundness for r in report.rows]
    fig, ax = plt.subplots(figsize=(6, 4))
    ax.scatter(totals, scores, s=18, color='#a85448', alpha=0.8)
    ax.axhline(options.theta_free, linestyle='--', linewidth=1, color='gray')
    ax.set_xscale('log')
    ax.set_xlabel('pattern occurrences (log)')
    ax.set_ylabel('boundness')
    ax.set_ylim(-0.05, 1.05)
    ax.set_title('boundness vs. frequency')
    _save(fig, path)


def render_report_figures(report: CandidateReport, outdir: Path,
                          options: Options | None = None) -> list[Path]:
    """Write the standard figure set; returns the created paths."""
    outdir = Path(outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    frequency_path = outdir / 'candidate_frequency.png'
    boundness_path = outdir / 'candidate_boundness.png'
    plot_frequency(report, frequency_path)
    plot_boundness(report, boundness_path, options)
    return [frequency_path, boundness_path]
