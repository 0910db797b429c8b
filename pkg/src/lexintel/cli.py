"""Command-line driver for the intelligibility pipeline.

Subcommands: stats, pairsim, matrix, eval, needs-transcription,
export-requests.  Exit codes: 0 success, 1 computation error,
2 configuration or resource error.
"""

import csv
import functools
import sys

import click

from . import pipeline
from .aggregate import (ChannelConfig, matrix_report, write_heatmap_grid,
                        write_json, write_matrix_csv)
from .config import apply_overrides, load_run_config, resolve_channel_configs
from .errors import ConfigurationError, ToolkitError
from .evaluation import evaluate_against_cloze, load_cloze_results
from .langs import pair_slug


def _warn(message):
    click.echo(f"warning: {message}", err=True)


def _handled(fn):
    """Map toolkit errors to the documented exit codes."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ConfigurationError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except OSError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except (ToolkitError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--config", "-c", "config_path", required=True,
              type=click.Path(), help="Run configuration file (INI).")
@click.option("--languages", default=None,
              help="Comma-separated subset of the configured languages.")
@click.option("--seed", type=int, default=None, help="Override the run seed.")
@click.option("--workers", type=int, default=None, help="Override the worker count.")
@click.option("--output-dir", type=click.Path(), default=None, help="Override the output directory.")
@click.option("--surface", default=None,
              help="Surface channels (comma list of: orthographic, phonetic).")
@click.option("--semantic", default=None,
              help="Semantic channels (comma list of: static, contextual).")
@click.pass_context
@_handled
def main(ctx, config_path, languages, seed, workers, output_dir, surface, semantic):
    """Directional lexical intelligibility scores between related languages."""
    config = load_run_config(config_path)
    apply_overrides(config, languages=languages, seed=seed, workers=workers,
                    output_dir=output_dir, surface=surface, semantic=semantic)
    ctx.obj = config


def _prepare(config, need_corpus=True, need_channels=True):
    configs = resolve_channel_configs(config, warn=_warn) if need_channels else []
    resources = pipeline.load_resources(config, configs, need_corpus=need_corpus, warn=_warn)
    config.output_dir.mkdir(parents=True, exist_ok=True)
    return configs, resources


@main.command("stats")
@click.pass_obj
@_handled
def cmd_stats(config):
    """Corpus statistics (token, related-word and aligned-pair counts)."""
    _, resources = _prepare(config, need_channels=False)
    for a, b in config.language_pairs():
        slug = pair_slug(a, b)
        stats = pipeline.score_language_pair(config, resources, a, b, configs=[],
                                             table={}).stats
        payload = {"corpus": config.corpus_name, "lang_a": min(a, b), "lang_b": max(a, b),
                   **stats.as_dict()}
        out = config.output_dir / f"stats.{slug}.json"
        write_json(payload, out)
        click.echo(f"{slug}: sentences={stats.n_sentences} related={stats.related_words} "
                   f"aligned={stats.aligned_pairs} -> {out}")


PAIRSIM_HEADER = [
    "pair_id", "lang_a", "word_a", "lang_b", "word_b", "relation",
    "surface_channel", "semantic_channel", "surface_sim", "semantic_sim",
    "index", "available",
]


@main.command("pairsim")
@click.pass_obj
@_handled
def cmd_pairsim(config):
    """Per-pair channel scores and intelligibility indices (CSV)."""
    configs, resources = _prepare(config, need_corpus=False)
    out = config.output_dir / "pair_similarity.csv"
    rows = 0
    with open(out, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(PAIRSIM_HEADER)
        for a, b in config.language_pairs():
            table = pipeline.pair_similarity_table(resources, a, b, configs)
            for pair_id in sorted(table):
                sim = table[pair_id]
                pair = resources.lexicon.by_id[pair_id]
                for channel_config in sorted(configs):
                    surface_score = sim.surface_scores.get(channel_config.surface)
                    semantic_score = sim.semantic_scores.get(channel_config.semantic)
                    index = sim.index(channel_config)
                    writer.writerow([
                        pair_id, pair.lang_a, pair.word_a, pair.lang_b, pair.word_b,
                        pair.relation, channel_config.surface, channel_config.semantic,
                        _fmt(surface_score), _fmt(semantic_score), _fmt(index),
                        "true" if index is not None else "false",
                    ])
                    rows += 1
    click.echo(f"{rows} rows -> {out}")


def _fmt(value):
    return "" if value is None else f"{value:.4f}"


@main.command("matrix")
@click.option("--render-heatmaps", is_flag=True, default=False,
              help="Also render PNG heatmaps (requires matplotlib).")
@click.pass_obj
@_handled
def cmd_matrix(config, render_heatmaps):
    """Directional score matrices for every channel configuration."""
    configs, resources = _prepare(config)
    matrix, stats_by_pair, tables = pipeline.build_matrix(config, resources, configs)
    coverage = pipeline.embedding_coverage(resources) if resources.stores else None

    csv_path = config.output_dir / "matrix.csv"
    write_matrix_csv(matrix, csv_path)
    report = matrix_report(matrix, corpus_stats_by_pair=stats_by_pair, coverage=coverage,
                           unscored_pair_counts=pipeline.unscored_pair_counts(tables, configs))
    json_path = config.output_dir / "matrix.json"
    write_json(report, json_path)
    if coverage is not None:
        write_json(coverage, config.output_dir / "coverage.json")
    for channel_config in sorted(configs):
        grid_path = config.output_dir / f"heatmap.{channel_config.slug}.csv"
        write_heatmap_grid(matrix, channel_config, grid_path)
        if render_heatmaps:
            _render_heatmap(matrix, channel_config,
                            config.output_dir / f"heatmap.{channel_config.slug}.png")
    click.echo(f"matrix -> {csv_path}")
    click.echo(f"report -> {json_path}")


def _render_heatmap(matrix, channel_config, path):
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    import numpy as np

    langs = matrix.languages
    grid = np.full((len(langs), len(langs)), np.nan)
    for i, speaker in enumerate(langs):
        for j, listener in enumerate(langs):
            if speaker != listener:
                grid[i, j] = matrix.get(channel_config, speaker, listener).score_pct
    fig, ax = plt.subplots(figsize=(1.2 * len(langs) + 1.5, 1.2 * len(langs)))
    image = ax.imshow(grid, cmap="viridis")
    ax.set_xticks(range(len(langs)), langs)
    ax.set_yticks(range(len(langs)), langs)
    ax.set_xlabel("listener")
    ax.set_ylabel("speaker")
    ax.set_title(channel_config.slug)
    for i in range(len(langs)):
        for j in range(len(langs)):
            if not np.isnan(grid[i, j]):
                ax.text(j, i, f"{grid[i, j]:.1f}", ha="center", va="center", color="white")
    fig.colorbar(image, ax=ax, shrink=0.8)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


@main.command("eval")
@click.option("--cloze", "cloze_path", required=True, type=click.Path(),
              help="CSV of human cloze results: speaker,listener,score.")
@click.option("--n-perm", type=int, default=100_000, show_default=True,
              help="Permutations for the significance estimate.")
@click.pass_obj
@_handled
def cmd_eval(config, cloze_path, n_perm):
    """Spearman correlation of one configuration's matrix against cloze data."""
    configs, resources = _prepare(config)
    preferred = ChannelConfig("orthographic", "static")
    channel_config = preferred if preferred in configs else sorted(configs)[0]
    if len(configs) > 1:
        _warn(f"multiple channel configurations selected; evaluating {channel_config.slug}")
    matrix, _, _ = pipeline.build_matrix(config, resources, [channel_config])
    cloze = load_cloze_results(cloze_path)
    report = evaluate_against_cloze(
        matrix.directional_scores(channel_config), cloze,
        configuration=channel_config.slug, n_perm=n_perm, seed=config.seed, warn=_warn)
    out = config.output_dir / "correlation.json"
    write_json(report.as_dict(), out)
    click.echo(f"rho={report.rho:.4f} p_permutation={report.p_permutation:.5f} "
               f"n={report.n} -> {out}")


@main.command("needs-transcription")
@click.pass_obj
@_handled
def cmd_needs_transcription(config):
    """Lexicon words still lacking a phonetic transcription (TSV)."""
    _, resources = _prepare(config, need_corpus=False, need_channels=False)
    phonetic = resources.phonetic_lexicon
    if phonetic is None and config.phonetic_lexicon is not None and config.phonetic_lexicon.is_file():
        from .surface import load_phonetic_lexicon

        phonetic = load_phonetic_lexicon(config.phonetic_lexicon)
    missing = []
    for lang in sorted(config.languages):
        for word in sorted(resources.lexicon.words_for_language(lang)):
            if phonetic is None or phonetic.get(lang, word) is None:
                missing.append((lang, word))
    out = config.output_dir / "needs_transcription.tsv"
    with open(out, "w", encoding="utf-8", newline="\n") as handle:
        for lang, word in missing:
            handle.write(f"{lang}\t{word}\n")
    click.echo(f"{len(missing)} words -> {out}")


@main.command("export-requests")
@click.pass_obj
@_handled
def cmd_export_requests(config):
    """Occurrence records for the contextual-vector exporter (JSON lines)."""
    _, resources = _prepare(config, need_channels=False)
    for a, b in config.language_pairs():
        slug = pair_slug(a, b)
        requests = pipeline.collect_export_requests(config, resources, a, b)
        out = config.output_dir / f"export_requests.{slug}.jsonl"
        pipeline.write_jsonl(requests, out)
        click.echo(f"{slug}: {len(requests)} requests -> {out}")


def entry():
    main(prog_name="lexintel")


if __name__ == "__main__":
    entry()
