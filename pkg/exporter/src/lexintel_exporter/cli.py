"""Command-line interface.

`export` encodes a request file into contextual vectors; `subset` trims a
word2vec-text vector file to a vocabulary.  Exit codes: 0 success,
1 processing error, 2 bad inputs.
"""

import functools
import sys

import click

from .encoders import STRATEGIES, EncoderError
from .export import export_contextual
from .requests_io import DEFAULT_CAP, RequestError
from .subset import SubsetError, subset_static


def _handled(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except (RequestError, SubsetError, FileNotFoundError, ValueError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        except (EncoderError, RuntimeError, OSError) as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(1)

    return wrapper


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
def main():
    """Contextual-vector extraction for the intelligibility pipeline."""


@main.command("export")
@click.option("--model", "model_id", required=True,
              help="sentence-transformers model id/path, or hash:<dim> for the "
                   "deterministic offline test encoder.")
@click.option("--in", "requests_path", required=True, type=click.Path(exists=True),
              help="Request file (JSON lines).")
@click.option("--out", "output_path", required=True, type=click.Path(),
              help="Output vector file (JSON lines).")
@click.option("--batch-size", default=32, show_default=True, type=int)
@click.option("--strategy", default="pooled", show_default=True,
              type=click.Choice(STRATEGIES),
              help="pooled sentence vector, or mean of the word's subword states.")
@click.option("--cap", default=DEFAULT_CAP, show_default=True, type=int,
              help="Maximum occurrences allowed per (lang, word).")
@_handled
def cmd_export(model_id, requests_path, output_path, batch_size, strategy, cap):
    """Encode request records into per-occurrence contextual vectors."""
    written = export_contextual(requests_path, model_id, output_path,
                                batch_size=batch_size, strategy=strategy, cap=cap)
    click.echo(f"{written} vectors -> {output_path}")


@main.command("subset")
@click.option("--vectors", "vectors_path", required=True, type=click.Path(exists=True),
              help="word2vec-text vector file.")
@click.option("--vocabulary", "vocabulary_path", required=True, type=click.Path(exists=True),
              help="One word per line.")
@click.option("--out", "output_path", required=True, type=click.Path())
@_handled
def cmd_subset(vectors_path, vocabulary_path, output_path):
    """Keep only the vector rows for words in the vocabulary."""
    kept = subset_static(vectors_path, vocabulary_path, output_path)
    click.echo(f"{kept} vectors -> {output_path}")


def entry():
    main(prog_name="lexintel-export")


if __name__ == "__main__":
    entry()
