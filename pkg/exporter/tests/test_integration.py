"""Full-loop check against the primary pipeline, through file formats only:
request records produced by the pipeline's own CLI are encoded here, and
the resulting vectors feed back into a matrix run with a contextual
channel."""

from pathlib import Path

import pytest

lexintel_cli = pytest.importorskip("lexintel.cli")

from click.testing import CliRunner

from lexintel_exporter.cli import main as exporter_main

TWO_LANG_FIXTURE = Path(__file__).resolve().parents[2] / "tests" / "fixtures" / "two"


@pytest.mark.skipif(not TWO_LANG_FIXTURE.is_dir(), reason="pipeline fixture not present")
def test_requests_to_vectors_to_matrix(tmp_path):
    out = tmp_path / "out"
    result = CliRunner().invoke(
        lexintel_cli.main,
        ["-c", str(TWO_LANG_FIXTURE / "config.ini"), "--output-dir", str(out),
         "export-requests"],
        catch_exceptions=False)
    assert result.exit_code == 0, result.output
    requests = out / "export_requests.es-ro.jsonl"
    assert requests.is_file()

    vectors = tmp_path / "ctx.es-ro.jsonl"
    result = CliRunner().invoke(
        exporter_main,
        ["export", "--model", "hash:16", "--in", str(requests), "--out", str(vectors)],
        catch_exceptions=False)
    assert result.exit_code == 0, result.output

    from lexintel.semantics import load_contextual_vectors

    occurrence_map = load_contextual_vectors(vectors)
    assert occurrence_map, "no contextual vectors loaded"
    request_count = len(requests.read_text().splitlines())
    assert sum(len(o.entries) for o in occurrence_map.values()) == request_count

    # drive a full contextual matrix off the freshly exported vectors
    config_text = (TWO_LANG_FIXTURE / "config.ini").read_text(encoding="utf-8")
    config_text = config_text.replace("es-ro = ctx/es-ro.jsonl", f"es-ro = {vectors}")
    for option in ("lexicon", "stopwords_dir", "corpus_dir", "phonetic_lexicon"):
        config_text = config_text.replace(f"{option} = ", f"{option} = {TWO_LANG_FIXTURE}/")
    config_text = config_text.replace("es = vectors/es.vec", f"es = {TWO_LANG_FIXTURE}/vectors/es.vec")
    config_text = config_text.replace("ro = vectors/ro.vec", f"ro = {TWO_LANG_FIXTURE}/vectors/ro.vec")
    config_path = tmp_path / "config.ini"
    config_path.write_text(config_text, encoding="utf-8")

    matrix_out = tmp_path / "matrix_out"
    result = CliRunner().invoke(
        lexintel_cli.main,
        ["-c", str(config_path), "--output-dir", str(matrix_out),
         "--surface", "orthographic", "--semantic", "contextual", "matrix"],
        catch_exceptions=False)
    assert result.exit_code == 0, result.output
    matrix_csv = (matrix_out / "matrix.csv").read_text(encoding="utf-8")
    assert "es,ro,orthographic,contextual" in matrix_csv
