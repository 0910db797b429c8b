import pytest

from lexintel_exporter.requests_io import RequestError, load_requests


def test_loads_in_file_order(requests_file, sample_records):
    path = requests_file(sample_records)
    requests = load_requests(path)
    assert [r.word for r in requests] == ["luna", "luna", "carte"]
    assert requests[0].sentence == "La luna es blanca."
    assert requests[1].sent_id == 4


def test_cap_exceeded_rejected(requests_file):
    records = [{"lang": "es", "word": "w", "sent_id": i, "token_index": 0,
                "sentence": "Una frase."} for i in range(5)]
    path = requests_file(records)
    with pytest.raises(RequestError, match="cap exceeded"):
        load_requests(path, cap=4)
    assert len(load_requests(path, cap=5)) == 5


def test_empty_sentence_rejected(requests_file):
    path = requests_file([{"lang": "es", "word": "w", "sent_id": 0,
                           "token_index": 0, "sentence": "   "}])
    with pytest.raises(RequestError, match="empty sentence"):
        load_requests(path)


def test_missing_field_rejected(requests_file):
    path = requests_file([{"lang": "es", "word": "w", "sent_id": 0,
                           "sentence": "Una frase."}])
    with pytest.raises(RequestError, match="token_index"):
        load_requests(path)


def test_invalid_json_rejected(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text("{nope\n", encoding="utf-8")
    with pytest.raises(RequestError, match="invalid JSON"):
        load_requests(path)


def test_blank_lines_ignored(requests_file, sample_records, tmp_path):
    path = requests_file(sample_records)
    padded = tmp_path / "padded.jsonl"
    padded.write_text("\n" + path.read_text() + "\n\n", encoding="utf-8")
    assert len(load_requests(padded)) == 3
