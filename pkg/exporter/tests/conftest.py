import json

import pytest


@pytest.fixture()
def requests_file(tmp_path):
    def make(records, name="requests.jsonl"):
        path = tmp_path / name
        with open(path, "w", encoding="utf-8") as handle:
            for record in records:
                handle.write(json.dumps(record, ensure_ascii=False) + "\n")
        return path

    return make


@pytest.fixture()
def sample_records():
    return [
        {"lang": "es", "word": "luna", "sent_id": 0, "token_index": 1,
         "sentence": "La luna es blanca."},
        {"lang": "es", "word": "luna", "sent_id": 4, "token_index": 3,
         "sentence": "El mar brilla bajo la luna."},
        {"lang": "ro", "word": "carte", "sent_id": 3, "token_index": 0,
         "sentence": "O carte nouă vine noaptea."},
    ]
