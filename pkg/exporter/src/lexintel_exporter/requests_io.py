"""Reading and validating export-request files.

A request file is JSON lines, one record per sampled occurrence:
``{"lang", "word", "sent_id", "token_index", "sentence"}``.  Sampling
down to the per-word cap is the pipeline's job; a file exceeding the cap
is rejected here rather than re-sampled.
"""

import json
from collections import Counter
from dataclasses import dataclass

DEFAULT_CAP = 200

_REQUIRED_FIELDS = ("lang", "word", "sent_id", "token_index", "sentence")


class RequestError(ValueError):
    """Malformed or invariant-violating request file."""


@dataclass(frozen=True)
class ExportRequest:
    lang: str
    word: str
    sent_id: int
    token_index: int
    sentence: str


def load_requests(path, cap: int = DEFAULT_CAP) -> list[ExportRequest]:
    """Parse a request file, enforcing the per-word occurrence cap."""
    requests = []
    per_word = Counter()
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise RequestError(f"{path}:{line_no}: invalid JSON: {exc.msg}") from None
            missing = [f for f in _REQUIRED_FIELDS if f not in record]
            if missing:
                raise RequestError(f"{path}:{line_no}: missing field(s) {', '.join(missing)}")
            sentence = record["sentence"]
            if not isinstance(sentence, str) or not sentence.strip():
                raise RequestError(f"{path}:{line_no}: empty sentence")
            request = ExportRequest(
                lang=str(record["lang"]),
                word=str(record["word"]),
                sent_id=int(record["sent_id"]),
                token_index=int(record["token_index"]),
                sentence=sentence,
            )
            per_word[(request.lang, request.word)] += 1
            if per_word[(request.lang, request.word)] > cap:
                raise RequestError(
                    f"{path}:{line_no}: cap exceeded: more than {cap} occurrences "
                    f"for {request.lang}:{request.word}")
            requests.append(request)
    return requests
