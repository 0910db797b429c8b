"""Batch encoding of export requests into the contextual-vector format."""

import json

from .encoders import STRATEGIES, load_encoder
from .requests_io import DEFAULT_CAP, load_requests


def export_contextual(requests_path, model_id: str, output_path, batch_size: int = 32,
                      strategy: str = "pooled", cap: int = DEFAULT_CAP) -> int:
    """Encode every request and append records to `output_path` in request
    order.  Returns the number of records written.

    Output records are ``{"lang", "word", "sent_id", "token_index",
    "vector"}``; all vectors share the encoder's dimensionality.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r} (choose from {', '.join(STRATEGIES)})")
    if batch_size < 1:
        raise ValueError("batch size must be >= 1")
    requests = load_requests(requests_path, cap=cap)
    encoder = load_encoder(model_id)
    vectors = encoder.encode(requests, strategy=strategy, batch_size=batch_size)
    if len(vectors) != len(requests):
        raise RuntimeError(
            f"encoder returned {len(vectors)} vectors for {len(requests)} requests")
    with open(output_path, "w", encoding="utf-8", newline="\n") as handle:
        for request, vector in zip(requests, vectors):
            record = {
                "lang": request.lang,
                "word": request.word,
                "sent_id": request.sent_id,
                "token_index": request.token_index,
                "vector": [float(x) for x in vector],
            }
            handle.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            handle.write("\n")
    return len(requests)
