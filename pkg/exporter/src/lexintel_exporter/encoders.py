"""Encoder backends.

The production backend wraps a sentence-transformers model (any model id
or local path), run in inference mode so identical inputs give identical
vectors.  The ``hash:<dim>`` backend is a deterministic stand-in for
offline tests and pipeline dry runs: vectors are seeded from a digest of
the input text and carry no semantics.

Two extraction strategies:

* ``pooled`` (default): the encoder's sentence-level pooled vector,
  attributed to the occurrence.
* ``token``: mean of the subword states overlapping the requested word's
  character span (needs a fast tokenizer with offset mappings).
"""

import hashlib
import re

import numpy as np

STRATEGIES = ("pooled", "token")

# same word shape the pipeline documents: letter runs with internal
# hyphens/apostrophes
_TOKEN_RE = re.compile(r"[^\W\d_]+(?:['’-][^\W\d_]+)*")


class EncoderError(RuntimeError):
    """Backend could not be loaded or cannot serve the requested strategy."""


def word_span(sentence: str, token_index: int):
    """Character span of the `token_index`-th word token of `sentence`."""
    for i, match in enumerate(_TOKEN_RE.finditer(sentence)):
        if i == token_index:
            return match.start(), match.end()
    raise EncoderError(f"sentence has no word token at index {token_index}: {sentence!r}")


class HashEncoder:
    """Deterministic pseudo-vectors from a text digest (testing backend)."""

    def __init__(self, dim: int):
        if dim < 1:
            raise EncoderError(f"hash encoder dimensionality must be >= 1, got {dim}")
        self.dim = dim

    def _vector(self, key: str) -> np.ndarray:
        digest = hashlib.sha256(key.encode("utf-8")).digest()
        seed = int.from_bytes(digest[:8], "big")
        rng = np.random.default_rng(seed)
        vector = rng.standard_normal(self.dim)
        return vector / np.linalg.norm(vector)

    def encode(self, requests, strategy: str, batch_size: int) -> np.ndarray:
        rows = []
        for request in requests:
            if strategy == "pooled":
                key = request.sentence
            else:
                start, end = word_span(request.sentence, request.token_index)
                key = f"{request.sentence}|span:{start}-{end}"
            rows.append(self._vector(key))
        return np.vstack(rows) if rows else np.empty((0, self.dim))


class SentenceTransformerEncoder:
    """sentence-transformers backend (pooled sentence vectors or token spans)."""

    def __init__(self, model_id: str):
        try:
            from sentence_transformers import SentenceTransformer
        except ImportError as exc:
            raise EncoderError(
                "sentence-transformers is not installed; install the 'models' extra") from exc
        try:
            self.model = SentenceTransformer(model_id)
        except Exception as exc:
            raise EncoderError(f"cannot load model {model_id!r}: {exc}") from exc
        self.model.eval()

    def encode(self, requests, strategy: str, batch_size: int) -> np.ndarray:
        sentences = [r.sentence for r in requests]
        if strategy == "pooled":
            return np.asarray(self.model.encode(
                sentences, batch_size=batch_size, convert_to_numpy=True,
                show_progress_bar=False))
        return self._token_vectors(requests, batch_size)

    def _token_vectors(self, requests, batch_size: int) -> np.ndarray:
        tokenizer = getattr(self.model, "tokenizer", None)
        if tokenizer is None or not getattr(tokenizer, "is_fast", False):
            raise EncoderError("token strategy needs a fast tokenizer with offset mappings")
        rows = []
        for start in range(0, len(requests), batch_size):
            batch = requests[start:start + batch_size]
            states = self.model.encode(
                [r.sentence for r in batch], batch_size=batch_size,
                output_value="token_embeddings", convert_to_numpy=False,
                show_progress_bar=False)
            for request, token_states in zip(batch, states):
                span = word_span(request.sentence, request.token_index)
                encoded = tokenizer(request.sentence, return_offsets_mapping=True,
                                    truncation=True)
                offsets = encoded["offset_mapping"]
                keep = [k for k, (a, b) in enumerate(offsets)
                        if a != b and a < span[1] and b > span[0]]
                vectors = token_states.cpu().numpy()
                if not keep:
                    rows.append(vectors.mean(axis=0))
                else:
                    rows.append(vectors[keep].mean(axis=0))
        return np.vstack(rows)


def load_encoder(model_id: str):
    """`hash:<dim>` gives the deterministic test backend; anything else is
    treated as a sentence-transformers model id or path."""
    if model_id.startswith("hash:"):
        try:
            dim = int(model_id.split(":", 1)[1])
        except ValueError:
            raise EncoderError(f"bad hash encoder spec {model_id!r}; use hash:<dim>") from None
        return HashEncoder(dim)
    return SentenceTransformerEncoder(model_id)
