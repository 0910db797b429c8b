"""Semantic similarity from word vectors.

Two channels: cosine similarity over cross-lingually aligned static word
vectors (with a form-based fallback for out-of-vocabulary words), and
average cross-pair cluster-center cosine similarity over contextual
occurrence vectors clustered per word.
"""

import json
from dataclasses import dataclass

import numpy as np

from .clustering import ClusterSet, cluster_vectors
from .errors import FormatError
from .langs import check_language
from .stemming import stem
from .surface import levenshtein, strip_accents

MAX_OCCURRENCES = 200

_PREFIX_LEN = 3
_PREFIX_DISTANCE_CAP = 3


class EmbeddingStore:
    """Aligned static word vectors for one language, with fallback indices.

    Lookup order for a normalized query: the original file key, the
    normalized key, then the cheapest form-based fallback (same stem,
    minimum edit distance; then same 3-character prefix within edit
    distance 3).
    """

    def __init__(self, lang: str, dim: int, vectors: dict[str, np.ndarray], duplicates: int = 0):
        self.lang = lang
        self.dim = dim
        self.vectors = vectors
        self.duplicates = duplicates
        self._norm_index: dict[str, str] = {}
        self._stem_index: dict[str, list[str]] = {}
        self._prefix_index: dict[str, list[str]] = {}
        for word in vectors:
            norm = strip_accents(word)
            if not norm:
                continue
            self._norm_index.setdefault(norm, word)
        for norm, word in self._norm_index.items():
            self._stem_index.setdefault(stem(lang, norm), []).append(norm)
            if len(norm) >= _PREFIX_LEN:
                self._prefix_index.setdefault(norm[:_PREFIX_LEN], []).append(norm)

    def __len__(self):
        return len(self.vectors)

    def __contains__(self, word):
        return word in self.vectors or word in self._norm_index

    def exact(self, word: str):
        if word in self.vectors:
            return word
        return self._norm_index.get(word)

    def stem_bucket(self, stem_key: str) -> list[str]:
        return self._stem_index.get(stem_key, [])

    def prefix_bucket(self, prefix: str) -> list[str]:
        return self._prefix_index.get(prefix, [])

    def vector_for_norm(self, norm: str) -> np.ndarray:
        return self.vectors[self._norm_index[norm]]


@dataclass(frozen=True, slots=True)
class ResolvedVector:
    """Result of resolving a word in an EmbeddingStore."""

    word: str
    matched_word: str
    method: str  # "exact" | "fallback"
    vector: np.ndarray


def load_static_embeddings(path, lang: str) -> EmbeddingStore:
    """Load word2vec-text-format vectors: header `<count> <dim>`, then one
    `word v1 ... v<dim>` row per line.  First occurrence of a duplicated
    word wins; duplicates are counted for reporting."""
    check_language(lang)
    vectors: dict[str, np.ndarray] = {}
    duplicates = 0
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().split()
        if len(header) != 2 or not all(field.isdigit() for field in header):
            raise FormatError(path, 1, "expected header '<count> <dim>'")
        dim = int(header[1])  # the row count in header[0] is informational
        for line_no, line in enumerate(handle, start=2):
            parts = line.rstrip("\n").split()
            if not parts:
                continue
            word, values = parts[0], parts[1:]
            if len(values) != dim:
                raise FormatError(path, line_no, f"expected {dim} vector components, got {len(values)}")
            if word in vectors:
                duplicates += 1
                continue
            try:
                vectors[word] = np.array([float(v) for v in values], dtype=float)
            except ValueError:
                raise FormatError(path, line_no, "non-numeric vector component") from None
    return EmbeddingStore(lang=lang, dim=dim, vectors=vectors, duplicates=duplicates)


def resolve_vector(store: EmbeddingStore, word: str):
    """Resolve `word` (normalized) to a vector, None when unrepresented.

    Fallback for out-of-vocabulary words: store words sharing the query's
    stem, closest by edit distance (ties lexicographic); failing that,
    store words sharing the first 3 characters within edit distance 3.
    """
    exact_key = store.exact(word)
    if exact_key is not None:
        return ResolvedVector(word=word, matched_word=exact_key, method="exact",
                              vector=store.vectors[exact_key])

    candidates = store.stem_bucket(stem(store.lang, word))
    best = _closest(word, candidates, cap=None)
    if best is None and len(word) >= _PREFIX_LEN:
        candidates = store.prefix_bucket(word[:_PREFIX_LEN])
        best = _closest(word, candidates, cap=_PREFIX_DISTANCE_CAP)
    if best is None:
        return None
    return ResolvedVector(word=word, matched_word=best, method="fallback",
                          vector=store.vector_for_norm(best))


def _closest(word, candidates, cap):
    best_word = None
    best_distance = None
    for candidate in candidates:
        distance = levenshtein(word, candidate)
        if cap is not None and distance > cap:
            continue
        if (best_distance is None or distance < best_distance
                or (distance == best_distance and candidate < best_word)):
            best_word, best_distance = candidate, distance
    return best_word


def raw_cosine(u: np.ndarray, v: np.ndarray) -> float:
    """Unclamped cosine similarity; raises on dimension mismatch or zero norm."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    norm_u = float(np.linalg.norm(u))
    norm_v = float(np.linalg.norm(v))
    if norm_u == 0.0 or norm_v == 0.0:
        raise ValueError("cosine similarity undefined for zero-norm vector")
    return float(np.dot(u, v) / (norm_u * norm_v))


def cosine_similarity(u, v) -> float:
    """Cosine similarity clamped to [0, 1] for use as a semantic score."""
    return min(1.0, max(0.0, raw_cosine(u, v)))


def cluster_occurrences(occ: "OccurrenceVectors") -> ClusterSet:
    """Cluster one word's occurrence vectors into sense clusters."""
    if not occ.entries:
        raise ValueError(f"no occurrence vectors for {occ.lang}:{occ.word}")
    vectors = np.vstack([entry[2] for entry in occ.entries])
    return cluster_vectors(key=(occ.lang, occ.word), vectors=vectors)


def contextual_similarity(ca: ClusterSet, cb: ClusterSet) -> float:
    """Mean cosine similarity over all cross pairs of cluster centers,
    clamped to [0, 1] (equivalently 1 minus the mean cosine distance)."""
    if len(ca.centers) == 0 or len(cb.centers) == 0:
        raise ValueError("contextual similarity needs non-empty cluster sets")
    total = 0.0
    for center_a in ca.centers:
        for center_b in cb.centers:
            total += raw_cosine(center_a, center_b)
    mean = total / (len(ca.centers) * len(cb.centers))
    return min(1.0, max(0.0, mean))


def nearest_semantic_neighbor(store_src: EmbeddingStore, word: str,
                              store_tgt: EmbeddingStore, candidates) -> tuple[str, float]:
    """The candidate target-language word closest in embedding space.

    Candidates are normalized words (typically the target language's
    corpus vocabulary); unrepresented candidates are skipped.  Ties break
    lexicographically.  The returned score is the raw cosine similarity.
    """
    source = resolve_vector(store_src, word)
    if source is None:
        raise ValueError(f"word {word!r} cannot be resolved in the {store_src.lang} embedding store")
    best_word = None
    best_score = None
    for candidate in sorted(set(candidates)):
        resolved = resolve_vector(store_tgt, candidate)
        if resolved is None:
            continue
        score = raw_cosine(source.vector, resolved.vector)
        if best_score is None or score > best_score:
            best_word, best_score = candidate, score
    if best_word is None:
        raise ValueError("no candidate could be resolved in the target embedding store")
    return best_word, best_score


@dataclass(frozen=True, slots=True)
class OccurrenceVectors:
    """Contextual vectors for one word's sampled corpus occurrences."""

    lang: str
    word: str
    entries: tuple  # of (sent_id, token_index, vector)


def load_contextual_vectors(path, max_occurrences: int = MAX_OCCURRENCES) -> dict:
    """Load per-occurrence contextual vectors from JSON lines.

    Record schema: {"lang", "word", "sent_id", "token_index", "vector"}.
    All vectors must share one dimensionality; at most `max_occurrences`
    records are allowed per (lang, word).
    """
    grouped: dict[tuple[str, str], list] = {}
    dim = None
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(path, line_no, f"invalid JSON: {exc.msg}") from None
            try:
                lang = record["lang"]
                word = record["word"]
                sent_id = record["sent_id"]
                token_index = record["token_index"]
                vector = record["vector"]
            except KeyError as exc:
                raise FormatError(path, line_no, f"missing field {exc.args[0]!r}") from None
            if not isinstance(vector, list) or not vector:
                raise FormatError(path, line_no, "vector must be a non-empty list")
            if dim is None:
                dim = len(vector)
            elif len(vector) != dim:
                raise FormatError(path, line_no, f"expected dimensionality {dim}, got {len(vector)}")
            key = (lang, strip_accents(word))
            entries = grouped.setdefault(key, [])
            if len(entries) >= max_occurrences:
                raise FormatError(path, line_no,
                                  f"more than {max_occurrences} occurrences for {lang}:{word}")
            entries.append((int(sent_id), int(token_index), np.array(vector, dtype=float)))
    return {
        key: OccurrenceVectors(lang=key[0], word=key[1], entries=tuple(entries))
        for key, entries in grouped.items()
    }


def coverage_report(store: EmbeddingStore, words) -> dict:
    """Count how lexicon words of one language resolve: exact/fallback/missing."""
    counts = {"exact": 0, "fallback": 0, "missing": 0}
    for word in sorted(set(words)):
        resolved = resolve_vector(store, word)
        if resolved is None:
            counts["missing"] += 1
        else:
            counts[resolved.method] += 1
    return counts
