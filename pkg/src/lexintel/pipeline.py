"""End-to-end pipeline runs: resource loading, streaming corpus passes and
report writing.

Sentence pairs are processed in fixed-size chunks; chunk results are
merged in corpus order, so outputs are byte-identical for any worker
count.
"""

import hashlib
import json
from collections import deque
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import aggregate as agg
from .config import RunConfig, check_resources
from .corpus import CorpusStats, load_parallel, load_stopwords, match_occurrences
from .errors import ComputationError
from .langs import pair_slug
from .lexicon import Lexicon, load_lexicon
from .semantics import (cluster_occurrences, coverage_report,
                        load_contextual_vectors, load_static_embeddings)
from .surface import load_phonetic_lexicon

CHUNK_SENTENCES = 512


@dataclass
class Resources:
    """Everything a run needs, loaded once and shared read-only."""

    lexicon: Lexicon
    stopwords: dict = field(default_factory=dict)
    stores: dict = field(default_factory=dict)
    phonetic_lexicon: object = None
    cluster_maps: dict = field(default_factory=dict)  # slug -> {(lang, word): ClusterSet}


def load_resources(config: RunConfig, configs, need_corpus=True, warn=None) -> Resources:
    check_resources(config, configs, need_corpus=need_corpus)
    resources = Resources(lexicon=load_lexicon(config.lexicon, config.languages))
    if need_corpus:
        for lang in config.languages:
            resources.stopwords[lang] = load_stopwords(config.stopword_path(lang))
    surface = {c.surface for c in configs}
    semantic = {c.semantic for c in configs}
    if "phonetic" in surface:
        resources.phonetic_lexicon = load_phonetic_lexicon(config.phonetic_lexicon)
    if "static" in semantic:
        for lang in config.languages:
            store = load_static_embeddings(config.static_embeddings[lang], lang)
            if store.duplicates and warn is not None:
                warn(f"{store.duplicates} duplicate vector rows ignored in {config.static_embeddings[lang]}")
            resources.stores[lang] = store
    if "contextual" in semantic:
        for a, b in config.language_pairs():
            slug = pair_slug(a, b)
            occurrence_map = load_contextual_vectors(
                config.contextual_vectors[slug], max_occurrences=config.max_occurrences)
            resources.cluster_maps[slug] = {
                key: cluster_occurrences(occ) for key, occ in sorted(occurrence_map.items())
            }
    return resources


def sentence_stream(config: RunConfig, resources: Resources, a: str, b: str):
    first, second = sorted((a, b))
    path_a, path_b = config.corpus_paths(a, b)
    return load_parallel(path_a, path_b, first, second,
                         resources.stopwords.get(first, frozenset()),
                         resources.stopwords.get(second, frozenset()))


def pair_similarity_table(resources: Resources, a: str, b: str, configs) -> dict:
    """PairSimilarity per pair_id for the unordered language pair {a, b}."""
    slug = pair_slug(a, b)
    cluster_map = resources.cluster_maps.get(slug, {})
    table = {}
    for pair in resources.lexicon.pairs_for_language_pair(*sorted((a, b))):
        table[pair.pair_id] = agg.compute_pair_similarity(
            pair, resources.stores, resources.phonetic_lexicon, cluster_map, configs)
    return table


@dataclass
class _ChunkResult:
    stats: CorpusStats
    accumulators: dict  # (speaker, config) -> DirectionAccumulator

    def merge(self, other: "_ChunkResult"):
        self.stats.n_sentences += other.stats.n_sentences
        self.stats.total_words_a += other.stats.total_words_a
        self.stats.total_words_b += other.stats.total_words_b
        self.stats.related_words += other.stats.related_words
        self.stats.aligned_pairs += other.stats.aligned_pairs
        for key, acc in other.accumulators.items():
            self.accumulators[key].merge(acc)


def _new_chunk_result(first, second, configs) -> _ChunkResult:
    return _ChunkResult(
        stats=CorpusStats(),
        accumulators={
            (speaker, config): agg.DirectionAccumulator()
            for speaker in (first, second)
            for config in configs
        },
    )


def _process_chunk(chunk, lexicon, table, first, second, configs) -> _ChunkResult:
    result = _new_chunk_result(first, second, configs)
    stats = result.stats
    for sp in chunk:
        stats.n_sentences += 1
        stats.total_words_a += len(sp.tokens_a)
        stats.total_words_b += len(sp.tokens_b)
        matched = {"a": {}, "b": {}}  # token_index -> [pair_id, ...]
        for occ in match_occurrences(sp, lexicon):
            stats.related_words += 1
            if occ.aligned:
                stats.aligned_pairs += 1
            matched[occ.side].setdefault(occ.token_index, []).append(occ.pair_id)
        for side, speaker in (("a", first), ("b", second)):
            tokens = sp.tokens(side)
            for config in configs:
                acc = result.accumulators[(speaker, config)]
                acc.n_sentences += 1
                if not tokens:
                    acc.n_empty_sentences += 1
                    continue
                acc.n_content_tokens += len(tokens)
                for pair_ids in matched[side].values():
                    value, scored = agg.token_index(pair_ids, table, config)
                    if scored:
                        acc.index_sum += value
                        acc.n_scored_tokens += 1
    return result


def _chunked(stream, size):
    chunk = []
    for item in stream:
        chunk.append(item)
        if len(chunk) == size:
            yield chunk
            chunk = []
    if chunk:
        yield chunk


def score_language_pair(config: RunConfig, resources: Resources, a: str, b: str,
                        configs, table=None) -> _ChunkResult:
    """One streaming pass over the corpus of {a, b}, accumulating both
    directions for every channel configuration."""
    first, second = sorted((a, b))
    if table is None:
        table = pair_similarity_table(resources, first, second, configs)
    stream = sentence_stream(config, resources, first, second)
    chunks = _chunked(stream, CHUNK_SENTENCES)
    total = _new_chunk_result(first, second, configs)

    def work(chunk):
        return _process_chunk(chunk, resources.lexicon, table, first, second, configs)

    if config.workers <= 1:
        for chunk in chunks:
            total.merge(work(chunk))
    else:
        # bounded submission queue, merged strictly in corpus order
        pending = deque()
        with ThreadPoolExecutor(max_workers=config.workers) as pool:
            for chunk in chunks:
                pending.append(pool.submit(work, chunk))
                if len(pending) >= 2 * config.workers:
                    total.merge(pending.popleft().result())
            while pending:
                total.merge(pending.popleft().result())
    total.stats.check()
    return total


def build_matrix(config: RunConfig, resources: Resources, configs):
    """Directional scores for all ordered pairs, plus per-pair corpus stats
    and the pair-similarity tables the scores were computed from."""
    matrix = agg.IntelligibilityMatrix(config.languages, configs)
    stats_by_pair = {}
    tables = {}
    for a, b in config.language_pairs():
        slug = pair_slug(a, b)
        tables[slug] = pair_similarity_table(resources, a, b, configs)
        result = score_language_pair(config, resources, a, b, configs, table=tables[slug])
        stats_by_pair[slug] = result.stats
        if result.stats.n_sentences == 0:
            raise ComputationError(f"empty corpus for language pair {slug}")
        for (speaker, channel_config), acc in sorted(result.accumulators.items()):
            listener = b if speaker == a else a
            matrix.add(agg.corpus_score(speaker, listener, channel_config, acc))
    matrix.check_complete()
    return matrix, stats_by_pair, tables


def embedding_coverage(resources: Resources) -> dict:
    """Per-language resolution counts for the lexicon vocabulary."""
    coverage = {}
    for lang, store in sorted(resources.stores.items()):
        coverage[lang] = coverage_report(store, resources.lexicon.words_for_language(lang))
    return coverage


def unscored_pair_counts(tables: dict, configs) -> dict:
    """Per configuration: how many lexicon pairs lack channel data."""
    counts = {config.slug: 0 for config in configs}
    for table in tables.values():
        for sim in table.values():
            for config in configs:
                if not sim.available(config):
                    counts[config.slug] += 1
    return counts


def _stable_word_seed(seed: int, lang: str, word: str) -> list[int]:
    digest = hashlib.sha256(f"{lang}:{word}".encode("utf-8")).digest()
    return [seed, int.from_bytes(digest[:8], "big")]


def collect_export_requests(config: RunConfig, resources: Resources, a: str, b: str) -> list[dict]:
    """Occurrence records for contextual-vector extraction, sampled down to
    the per-word cap with the run seed."""
    first, second = sorted((a, b))
    by_word: dict[tuple[str, str], list] = {}
    for sp in sentence_stream(config, resources, first, second):
        for side, lang, text in (("a", first, sp.text_a), ("b", second, sp.text_b)):
            seen_words = set()
            for occ in match_occurrences(sp, resources.lexicon):
                if occ.side != side:
                    continue
                word = resources.lexicon.by_id[occ.pair_id].word(lang)
                key = (lang, word, occ.token_index)
                if key in seen_words:
                    continue
                seen_words.add(key)
                by_word.setdefault((lang, word), []).append(
                    {"lang": lang, "word": word, "sent_id": occ.sent_id,
                     "token_index": occ.token_index, "sentence": text})
    requests = []
    for (lang, word), records in sorted(by_word.items()):
        if len(records) > config.max_occurrences:
            rng = np.random.default_rng(_stable_word_seed(config.seed, lang, word))
            keep = sorted(rng.choice(len(records), size=config.max_occurrences, replace=False))
            records = [records[i] for i in keep]
        requests.extend(records)
    return requests


def write_jsonl(records, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for record in records:
            handle.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            handle.write("\n")
