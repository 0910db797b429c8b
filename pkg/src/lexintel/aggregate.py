"""Directional corpus-level intelligibility scores.

For an ordered language pair (speaker, listener) and a channel
configuration, every content token of the speaker side contributes the
best intelligibility index among the lexicon pairs it matches (0 when it
matches none or none has data for the configuration).  The corpus score
pools all sentences as a single text: total token index mass divided by
the speaker side's total content-token count.
"""

import csv
import json
from dataclasses import dataclass

from .errors import ComputationError
from .intelligibility import intelligibility_index, within_bounds
from .semantics import contextual_similarity, cosine_similarity, resolve_vector
from .surface import surface_similarity

SURFACE_CHANNELS = ("orthographic", "phonetic")
SEMANTIC_CHANNELS = ("static", "contextual")


@dataclass(frozen=True, slots=True, order=True)
class ChannelConfig:
    """One combination of surface and semantic channel."""

    surface: str
    semantic: str

    @property
    def slug(self) -> str:
        return f"{self.surface}-{self.semantic}"


def channel_product(surface_channels, semantic_channels) -> list[ChannelConfig]:
    return [ChannelConfig(s, m) for s in surface_channels for m in semantic_channels]


@dataclass(frozen=True, slots=True)
class PairSimilarity:
    """Per lexicon pair: channel scores and the index per configuration.

    Score dicts hold None when a channel has no data for the pair
    (missing transcription, unresolvable vector, no occurrence vectors).
    """

    pair_id: int
    surface_scores: dict
    semantic_scores: dict
    indices: dict

    def index(self, config: ChannelConfig):
        return self.indices.get(config)

    def available(self, config: ChannelConfig) -> bool:
        return self.indices.get(config) is not None


def compute_pair_similarity(pair, stores, phonetic_lexicon, cluster_map, configs) -> PairSimilarity:
    """Score one lexicon pair on every requested channel.

    `stores` maps language to EmbeddingStore, `cluster_map` maps
    (language, word) to a ClusterSet of contextual occurrence vectors.
    """
    surface_needed = {c.surface for c in configs}
    semantic_needed = {c.semantic for c in configs}

    surface_scores = {}
    if "orthographic" in surface_needed:
        surface_scores["orthographic"] = surface_similarity(pair.word_a, pair.word_b)
    if "phonetic" in surface_needed:
        score = None
        if phonetic_lexicon is not None:
            seq_a = phonetic_lexicon.get(pair.lang_a, pair.word_a)
            seq_b = phonetic_lexicon.get(pair.lang_b, pair.word_b)
            if seq_a is not None and seq_b is not None:
                score = surface_similarity(seq_a.units, seq_b.units)
        surface_scores["phonetic"] = score

    semantic_scores = {}
    if "static" in semantic_needed:
        score = None
        store_a = stores.get(pair.lang_a)
        store_b = stores.get(pair.lang_b)
        if store_a is not None and store_b is not None:
            resolved_a = resolve_vector(store_a, pair.word_a)
            resolved_b = resolve_vector(store_b, pair.word_b)
            if resolved_a is not None and resolved_b is not None:
                score = cosine_similarity(resolved_a.vector, resolved_b.vector)
        semantic_scores["static"] = score
    if "contextual" in semantic_needed:
        score = None
        clusters_a = cluster_map.get((pair.lang_a, pair.word_a))
        clusters_b = cluster_map.get((pair.lang_b, pair.word_b))
        if clusters_a is not None and clusters_b is not None:
            score = contextual_similarity(clusters_a, clusters_b)
        semantic_scores["contextual"] = score

    indices = {}
    for config in configs:
        surface_score = surface_scores.get(config.surface)
        semantic_score = semantic_scores.get(config.semantic)
        if surface_score is None or semantic_score is None:
            indices[config] = None
            continue
        index = intelligibility_index(semantic_score, surface_score)
        if not within_bounds(semantic_score, surface_score, index):
            raise ComputationError(
                f"index {index} violates bounds for pair {pair.pair_id}"
            )
        indices[config] = index
    return PairSimilarity(
        pair_id=pair.pair_id,
        surface_scores=surface_scores,
        semantic_scores=semantic_scores,
        indices=indices,
    )


def token_index(pair_ids, table, config: ChannelConfig) -> tuple[float, bool]:
    """Best index over the pairs matching one token position.

    Returns (0.0, False) when no matching pair has data for `config`;
    such tokens count as unscored.
    """
    best = None
    for pair_id in pair_ids:
        sim = table.get(pair_id)
        if sim is None:
            continue
        value = sim.index(config)
        if value is not None and (best is None or value > best):
            best = value
    if best is None:
        return 0.0, False
    return best, True


def sentence_score(token_indices, content_token_count: int) -> float:
    """Sum of the sentence's token indices divided by its content-token count."""
    if content_token_count == 0:
        return 0.0
    return sum(token_indices) / content_token_count


@dataclass(slots=True)
class DirectionAccumulator:
    """Running totals for one (direction, channel configuration)."""

    index_sum: float = 0.0
    n_sentences: int = 0
    n_empty_sentences: int = 0
    n_content_tokens: int = 0
    n_scored_tokens: int = 0

    def merge(self, other: "DirectionAccumulator"):
        self.index_sum += other.index_sum
        self.n_sentences += other.n_sentences
        self.n_empty_sentences += other.n_empty_sentences
        self.n_content_tokens += other.n_content_tokens
        self.n_scored_tokens += other.n_scored_tokens


@dataclass(frozen=True, slots=True)
class DirectionalScore:
    """Corpus-level score for text in `speaker` read by a `listener`."""

    speaker: str
    listener: str
    surface_channel: str
    semantic_channel: str
    score: float
    n_sentences: int
    n_content_tokens: int
    n_scored_tokens: int

    @property
    def score_pct(self) -> float:
        return 100.0 * self.score

    def as_dict(self):
        return {
            "speaker": self.speaker,
            "listener": self.listener,
            "surface_channel": self.surface_channel,
            "semantic_channel": self.semantic_channel,
            "score": self.score,
            "score_pct": round(self.score_pct, 1),
            "n_sentences": self.n_sentences,
            "n_content_tokens": self.n_content_tokens,
            "n_scored_tokens": self.n_scored_tokens,
        }


def corpus_score(speaker: str, listener: str, config: ChannelConfig,
                 acc: DirectionAccumulator) -> DirectionalScore:
    """Single-text pooled score: total index mass over total content tokens
    (not the mean of per-sentence scores)."""
    if acc.n_sentences == 0:
        raise ComputationError(f"empty corpus for direction {speaker}->{listener}")
    score = acc.index_sum / acc.n_content_tokens if acc.n_content_tokens else 0.0
    if not 0.0 <= score <= 1.0 + 1e-9:
        raise ComputationError(f"corpus score {score} outside [0, 1]")
    return DirectionalScore(
        speaker=speaker,
        listener=listener,
        surface_channel=config.surface,
        semantic_channel=config.semantic,
        score=min(score, 1.0),
        n_sentences=acc.n_sentences,
        n_content_tokens=acc.n_content_tokens,
        n_scored_tokens=acc.n_scored_tokens,
    )


class IntelligibilityMatrix:
    """Directional scores for every ordered language pair, per configuration."""

    def __init__(self, languages, configs):
        self.languages = sorted(languages)
        self.configs = sorted(configs)
        self._scores: dict = {}

    def add(self, score: DirectionalScore):
        config = ChannelConfig(score.surface_channel, score.semantic_channel)
        self._scores[(config, score.speaker, score.listener)] = score

    def get(self, config: ChannelConfig, speaker: str, listener: str) -> DirectionalScore:
        return self._scores[(config, speaker, listener)]

    def directional_scores(self, config: ChannelConfig) -> dict[tuple[str, str], float]:
        """(speaker, listener) -> score fraction, for one configuration."""
        return {
            (speaker, listener): self.get(config, speaker, listener).score
            for speaker in self.languages
            for listener in self.languages
            if speaker != listener
        }

    def check_complete(self):
        for config in self.configs:
            for speaker in self.languages:
                for listener in self.languages:
                    if speaker == listener:
                        continue
                    if (config, speaker, listener) not in self._scores:
                        raise ComputationError(
                            f"missing matrix entry {speaker}->{listener} for {config.slug}"
                        )
        return self

    def rows(self):
        for config in self.configs:
            for speaker in self.languages:
                for listener in self.languages:
                    if speaker != listener:
                        yield self.get(config, speaker, listener)


MATRIX_CSV_HEADER = [
    "speaker", "listener", "surface_channel", "semantic_channel",
    "score_pct", "n_sentences", "n_content_tokens", "n_scored_tokens",
]


def write_matrix_csv(matrix: IntelligibilityMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(MATRIX_CSV_HEADER)
        for row in matrix.rows():
            writer.writerow([
                row.speaker, row.listener, row.surface_channel, row.semantic_channel,
                f"{row.score_pct:.1f}", row.n_sentences,
                row.n_content_tokens, row.n_scored_tokens,
            ])


def write_heatmap_grid(matrix: IntelligibilityMatrix, config: ChannelConfig, path) -> None:
    """Speaker-rows by listener-columns grid of percentages; empty diagonal."""
    with open(path, "w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(["speaker"] + matrix.languages)
        for speaker in matrix.languages:
            row = [speaker]
            for listener in matrix.languages:
                if speaker == listener:
                    row.append("")
                else:
                    row.append(f"{matrix.get(config, speaker, listener).score_pct:.1f}")
            writer.writerow(row)


def matrix_report(matrix: IntelligibilityMatrix, corpus_stats_by_pair=None,
                  coverage=None, unscored_pair_counts=None) -> dict:
    """JSON-ready bundle: all matrices plus corpus stats and coverage."""
    report = {
        "languages": matrix.languages,
        "configurations": [c.slug for c in matrix.configs],
        "scores": [row.as_dict() for row in matrix.rows()],
        "asymmetry": [
            {
                "configuration": config.slug,
                "pair": f"{a}-{b}",
                "delta_pct": round(
                    matrix.get(config, a, b).score_pct - matrix.get(config, b, a).score_pct, 4
                ),
            }
            for config in matrix.configs
            for a in matrix.languages
            for b in matrix.languages
            if a < b
        ],
    }
    # diagnostic only: phonetic scores usually run below orthographic ones,
    # but that is an empirical pattern, not an enforced invariant
    surface_channels = {c.surface for c in matrix.configs}
    if {"orthographic", "phonetic"} <= surface_channels:
        report["orthographic_minus_phonetic_pct"] = [
            {
                "semantic_channel": semantic,
                "speaker": speaker,
                "listener": listener,
                "delta_pct": round(
                    matrix.get(ChannelConfig("orthographic", semantic), speaker, listener).score_pct
                    - matrix.get(ChannelConfig("phonetic", semantic), speaker, listener).score_pct,
                    4,
                ),
            }
            for semantic in sorted({c.semantic for c in matrix.configs
                                    if ChannelConfig("orthographic", c.semantic) in matrix.configs
                                    and ChannelConfig("phonetic", c.semantic) in matrix.configs})
            for speaker in matrix.languages
            for listener in matrix.languages
            if speaker != listener
        ]
    if corpus_stats_by_pair is not None:
        report["corpus_stats"] = {
            slug: stats.as_dict() for slug, stats in sorted(corpus_stats_by_pair.items())
        }
    if coverage is not None:
        report["embedding_coverage"] = coverage
    if unscored_pair_counts is not None:
        report["pairs_without_channel_data"] = unscored_pair_counts
    return report


def write_json(payload: dict, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        json.dump(payload, handle, indent=2, sort_keys=True)
        handle.write("\n")
