import math

import numpy as np
import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from lexintel.errors import FormatError
from lexintel.semantics import (MAX_OCCURRENCES, OccurrenceVectors,
                                cluster_occurrences, contextual_similarity,
                                cosine_similarity, coverage_report,
                                load_contextual_vectors, load_static_embeddings,
                                nearest_semantic_neighbor, raw_cosine,
                                resolve_vector)


@pytest.fixture(scope="module")
def es_store(fixture_two):
    return load_static_embeddings(fixture_two / "vectors" / "es.vec", "es")


class TestLoadStaticEmbeddings:
    def test_fixture(self, es_store):
        assert es_store.dim == 4
        assert len(es_store) == 14
        assert es_store.duplicates == 0
        np.testing.assert_allclose(es_store.vectors["luna"], [1, 0, 0, 0])

    def test_small_file(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("2 4\nuno 1 0 0 0\ndos 0 1 0 0\n", encoding="utf-8")
        store = load_static_embeddings(path, "es")
        assert len(store) == 2 and store.dim == 4

    def test_dimension_mismatch(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("2 300\nuno" + " 0.1" * 300 + "\ndos" + " 0.1" * 299 + "\n",
                        encoding="utf-8")
        with pytest.raises(FormatError, match=r"v\.vec:3.*expected 300"):
            load_static_embeddings(path, "es")

    def test_duplicate_first_wins(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("2 2\nuno 1 0\nuno 0 1\n", encoding="utf-8")
        store = load_static_embeddings(path, "es")
        np.testing.assert_allclose(store.vectors["uno"], [1, 0])
        assert store.duplicates == 1

    def test_bad_header(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("palabra 1 0\n", encoding="utf-8")
        with pytest.raises(FormatError, match="expected header"):
            load_static_embeddings(path, "es")

    def test_non_numeric_component(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("1 2\nuno 1 x\n", encoding="utf-8")
        with pytest.raises(FormatError, match=r"v\.vec:2"):
            load_static_embeddings(path, "es")


class TestResolveVector:
    def test_exact(self, es_store):
        resolved = resolve_vector(es_store, "luna")
        assert resolved.method == "exact"
        np.testing.assert_allclose(resolved.vector, [1, 0, 0, 0])

    def test_fallback_same_stem(self, es_store):
        resolved = resolve_vector(es_store, "preparar")
        assert resolved.method == "fallback"
        assert resolved.matched_word == "preparado"
        np.testing.assert_allclose(resolved.vector, [0, 0.8, 0.6, 0])

    def test_absent(self, es_store):
        assert resolve_vector(es_store, "flor") is None

    def test_prefix_fallback_with_distance_cap(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("2 2\nlunario 1 0\nluneta 0 1\n", encoding="utf-8")
        store = load_static_embeddings(path, "es")
        resolved = resolve_vector(store, "lunar")
        assert resolved is not None and resolved.method == "fallback"
        assert resolved.matched_word == "lunario"

    def test_prefix_fallback_ties_break_lexicographically(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("2 2\nmarcab 1 0\nmarcaa 0 1\n", encoding="utf-8")
        store = load_static_embeddings(path, "es")
        resolved = resolve_vector(store, "marcax")
        assert resolved.matched_word == "marcaa"

    def test_fallback_never_fires_for_stored_words(self, es_store):
        for word in ("luna", "tiempo", "dulce", "casa"):
            assert resolve_vector(es_store, word).method == "exact"

    def test_resolved_dimensionality(self, es_store):
        for word in ("luna", "preparar"):
            resolved = resolve_vector(es_store, word)
            assert resolved.vector.shape == (es_store.dim,)

    def test_accented_store_key_reachable_from_normalized_query(self, tmp_path):
        path = tmp_path / "v.vec"
        path.write_text("1 2\npărinte 1 0\n", encoding="utf-8")
        store = load_static_embeddings(path, "ro")
        assert resolve_vector(store, "parinte").method == "exact"


class TestCosine:
    def test_identity(self):
        v = np.array([0.3, 0.4, 1.2])
        assert cosine_similarity(v, v) == pytest.approx(1.0)

    def test_orthogonal(self):
        assert cosine_similarity([1, 0], [0, 1]) == pytest.approx(0.0)

    def test_derived_example(self):
        assert cosine_similarity([1, 0], [1, 1]) == pytest.approx(0.7071067811865475)

    def test_negative_clamped(self):
        assert cosine_similarity([1, 0], [-1, 0]) == 0.0
        assert raw_cosine([1, 0], [-1, 0]) == pytest.approx(-1.0)

    def test_zero_norm_error(self):
        with pytest.raises(ValueError, match="zero-norm"):
            cosine_similarity([0, 0], [1, 0])

    def test_dim_mismatch_error(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            cosine_similarity([1, 0], [1, 0, 0])

    @given(st.lists(st.floats(-5, 5), min_size=3, max_size=3),
           st.lists(st.floats(-5, 5), min_size=3, max_size=3))
    def test_symmetry_and_scale_invariance(self, u, v):
        assume(math.hypot(*u) > 1e-6 and math.hypot(*v) > 1e-6)
        assert raw_cosine(u, v) == pytest.approx(raw_cosine(v, u))
        scaled = [3.5 * x for x in u]
        assert raw_cosine(scaled, v) == pytest.approx(raw_cosine(u, v), abs=1e-9)


class TestClustering:
    def test_single_occurrence(self):
        occ = OccurrenceVectors("es", "x", ((0, 0, np.array([1.0, 2.0, 3.0])),))
        cs = cluster_occurrences(occ)
        assert len(cs.centers) == 1
        np.testing.assert_allclose(cs.centers[0], [1, 2, 3])
        assert cs.sizes == (1,)

    def test_identical_vectors_single_cluster(self):
        entries = tuple((i, 0, np.array([0.5, 0.5, 0.0])) for i in range(10))
        cs = cluster_occurrences(OccurrenceVectors("es", "x", entries))
        assert len(cs.centers) == 1
        np.testing.assert_allclose(cs.centers[0], [0.5, 0.5, 0.0])
        assert cs.sizes == (10,)

    def test_two_blobs_two_clusters(self):
        rng = np.random.default_rng(3)
        blob1 = np.array([2.0, 0.0]) + 0.01 * rng.standard_normal((10, 2))
        blob2 = np.array([0.0, 2.0]) + 0.01 * rng.standard_normal((10, 2))
        entries = tuple((i, 0, v) for i, v in enumerate(np.vstack([blob1, blob2])))
        cs = cluster_occurrences(OccurrenceVectors("es", "x", entries))
        assert len(cs.centers) == 2
        assert sorted(cs.sizes) == [10, 10]
        got = {tuple(np.round(c, 6)) for c in cs.centers}
        expected = {tuple(np.round(blob1.mean(0), 6)), tuple(np.round(blob2.mean(0), 6))}
        assert got == expected

    def test_sizes_sum_and_centers_are_member_means(self):
        rng = np.random.default_rng(11)
        points = rng.standard_normal((17, 3))
        entries = tuple((i, 0, v) for i, v in enumerate(points))
        cs = cluster_occurrences(OccurrenceVectors("ro", "y", entries))
        assert sum(cs.sizes) == 17
        labels = np.array(cs.labels)
        for k, center in enumerate(cs.centers):
            np.testing.assert_allclose(center, points[labels == k].mean(axis=0),
                                       atol=1e-9)

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            cluster_occurrences(OccurrenceVectors("es", "x", ()))


class TestContextualSimilarity:
    def _cluster(self, *centers):
        from lexintel.clustering import ClusterSet

        centers = np.array(centers, dtype=float)
        return ClusterSet(key=("t", "t"), centers=centers,
                          sizes=(1,) * len(centers), labels=tuple(range(len(centers))))

    def test_identical_single_centers(self):
        a = self._cluster([1, 0, 0])
        assert contextual_similarity(a, a) == pytest.approx(1.0)

    def test_orthogonal_single_centers(self):
        assert contextual_similarity(
            self._cluster([1, 0]), self._cluster([0, 1])) == pytest.approx(0.0)

    def test_cross_pair_mean(self):
        a = self._cluster([1, 0], [0, 1])
        b = self._cluster([1, 0])
        assert contextual_similarity(a, b) == pytest.approx(0.5)

    def test_symmetry(self):
        a = self._cluster([1, 0], [0.6, 0.8])
        b = self._cluster([0, 1])
        assert contextual_similarity(a, b) == pytest.approx(contextual_similarity(b, a))

    def test_clamped_at_aggregate_level(self):
        # raw mean is negative => clamped to 0 (not per-pair)
        a = self._cluster([1, 0], [-1, 0])
        b = self._cluster([-1, 0])
        assert contextual_similarity(a, b) == 0.0


class TestNearestNeighbor:
    def test_own_translation_wins(self, fixture_two):
        es = load_static_embeddings(fixture_two / "vectors" / "es.vec", "es")
        ro = load_static_embeddings(fixture_two / "vectors" / "ro.vec", "ro")
        word, score = nearest_semantic_neighbor(es, "padre", ro, {"parinte", "lume", "apa"})
        assert word == "parinte"
        assert score == pytest.approx(1.0)

    def test_ties_break_lexicographically(self, tmp_path):
        src = tmp_path / "src.vec"
        src.write_text("1 2\nquery 1 0\n", encoding="utf-8")
        tgt = tmp_path / "tgt.vec"
        tgt.write_text("2 2\nzeta 1 0\nalfa 1 0\n", encoding="utf-8")
        es = load_static_embeddings(src, "es")
        ro = load_static_embeddings(tgt, "ro")
        word, _ = nearest_semantic_neighbor(es, "query", ro, {"zeta", "alfa"})
        assert word == "alfa"

    def test_unresolvable_source_rejected(self, fixture_two):
        es = load_static_embeddings(fixture_two / "vectors" / "es.vec", "es")
        ro = load_static_embeddings(fixture_two / "vectors" / "ro.vec", "ro")
        with pytest.raises(ValueError, match="cannot be resolved"):
            nearest_semantic_neighbor(es, "flor", ro, {"parinte"})


class TestContextualLoad:
    def test_fixture(self, fixture_two):
        occ_map = load_contextual_vectors(fixture_two / "ctx" / "es-ro.jsonl")
        assert ("es", "tiempo") in occ_map
        assert len(occ_map[("es", "tiempo")].entries) == 8
        assert len(occ_map[("ro", "luna")].entries) == 3
        dims = {len(e[2]) for occ in occ_map.values() for e in occ.entries}
        assert dims == {3}

    def test_cap_enforced(self, tmp_path):
        path = tmp_path / "ctx.jsonl"
        rows = "\n".join(
            '{"lang": "es", "word": "w", "sent_id": %d, "token_index": 0, "vector": [1, 0]}' % i
            for i in range(3))
        path.write_text(rows + "\n", encoding="utf-8")
        with pytest.raises(FormatError, match="more than 2 occurrences"):
            load_contextual_vectors(path, max_occurrences=2)
        assert MAX_OCCURRENCES == 200

    def test_dimension_consistency(self, tmp_path):
        path = tmp_path / "ctx.jsonl"
        path.write_text(
            '{"lang": "es", "word": "w", "sent_id": 0, "token_index": 0, "vector": [1, 0]}\n'
            '{"lang": "es", "word": "v", "sent_id": 0, "token_index": 0, "vector": [1, 0, 0]}\n',
            encoding="utf-8")
        with pytest.raises(FormatError, match=r"ctx\.jsonl:2.*dimensionality 2"):
            load_contextual_vectors(path)

    def test_missing_field(self, tmp_path):
        path = tmp_path / "ctx.jsonl"
        path.write_text('{"lang": "es", "word": "w", "sent_id": 0, "vector": [1]}\n',
                        encoding="utf-8")
        with pytest.raises(FormatError, match="token_index"):
            load_contextual_vectors(path)

    def test_invalid_json(self, tmp_path):
        path = tmp_path / "ctx.jsonl"
        path.write_text("{nope}\n", encoding="utf-8")
        with pytest.raises(FormatError, match=r"ctx\.jsonl:1"):
            load_contextual_vectors(path)


class TestCoverage:
    def test_fixture_counts(self, fixture_two, es_store):
        from lexintel.lexicon import load_lexicon

        lex = load_lexicon(fixture_two / "lexicon.tsv", {"es", "ro"})
        report = coverage_report(es_store, lex.words_for_language("es"))
        assert report == {"exact": 11, "fallback": 1, "missing": 1}
