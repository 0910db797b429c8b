import pytest

from lexintel.errors import ConfigurationError, FormatError
from lexintel.lexicon import load_lexicon, save_lexicon

HEADER = "lang_a\tlang_b\tword_a\tword_b\trelation\n"


def write_lexicon(tmp_path, rows, header=HEADER):
    path = tmp_path / "lexicon.tsv"
    path.write_text(header + "".join(rows), encoding="utf-8")
    return path


class TestLoad:
    def test_fixture_loads_with_duplicate_dropped(self, fixture_two):
        lex = load_lexicon(fixture_two / "lexicon.tsv", {"es", "ro"})
        # the fixture file carries 15 data rows, one an exact duplicate
        assert len(lex) == 14

    def test_normalization_strips_accents(self, tmp_path):
        path = write_lexicon(tmp_path, ["es\tro\tpadre\tpărinte\tcognate\n"])
        lex = load_lexicon(path, {"es", "ro"})
        assert lex.pairs[0].word_b == "parinte"

    def test_rows_outside_configured_languages_skipped(self, tmp_path):
        rows = ["es\tro\tluna\tluna\tcognate\n", "es\tfr\tluna\tlune\tcognate\n"]
        lex = load_lexicon(write_lexicon(tmp_path, rows), {"es", "ro"})
        assert len(lex) == 1

    def test_orientation_is_canonicalized(self, tmp_path):
        rows = ["ro\tes\tparinte\tpadre\tcognate\n"]
        lex = load_lexicon(write_lexicon(tmp_path, rows), {"es", "ro"})
        pair = lex.pairs[0]
        assert (pair.lang_a, pair.word_a, pair.lang_b, pair.word_b) == (
            "es", "padre", "ro", "parinte")

    def test_reversed_duplicate_collapses(self, tmp_path):
        rows = ["es\tro\tluna\tluna\tcognate\n", "ro\tes\tluna\tluna\tcognate\n"]
        lex = load_lexicon(write_lexicon(tmp_path, rows), {"es", "ro"})
        assert len(lex) == 1

    def test_empty_lexicon_is_an_error(self, tmp_path):
        path = write_lexicon(tmp_path, [])
        with pytest.raises(ConfigurationError, match="empty lexicon"):
            load_lexicon(path, {"es", "ro"})

    def test_wrong_column_count(self, tmp_path):
        path = write_lexicon(tmp_path, ["es\tro\tluna\tcognate\n"])
        with pytest.raises(FormatError, match=r"lexicon\.tsv:2.*5 tab-separated"):
            load_lexicon(path, {"es", "ro"})

    def test_unknown_relation(self, tmp_path):
        path = write_lexicon(tmp_path, ["es\tro\tluna\tluna\tderived\n"])
        with pytest.raises(FormatError, match="unknown relation 'derived'"):
            load_lexicon(path, {"es", "ro"})

    def test_unknown_language_code(self, tmp_path):
        path = write_lexicon(tmp_path, ["es\txx\tluna\tluna\tcognate\n"])
        with pytest.raises(FormatError, match="unknown language code 'xx'"):
            load_lexicon(path, {"es", "ro"})

    def test_word_empty_after_normalization(self, tmp_path):
        path = write_lexicon(tmp_path, ["es\tro\t\tluna\tcognate\n"])
        with pytest.raises(FormatError, match="empty after normalization"):
            load_lexicon(path, {"es", "ro"})

    def test_bad_header(self, tmp_path):
        path = write_lexicon(tmp_path, ["es\tro\tluna\tluna\tcognate\n"],
                             header="a\tb\tc\td\te\n")
        with pytest.raises(FormatError, match=r"lexicon\.tsv:1"):
            load_lexicon(path, {"es", "ro"})

    def test_same_language_pair_rejected(self, tmp_path):
        path = write_lexicon(tmp_path, ["es\tes\tluna\tluna\tcognate\n"])
        with pytest.raises(FormatError, match="single language"):
            load_lexicon(path, {"es", "ro"})


class TestQueries:
    @pytest.fixture()
    def lex(self, tmp_path):
        rows = [
            "es\tro\tluna\tluna\tcognate\n",
            "es\tro\tluna\tlumina\tcognate\n",
            "es\tro\tmundo\tlume\tcognate\n",
            "es\tfr\tluna\tlune\tcognate\n",
            "es\tfr\tmundo\tmonde\tcognate\n",
        ]
        return load_lexicon(write_lexicon(tmp_path, rows), {"es", "fr", "ro"})

    def test_pairs_for_language_pair_filters(self, lex):
        assert len(lex.pairs_for_language_pair("es", "ro")) == 3
        assert len(lex.pairs_for_language_pair("es", "fr")) == 2
        assert lex.pairs_for_language_pair("it", "pt") == []

    def test_pairs_for_language_pair_orientation(self, lex):
        forward = lex.pairs_for_language_pair("es", "ro")
        backward = lex.pairs_for_language_pair("ro", "es")
        assert {p.pair_id for p in forward} == {p.pair_id for p in backward}
        for f, b in zip(forward, backward):
            assert (f.lang_a, f.word_a) == (b.lang_b, b.word_b)
            assert (f.lang_b, f.word_b) == (b.lang_a, b.word_a)

    def test_pairs_for_same_language_rejected(self, lex):
        with pytest.raises(ValueError):
            lex.pairs_for_language_pair("es", "es")

    def test_stem_lookup_exact(self, lex):
        assert lex.stem_lookup("es", "lun") == {0, 1, 3}
        assert lex.stem_lookup("ro", "lun") == {0}

    def test_stem_lookup_absent(self, lex):
        assert lex.stem_lookup("es", "zzz") == set()

    def test_stem_lookup_multimap(self, lex):
        # one Spanish word related to two Romanian words
        es_ro = {p for p in lex.stem_lookup("es", "lun")
                 if lex.by_id[p].lang_b == "ro"}
        assert len(es_ro) == 2

    def test_words_for_language(self, lex):
        assert lex.words_for_language("es") == {"luna", "mundo"}
        assert lex.words_for_language("ro") == {"luna", "lumina", "lume"}


class TestRoundTrip:
    def test_save_and_reload_identical(self, fixture_two, tmp_path):
        lex = load_lexicon(fixture_two / "lexicon.tsv", {"es", "ro"})
        out = tmp_path / "roundtrip.tsv"
        save_lexicon(lex, out)
        reloaded = load_lexicon(out, {"es", "ro"})
        original = {(p.lang_a, p.lang_b, p.word_a, p.word_b, p.relation) for p in lex.pairs}
        after = {(p.lang_a, p.lang_b, p.word_a, p.word_b, p.relation) for p in reloaded.pairs}
        assert original == after
        # a second round trip is byte-stable
        out2 = tmp_path / "roundtrip2.tsv"
        save_lexicon(reloaded, out2)
        assert out.read_bytes() == out2.read_bytes()

    def test_stem_index_covers_all_pairs(self, fixture_two):
        lex = load_lexicon(fixture_two / "lexicon.tsv", {"es", "ro"})
        for pair in lex.pairs:
            assert pair.pair_id in lex.stem_lookup(pair.lang_a, pair.stem_a)
            assert pair.pair_id in lex.stem_lookup(pair.lang_b, pair.stem_b)
        for (_, _), ids in lex.stem_index.items():
            for pair_id in ids:
                assert pair_id in lex.by_id
