"""The related-word lexicon: cognate and borrowing pairs with stem indices.

Pairs are stored in canonical orientation (languages in alphabetical
order) and deduplicated on (lang_a, lang_b, word_a, word_b, relation).
Each word is indexed under its language by its Snowball stem so corpus
tokens can be matched inflection-tolerantly.
"""

from dataclasses import dataclass, replace

from .errors import ConfigurationError, FormatError
from .langs import is_language_code
from .stemming import SUPPORTED_LANGUAGES, stem
from .surface import strip_accents

RELATIONS = frozenset({"cognate", "borrowing"})

_HEADER = ["lang_a", "lang_b", "word_a", "word_b", "relation"]


@dataclass(frozen=True, slots=True)
class RelatedPair:
    """One cognate or borrowing pair between two languages.

    Words are normalized (lowercase, accents stripped); stem_a/stem_b cache
    the Snowball stems used for corpus matching.
    """

    pair_id: int
    lang_a: str
    lang_b: str
    word_a: str
    word_b: str
    relation: str
    stem_a: str
    stem_b: str

    def word(self, lang: str) -> str:
        if lang == self.lang_a:
            return self.word_a
        if lang == self.lang_b:
            return self.word_b
        raise KeyError(lang)

    def counterpart_stem(self, lang: str) -> str:
        """Stem of the pair's word in the *other* language than `lang`."""
        if lang == self.lang_a:
            return self.stem_b
        if lang == self.lang_b:
            return self.stem_a
        raise KeyError(lang)

    def flipped(self) -> "RelatedPair":
        return replace(
            self,
            lang_a=self.lang_b,
            lang_b=self.lang_a,
            word_a=self.word_b,
            word_b=self.word_a,
            stem_a=self.stem_b,
            stem_b=self.stem_a,
        )


class Lexicon:
    """Immutable collection of RelatedPairs with a (language, stem) index."""

    def __init__(self, pairs):
        self.pairs: tuple[RelatedPair, ...] = tuple(pairs)
        self.by_id: dict[int, RelatedPair] = {p.pair_id: p for p in self.pairs}
        self.languages: frozenset[str] = frozenset(
            lang for p in self.pairs for lang in (p.lang_a, p.lang_b)
        )
        index: dict[tuple[str, str], set[int]] = {}
        for p in self.pairs:
            index.setdefault((p.lang_a, p.stem_a), set()).add(p.pair_id)
            index.setdefault((p.lang_b, p.stem_b), set()).add(p.pair_id)
        self.stem_index = index

    def __len__(self):
        return len(self.pairs)

    def stem_lookup(self, lang: str, stem_key: str) -> set[int]:
        """pair_ids whose word in `lang` has stem `stem_key` (empty set if none)."""
        return set(self.stem_index.get((lang, stem_key), ()))

    def pairs_for_language_pair(self, a: str, b: str) -> list[RelatedPair]:
        """All pairs between `a` and `b`, oriented so lang_a == a."""
        if a == b:
            raise ValueError("language pair must consist of two distinct languages")
        selected = []
        for p in self.pairs:
            if {p.lang_a, p.lang_b} == {a, b}:
                selected.append(p if p.lang_a == a else p.flipped())
        return selected

    def words_for_language(self, lang: str) -> set[str]:
        """All distinct normalized words of `lang` appearing in the lexicon."""
        words = set()
        for p in self.pairs:
            if p.lang_a == lang:
                words.add(p.word_a)
            elif p.lang_b == lang:
                words.add(p.word_b)
        return words


def load_lexicon(path, languages) -> Lexicon:
    """Load the related-word lexicon, keeping rows whose languages are both
    in `languages`.

    The file is UTF-8, tab-separated, with header
    ``lang_a<TAB>lang_b<TAB>word_a<TAB>word_b<TAB>relation`` and
    relation in {cognate, borrowing}.  Words are lowercased and
    accent-stripped; exact duplicate rows (after normalization and
    canonical orientation) are dropped.
    """
    languages = frozenset(languages)
    seen: set[tuple] = set()
    pairs: list[RelatedPair] = []
    with open(path, encoding="utf-8") as handle:
        header = handle.readline().rstrip("\n")
        if header.split("\t") != _HEADER:
            raise FormatError(path, 1, f"expected header {chr(9).join(_HEADER)!r}")
        for line_no, line in enumerate(handle, start=2):
            line = line.rstrip("\n")
            if not line.strip():
                continue
            fields = line.split("\t")
            if len(fields) != 5:
                raise FormatError(path, line_no, f"expected 5 tab-separated fields, got {len(fields)}")
            lang_a, lang_b, raw_a, raw_b, relation = fields
            for code in (lang_a, lang_b):
                if not is_language_code(code) or code not in SUPPORTED_LANGUAGES:
                    raise FormatError(path, line_no, f"unknown language code {code!r}")
            if relation not in RELATIONS:
                raise FormatError(path, line_no, f"unknown relation {relation!r}")
            if lang_a == lang_b:
                raise FormatError(path, line_no, f"pair within a single language {lang_a!r}")
            if lang_a not in languages or lang_b not in languages:
                continue
            word_a = strip_accents(raw_a)
            word_b = strip_accents(raw_b)
            if not word_a or not word_b:
                raise FormatError(path, line_no, "word empty after normalization")
            if lang_a > lang_b:
                lang_a, lang_b = lang_b, lang_a
                word_a, word_b = word_b, word_a
            key = (lang_a, lang_b, word_a, word_b, relation)
            if key in seen:
                continue
            seen.add(key)
            pairs.append(
                RelatedPair(
                    pair_id=len(pairs),
                    lang_a=lang_a,
                    lang_b=lang_b,
                    word_a=word_a,
                    word_b=word_b,
                    relation=relation,
                    stem_a=stem(lang_a, word_a),
                    stem_b=stem(lang_b, word_b),
                )
            )
    if not pairs:
        raise ConfigurationError(f"empty lexicon: no usable pairs in {path} for languages {sorted(languages)}")
    return Lexicon(pairs)


def save_lexicon(lex: Lexicon, path) -> None:
    """Write `lex` back to the TSV interchange format (canonical orientation)."""
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write("\t".join(_HEADER) + "\n")
        for p in sorted(lex.pairs, key=lambda p: p.pair_id):
            handle.write(f"{p.lang_a}\t{p.lang_b}\t{p.word_a}\t{p.word_b}\t{p.relation}\n")
