"""Parallel-corpus ingestion: tokenization, stop-word removal, lexicon
matching and the corpus-level occurrence statistics.

Corpora are pairs of line-aligned UTF-8 text files, one sentence per
line.  Sentence pairs are independent work items, so everything here
streams: memory use does not grow with corpus size.
"""

import re
from dataclasses import dataclass

from .errors import ComputationError, ConfigurationError, FormatError
from .stemming import stem
from .surface import strip_accents

# A token is a maximal run of letters, optionally with internal hyphens or
# apostrophes; everything else is separator material and is discarded.
_TOKEN_RE = re.compile(r"[^\W\d_]+(?:['’-][^\W\d_]+)*")


@dataclass(frozen=True, slots=True)
class Token:
    """One content token: original surface, normalized form, stem, offset."""

    surface: str
    norm: str
    stem: str
    start: int


@dataclass(frozen=True, slots=True)
class SentencePair:
    """One aligned sentence pair, tokenized with stop-words removed."""

    sent_id: int
    lang_a: str
    lang_b: str
    tokens_a: tuple[Token, ...]
    tokens_b: tuple[Token, ...]
    text_a: str
    text_b: str

    def tokens(self, side: str) -> tuple[Token, ...]:
        return self.tokens_a if side == "a" else self.tokens_b

    def lang(self, side: str) -> str:
        return self.lang_a if side == "a" else self.lang_b


@dataclass(frozen=True, slots=True)
class MatchedOccurrence:
    """A token position matched to one lexicon pair.

    `aligned` is True iff the pair's counterpart word also occurs on the
    opposite side of the same sentence pair.
    """

    sent_id: int
    side: str
    token_index: int
    pair_id: int
    aligned: bool


@dataclass(slots=True)
class CorpusStats:
    """Aggregate counts over one parallel corpus and lexicon."""

    n_sentences: int = 0
    total_words_a: int = 0
    total_words_b: int = 0
    related_words: int = 0
    aligned_pairs: int = 0

    def check(self):
        if self.aligned_pairs > self.related_words:
            raise ComputationError("aligned_pairs exceeds related_words")
        if self.related_words > self.total_words_a + self.total_words_b:
            raise ComputationError("related_words exceeds total content tokens")
        return self

    def as_dict(self):
        return {
            "n_sentences": self.n_sentences,
            "total_words_a": self.total_words_a,
            "total_words_b": self.total_words_b,
            "related_words": self.related_words,
            "aligned_pairs": self.aligned_pairs,
        }


def tokenize(text: str, lang: str | None = None) -> list[str]:
    """Split `text` into lowercased word tokens.

    Tokens are maximal letter runs, keeping internal hyphens/apostrophes;
    punctuation and digits are discarded.
    """
    return [m.group().lower() for m in _TOKEN_RE.finditer(text)]


def content_tokens(text: str, lang: str, stopwords: frozenset[str]) -> tuple[Token, ...]:
    """Tokenize one sentence into normalized, stemmed content tokens.

    Stop-words are matched on the lowercased, accent-stripped form.
    """
    out = []
    for m in _TOKEN_RE.finditer(text):
        surface = m.group()
        norm = strip_accents(surface)
        if not norm or norm in stopwords:
            continue
        out.append(Token(surface=surface, norm=norm, stem=stem(lang, norm), start=m.start()))
    return tuple(out)


def load_stopwords(path) -> frozenset[str]:
    """Load one stop-word list: one word per line, `#` comments allowed."""
    words = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            entry = line.split("#", 1)[0].strip()
            if entry:
                words.add(strip_accents(entry))
    return frozenset(words)


def _read_lines(path):
    with open(path, "rb") as handle:
        yield from handle


def load_parallel(path_a, path_b, lang_a, lang_b, stopwords_a=frozenset(), stopwords_b=frozenset()):
    """Stream SentencePairs from two line-aligned files.

    Raises on unequal line counts (reporting both) and on undecodable
    bytes (reporting file and line number).
    """
    lines_a = _read_lines(path_a)
    lines_b = _read_lines(path_b)
    sent_id = 0
    while True:
        raw_a = next(lines_a, None)
        raw_b = next(lines_b, None)
        if raw_a is None and raw_b is None:
            return
        if raw_a is None or raw_b is None:
            count_a = sent_id + sum(1 for _ in lines_a) + (raw_a is not None)
            count_b = sent_id + sum(1 for _ in lines_b) + (raw_b is not None)
            raise ConfigurationError(
                f"line count mismatch {count_a} vs {count_b} between {path_a} and {path_b}"
            )
        texts = []
        for raw, path in ((raw_a, path_a), (raw_b, path_b)):
            try:
                texts.append(raw.decode("utf-8").rstrip("\r\n"))
            except UnicodeDecodeError as exc:
                raise FormatError(path, sent_id + 1, f"undecodable bytes ({exc.reason})") from None
        yield SentencePair(
            sent_id=sent_id,
            lang_a=lang_a,
            lang_b=lang_b,
            tokens_a=content_tokens(texts[0], lang_a, stopwords_a),
            tokens_b=content_tokens(texts[1], lang_b, stopwords_b),
            text_a=texts[0],
            text_b=texts[1],
        )
        sent_id += 1


def match_occurrences(sp: SentencePair, lex) -> list[MatchedOccurrence]:
    """Match every token of both sides against the lexicon stem index.

    A token matched by several pairs yields one occurrence per pair.
    """
    stems = {
        "a": {t.stem for t in sp.tokens_a},
        "b": {t.stem for t in sp.tokens_b},
    }
    occurrences = []
    for side, opposite in (("a", "b"), ("b", "a")):
        lang = sp.lang(side)
        opposite_stems = stems[opposite]
        for token_index, token in enumerate(sp.tokens(side)):
            for pair_id in sorted(lex.stem_lookup(lang, token.stem)):
                pair = lex.by_id[pair_id]
                occurrences.append(
                    MatchedOccurrence(
                        sent_id=sp.sent_id,
                        side=side,
                        token_index=token_index,
                        pair_id=pair_id,
                        aligned=pair.counterpart_stem(lang) in opposite_stems,
                    )
                )
    return occurrences


def corpus_stats(sentence_pairs, lex) -> CorpusStats:
    """Accumulate CorpusStats over a stream of SentencePairs."""
    stats = CorpusStats()
    for sp in sentence_pairs:
        stats.n_sentences += 1
        stats.total_words_a += len(sp.tokens_a)
        stats.total_words_b += len(sp.tokens_b)
        for occ in match_occurrences(sp, lex):
            stats.related_words += 1
            if occ.aligned:
                stats.aligned_pairs += 1
    return stats.check()
