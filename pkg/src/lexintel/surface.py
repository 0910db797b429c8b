"""Form-level similarity: accent stripping, Levenshtein distance and the
phonetic lexicon.

All comparisons work on sequences of atomic units: characters for
orthographic forms, phoneme symbols for phonetic forms.
"""

import unicodedata
from dataclasses import dataclass

from .errors import ComputationError, FormatError
from .langs import check_language


def strip_accents(s: str) -> str:
    """Lowercase `s` and remove all combining marks after canonical decomposition."""
    decomposed = unicodedata.normalize("NFD", s.lower())
    return "".join(ch for ch in decomposed if not unicodedata.combining(ch))


def levenshtein(a, b) -> int:
    """Minimum number of unit insertions, deletions and substitutions (cost 1
    each) transforming sequence `a` into sequence `b`."""
    if a == b:
        return 0
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)
    row = list(range(len(b) + 1))
    for i, unit_a in enumerate(a, start=1):
        diagonal = row[0]
        row[0] = i
        for j, unit_b in enumerate(b, start=1):
            above = row[j]
            value = diagonal + (unit_a != unit_b)
            if above + 1 < value:
                value = above + 1
            if row[j - 1] + 1 < value:
                value = row[j - 1] + 1
            row[j] = value
            diagonal = above
    return row[-1]


def surface_similarity(a, b) -> float:
    """1 - normalized Levenshtein distance; 1.0 means identical sequences.

    Normalized by the longer sequence length, so the result is in [0, 1].
    """
    longest = max(len(a), len(b))
    if longest == 0:
        raise ComputationError("undefined similarity: both sequences are empty")
    return 1.0 - levenshtein(a, b) / longest


@dataclass(frozen=True, slots=True)
class PhonemeSequence:
    """Phonemic transcription of one word; each unit is one phoneme symbol."""

    lang: str
    word: str
    units: tuple[str, ...]


class PhoneticLexicon:
    """Map from (language, normalized word) to its phoneme sequence."""

    def __init__(self, entries=()):
        self._entries: dict[tuple[str, str], PhonemeSequence] = dict(entries)

    def __len__(self):
        return len(self._entries)

    def get(self, lang: str, word: str):
        """The PhonemeSequence for (lang, word), or None when untranscribed."""
        return self._entries.get((lang, word))

    def __contains__(self, key):
        return key in self._entries


def load_phonetic_lexicon(path) -> PhoneticLexicon:
    """Load a phonetic lexicon from a TSV of `lang<TAB>word<TAB>phonemes`.

    Phonemes are space-separated symbols, each treated as an atomic unit.
    An empty file yields an empty (valid) lexicon; queries for missing
    words return None and callers skip the phonetic channel for them.
    """
    entries = {}
    with open(path, encoding="utf-8") as handle:
        for line_no, line in enumerate(handle, start=1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            fields = line.split("\t")
            if len(fields) != 3:
                raise FormatError(path, line_no, f"expected 3 tab-separated fields, got {len(fields)}")
            lang, word, phonemes = fields
            try:
                check_language(lang)
            except Exception as exc:
                raise FormatError(path, line_no, str(exc)) from None
            word = strip_accents(word)
            if not word:
                raise FormatError(path, line_no, "empty word")
            units = tuple(phonemes.split())
            if not units:
                raise FormatError(path, line_no, "empty phoneme sequence")
            entries[(lang, word)] = PhonemeSequence(lang=lang, word=word, units=units)
    return PhoneticLexicon(entries)
