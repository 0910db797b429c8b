"""Subsetting large word2vec-text vector files to a run's vocabulary.

Rows of selected words are copied verbatim (so repeated subsetting is
byte-stable); only the header count is rewritten.
"""


class SubsetError(ValueError):
    """Malformed vector file or empty intersection."""


def load_vocabulary(path) -> set[str]:
    """One word per line; `#` comments and blank lines ignored."""
    words = set()
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            entry = line.split("#", 1)[0].strip()
            if entry:
                words.add(entry)
    return words


def subset_static(vectors_path, vocabulary_path, output_path) -> int:
    """Write the vector rows whose word is in the vocabulary; returns the
    number of rows kept.  The header count is corrected; dimensionality is
    preserved and validated per row."""
    vocabulary = load_vocabulary(vocabulary_path)
    kept: list[str] = []
    with open(vectors_path, encoding="utf-8") as handle:
        header = handle.readline().split()
        if len(header) != 2 or not all(f.isdigit() for f in header):
            raise SubsetError(f"{vectors_path}:1: expected header '<count> <dim>'")
        dim = int(header[1])
        seen = set()
        for line_no, line in enumerate(handle, start=2):
            stripped = line.rstrip("\n")
            if not stripped:
                continue
            parts = stripped.split()
            if len(parts) != dim + 1:
                raise SubsetError(
                    f"{vectors_path}:{line_no}: expected {dim} vector components, "
                    f"got {len(parts) - 1}")
            word = parts[0]
            if word in vocabulary and word not in seen:
                seen.add(word)
                kept.append(stripped)
    if not kept:
        raise SubsetError("no vectors matched the vocabulary")
    with open(output_path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(f"{len(kept)} {dim}\n")
        for row in kept:
            handle.write(row + "\n")
    return len(kept)
