"""Independent oracle for the two-language fixture.

Recomputes the fixture's directional corpus scores from first
principles, spreadsheet style: every table below was derived by hand
from the fixture files (token-by-token), and all arithmetic here uses
plain Python floats with naive algorithms (recursive edit distance,
explicit cosine, the closed-form index).  Nothing is imported from the
package under test.
"""

import math

ES_CONTENT_TOKENS = [2, 4, 4, 4, 4, 4, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 4]
RO_CONTENT_TOKENS = [2, 4, 4, 4, 4, 4, 3, 3, 3, 4, 3, 3, 4, 3, 3, 4, 4, 4]

# per sentence: pair-id candidates of each matched speaker-side token
ES_MATCHES = {
    0: [{0}], 1: [{1, 2}, {5}], 2: [{3}, {10}, {6}, {11}], 3: [{8}, {12}, {7}],
    4: [{9}, {0}], 5: [{4}, {1, 2}, {11}], 7: [{13}, {12}], 8: [{6}, {9}, {11}],
    9: [{7}, {5}], 10: [{3}], 11: [{0}], 12: [{1, 2}, {9}], 13: [{13}, {6}],
    14: [{7}], 15: [{10}, {8}, {3}], 17: [{0}, {12}, {9}],
}
RO_MATCHES = {
    0: [{0}], 1: [{1}, {5}], 2: [{3, 4}, {10}, {6}, {11}], 3: [{8}, {12}, {7}],
    4: [{9}, {0}], 5: [{3, 4}, {1}, {11}], 7: [{13}, {12}], 8: [{6}, {9}, {11}],
    9: [{7}, {5}], 10: [{3, 4}], 12: [{2}, {12}, {5}], 14: [{7}],
    15: [{10}, {8}, {3, 4}], 17: [{0}, {12}, {9}],
}

# pair id -> (normalized es word, normalized ro word)
PAIR_WORDS = {
    0: ("luna", "luna"),
    1: ("tiempo", "timp"),
    2: ("tiempo", "tempo"),
    3: ("padre", "parinte"),
    4: ("pariente", "parinte"),
    5: ("mundo", "lume"),
    6: ("agua", "apa"),
    7: ("noche", "noapte"),
    8: ("carta", "carte"),
    9: ("mar", "mare"),
    10: ("preparar", "pregati"),
    11: ("dulce", "dulce"),
    12: ("nuevo", "nou"),
    13: ("flor", "floare"),
}

# phoneme tuples copied from phonetic.tsv; pairs 5 and 10 are untranscribed
PHONEMES_ES = {
    "luna": ("l", "u", "n", "a"),
    "tiempo": ("t", "j", "e", "m", "p", "o"),
    "padre": ("p", "a", "d", "ɾ", "e"),
    "pariente": ("p", "a", "ɾ", "j", "e", "n", "t", "e"),
    "agua": ("a", "ɣ", "w", "a"),
    "noche": ("n", "o", "tʃ", "e"),
    "carta": ("k", "a", "ɾ", "t", "a"),
    "mar": ("m", "a", "ɾ"),
    "dulce": ("d", "u", "l", "θ", "e"),
    "nuevo": ("n", "w", "e", "β", "o"),
    "flor": ("f", "l", "o", "ɾ"),
}
PHONEMES_RO = {
    "luna": ("l", "u", "n", "ə"),
    "timp": ("t", "i", "m", "p"),
    "tempo": ("t", "e", "m", "p", "o"),
    "parinte": ("p", "ə", "r", "i", "n", "t", "e"),
    "apa": ("a", "p", "ə"),
    "noapte": ("n", "o̯", "a", "p", "t", "e"),
    "carte": ("k", "a", "r", "t", "e"),
    "mare": ("m", "a", "r", "e"),
    "dulce": ("d", "u", "l", "tʃ", "e"),
    "nou": ("n", "o", "w"),
    "floare": ("f", "l", "o̯", "a", "r", "e"),
}

# static vectors copied from vectors/*.vec; "preparar" resolves to the
# stored inflection "preparado" (same stem), "flor" has no vector at all
STATIC_ES = {
    "luna": (1, 0, 0, 0),
    "tiempo": (0.8, 0.6, 0, 0),
    "padre": (0, 1, 0, 0),
    "pariente": (0.6, 0.8, 0, 0),
    "mundo": (0, 0, 1, 0),
    "agua": (0, 0, 0, 1),
    "noche": (0.6, 0, 0.8, 0),
    "carta": (0, 0.6, 0, 0.8),
    "mar": (0.8, 0, 0.6, 0),
    "preparar": (0, 0.8, 0.6, 0),  # vector of "preparado"
    "dulce": (0.5, 0.5, 0.5, 0.5),
    "nuevo": (1, 1, 0, 0),
}
STATIC_RO = {
    "luna": (1, 0, 0, 0),
    "timp": (0.6, 0.8, 0, 0),
    "tempo": (1, 0, 0, 0),
    "parinte": (0, 1, 0, 0),
    "lume": (0, 0, 0.6, 0.8),
    "apa": (0, 0, 0, 1),
    "noapte": (0.6, 0, 0.8, 0),
    "carte": (0, 0.8, 0, 0.6),
    "mare": (0.6, 0, 0.8, 0),
    "pregati": (0, 0.6, 0.8, 0),
    "dulce": (0.5, 0.5, 0.5, 0.5),
    "nou": (1, 1, 0, 0),
}

# contextual cluster centers: every word's occurrences are identical
# copies of one vector (one fallback cluster), except es "tiempo" whose
# eight occurrences form two blobs with means (1,0,0) and (0,1,0); the
# "dulce" pair has no occurrence vectors at all
CTX_CENTERS_ES = {
    "luna": [(1, 0, 0)],
    "tiempo": [(1.0, 0.0, 0.0), (0.0, 1.0, 0.0)],
    "padre": [(0, 1, 0)],
    "pariente": [(0.6, 0.8, 0)],
    "mundo": [(0, 0, 1)],
    "agua": [(0, 0, 1)],
    "noche": [(0.6, 0, 0.8)],
    "carta": [(0, 0.8, 0.6)],
    "mar": [(0.8, 0, 0.6)],
    "preparar": [(0, 0.6, 0.8)],
    "nuevo": [(0.6, 0.8, 0)],
    "flor": [(0, 1, 0)],
}
CTX_CENTERS_RO = {
    "luna": [(1, 0, 0)],
    "timp": [(0.8, 0.6, 0)],
    "tempo": [(1, 0, 0)],
    "parinte": [(0, 1, 0)],
    "lume": [(0, 0.6, 0.8)],
    "apa": [(0, 0, 1)],
    "noapte": [(0.6, 0, 0.8)],
    "carte": [(0, 0.6, 0.8)],
    "mare": [(0.8, 0, 0.6)],
    "pregati": [(0, 0.8, 0.6)],
    "nou": [(0.6, 0.8, 0)],
    "floare": [(0, 0.8, 0.6)],
}

CONFIGS = [
    ("orthographic", "static"),
    ("orthographic", "contextual"),
    ("phonetic", "static"),
    ("phonetic", "contextual"),
]


def edit_distance_recursive(a, b):
    """Exponential three-way recursion straight from the definition."""
    if not a:
        return len(b)
    if not b:
        return len(a)
    return min(
        edit_distance_recursive(a[:-1], b) + 1,
        edit_distance_recursive(a, b[:-1]) + 1,
        edit_distance_recursive(a[:-1], b[:-1]) + (a[-1] != b[-1]),
    )


def form_similarity(a, b):
    return 1.0 - edit_distance_recursive(a, b) / max(len(a), len(b))


def cosine(u, v):
    dot = sum(x * y for x, y in zip(u, v))
    nu = math.sqrt(sum(x * x for x in u))
    nv = math.sqrt(sum(x * x for x in v))
    return dot / (nu * nv)


def clamp01(x):
    return min(1.0, max(0.0, x))


def index_formula(semantic, surface):
    product = semantic * surface
    if product == 1.0:
        return 1.0
    return semantic * surface * (2.0 - semantic - surface) / (1.0 - product)


def pair_surface(pair_id, channel):
    es_word, ro_word = PAIR_WORDS[pair_id]
    if channel == "orthographic":
        return form_similarity(es_word, ro_word)
    if es_word not in PHONEMES_ES or ro_word not in PHONEMES_RO:
        return None
    return form_similarity(PHONEMES_ES[es_word], PHONEMES_RO[ro_word])


def pair_semantic(pair_id, channel):
    es_word, ro_word = PAIR_WORDS[pair_id]
    if channel == "static":
        if es_word not in STATIC_ES or ro_word not in STATIC_RO:
            return None
        return clamp01(cosine(STATIC_ES[es_word], STATIC_RO[ro_word]))
    if es_word not in CTX_CENTERS_ES or ro_word not in CTX_CENTERS_RO:
        return None
    centers_a = CTX_CENTERS_ES[es_word]
    centers_b = CTX_CENTERS_RO[ro_word]
    total = sum(cosine(u, v) for u in centers_a for v in centers_b)
    return clamp01(total / (len(centers_a) * len(centers_b)))


def pair_index(pair_id, surface_channel, semantic_channel):
    surface = pair_surface(pair_id, surface_channel)
    semantic = pair_semantic(pair_id, semantic_channel)
    if surface is None or semantic is None:
        return None
    return index_formula(semantic, surface)


def expected_direction_score(speaker, surface_channel, semantic_channel):
    """Single-text pooled score for one direction and configuration."""
    matches = ES_MATCHES if speaker == "es" else RO_MATCHES
    token_counts = ES_CONTENT_TOKENS if speaker == "es" else RO_CONTENT_TOKENS
    total = 0.0
    scored = 0
    for sent_id in sorted(matches):
        for candidates in matches[sent_id]:
            indices = [pair_index(p, surface_channel, semantic_channel) for p in sorted(candidates)]
            indices = [i for i in indices if i is not None]
            if indices:
                total += max(indices)
                scored += 1
    return total / sum(token_counts), scored, sum(token_counts)


def expected_matrix():
    """(speaker, listener, surface, semantic) -> (score, n_scored, n_content)."""
    out = {}
    for speaker, listener in (("es", "ro"), ("ro", "es")):
        for surface_channel, semantic_channel in CONFIGS:
            out[(speaker, listener, surface_channel, semantic_channel)] = (
                expected_direction_score(speaker, surface_channel, semantic_channel)
            )
    return out


EXPECTED_STATS = {
    "n_sentences": 18,
    "total_words_a": 59,
    "total_words_b": 63,
    "related_words": 75,
    "aligned_pairs": 62,
}
