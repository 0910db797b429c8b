"""lexintel: corpus-driven lexical intelligibility scores between related
languages, combining surface (orthographic/phonetic) and semantic
(static/contextual embedding) similarity of related word pairs."""

__version__ = "0.1.0"

from .intelligibility import combination_weights, intelligibility_index, within_bounds
from .surface import levenshtein, strip_accents, surface_similarity

__all__ = [
    "__version__",
    "combination_weights",
    "intelligibility_index",
    "within_bounds",
    "levenshtein",
    "strip_accents",
    "surface_similarity",
]
