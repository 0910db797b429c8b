"""The lexical intelligibility index.

Combines a semantic similarity and a surface (form) similarity, both in
[0, 1], into a single score.  The index is the linear combination
``alpha * semantic + beta * surface`` whose weights solve the boundary
conditions "identical form => score equals semantic similarity" and
"identical meaning => score equals surface similarity":

    alpha = surface * (1 - semantic) / (1 - semantic * surface)
    beta  = semantic * (1 - surface) / (1 - semantic * surface)

which closes to ``semantic * surface * (2 - semantic - surface) /
(1 - semantic * surface)``.  The index always lies between the product
of the two similarities and their minimum.
"""

_INPUT_TOLERANCE = 1e-9


def _unit_interval(value: float, name: str) -> float:
    """Validate a score, forgiving floating-point noise up to 1e-9."""
    v = float(value)
    if v < 0.0:
        if v < -_INPUT_TOLERANCE:
            raise ValueError(f"{name} must be in [0, 1], got {value!r}")
        return 0.0
    if v > 1.0:
        if v > 1.0 + _INPUT_TOLERANCE:
            raise ValueError(f"{name} must be in [0, 1], got {value!r}")
        return 1.0
    return v


def combination_weights(semantic: float, surface: float) -> tuple[float, float]:
    """Weights (alpha, beta) of the linear combination behind the index.

    ``alpha * semantic + beta * surface`` reproduces
    ``intelligibility_index(semantic, surface)`` exactly.  Undefined when
    both similarities are maximal (the weights degenerate).
    """
    semantic = _unit_interval(semantic, "semantic similarity")
    surface = _unit_interval(surface, "surface similarity")
    product = semantic * surface
    if product == 1.0:
        raise ValueError("degenerate: both similarities maximal")
    denominator = 1.0 - product
    alpha = surface * (1.0 - semantic) / denominator
    beta = semantic * (1.0 - surface) / denominator
    return alpha, beta


def intelligibility_index(semantic: float, surface: float) -> float:
    """Combined intelligibility score in [0, 1].

    Computed through the weight decomposition so that the identity
    ``alpha * semantic + beta * surface == index`` holds bit-exactly;
    the two-identical-words limit returns 1 by continuity.
    """
    semantic = _unit_interval(semantic, "semantic similarity")
    surface = _unit_interval(surface, "surface similarity")
    product = semantic * surface
    if product == 1.0:
        return 1.0
    denominator = 1.0 - product
    alpha = surface * (1.0 - semantic) / denominator
    beta = semantic * (1.0 - surface) / denominator
    return alpha * semantic + beta * surface


def within_bounds(semantic: float, surface: float, index: float,
                  tolerance: float = 1e-12) -> bool:
    """True iff `index` lies in [semantic*surface, min(semantic, surface)]
    within `tolerance`."""
    semantic = _unit_interval(semantic, "semantic similarity")
    surface = _unit_interval(surface, "surface similarity")
    index = float(index)
    lower = semantic * surface
    upper = min(semantic, surface)
    return (lower - tolerance) <= index <= (upper + tolerance)
