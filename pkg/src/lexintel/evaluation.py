"""Rank-correlation evaluation against human cloze-test results.

Spearman correlation with average ranks for ties, significance from a
seeded permutation test (one-sided), plus the t-approximation p-value
for reference.
"""

import csv
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import stats as _scipy_stats

from .errors import ComputationError, ConfigurationError, FormatError

MIN_PERMUTATIONS = 1000
DEFAULT_PERMUTATIONS = 100_000
_PERMUTATION_BLOCK = 1000


def average_ranks(values) -> np.ndarray:
    """1-based ranks with ties receiving the average of their positions."""
    values = np.asarray(values, dtype=float)
    order = np.argsort(values, kind="stable")
    ranks = np.empty(len(values), dtype=float)
    i = 0
    while i < len(values):
        j = i
        while j + 1 < len(values) and values[order[j + 1]] == values[order[i]]:
            j += 1
        ranks[order[i:j + 1]] = (i + j) / 2.0 + 1.0
        i = j + 1
    return ranks


def spearman(x, y) -> float:
    """Spearman rank correlation: Pearson correlation of the rank vectors."""
    x = list(x)
    y = list(y)
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    if len(x) < 3:
        raise ValueError(f"need at least 3 observations, got {len(x)}")
    rx = average_ranks(x)
    ry = average_ranks(y)
    rx -= rx.mean()
    ry -= ry.mean()
    denom = math.sqrt(float(rx @ rx) * float(ry @ ry))
    if denom == 0.0:
        raise ValueError("correlation undefined: an input is constant")
    return float(rx @ ry) / denom


def permutation_p_value(x, y, n_perm: int = DEFAULT_PERMUTATIONS, seed: int = 0) -> float:
    """One-sided permutation p-value for the observed Spearman correlation.

    p = (1 + #{permutations of y with rho >= observed}) / (1 + n_perm).
    Permutations are drawn in fixed blocks keyed by (seed, block), so the
    result is reproducible bit-for-bit for given inputs, n_perm and seed.
    """
    if n_perm < MIN_PERMUTATIONS:
        raise ValueError(f"insufficient permutations: {n_perm} < {MIN_PERMUTATIONS}")
    observed = spearman(x, y)
    rx = average_ranks(x)
    ry = average_ranks(y)
    rx -= rx.mean()
    ry -= ry.mean()
    denom = math.sqrt(float(rx @ rx) * float(ry @ ry))
    n = len(rx)
    at_least = 0
    produced = 0
    block = 0
    threshold = observed - 1e-12  # guard exact-tie comparisons against rounding
    while produced < n_perm:
        size = min(_PERMUTATION_BLOCK, n_perm - produced)
        rng = np.random.default_rng((seed, block))
        perms = np.argsort(rng.random((size, n)), axis=1)
        rhos = (ry[perms] @ rx) / denom
        at_least += int(np.sum(rhos >= threshold))
        produced += size
        block += 1
    return (1 + at_least) / (1 + n_perm)


def t_approximation_p_value(rho: float, n: int) -> float:
    """Two-sided p-value from the t approximation with n-2 degrees of freedom."""
    if n < 3:
        raise ValueError("need at least 3 observations")
    if abs(rho) >= 1.0:
        return 0.0
    t = rho * math.sqrt((n - 2) / (1.0 - rho * rho))
    return float(2.0 * _scipy_stats.t.sf(abs(t), df=n - 2))


@dataclass
class CorrelationReport:
    """Spearman correlation of computed scores against cloze results."""

    rho: float
    p_permutation: float
    p_t_two_sided: float
    n: int
    n_permutations: int
    seed: int
    configuration: str
    dropped_pairs: list = field(default_factory=list)

    def as_dict(self):
        return {
            "rho": self.rho,
            "p_permutation": self.p_permutation,
            "p_t_two_sided": self.p_t_two_sided,
            "n": self.n,
            "n_permutations": self.n_permutations,
            "seed": self.seed,
            "configuration": self.configuration,
            "dropped_pairs": [f"{a}-{b}" for a, b in self.dropped_pairs],
        }


def load_cloze_results(path) -> dict[tuple[str, str], float]:
    """Load human cloze scores from a CSV with header `speaker,listener,score`."""
    results = {}
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        header = next(reader, None)
        if header is None or [h.strip() for h in header] != ["speaker", "listener", "score"]:
            raise FormatError(path, 1, "expected header 'speaker,listener,score'")
        for line_no, row in enumerate(reader, start=2):
            if not row or not any(cell.strip() for cell in row):
                continue
            if len(row) != 3:
                raise FormatError(path, line_no, f"expected 3 columns, got {len(row)}")
            speaker, listener, raw = (cell.strip() for cell in row)
            if speaker == listener:
                raise FormatError(path, line_no, "diagonal entry (speaker == listener)")
            try:
                score = float(raw)
            except ValueError:
                raise FormatError(path, line_no, f"non-numeric score {raw!r}") from None
            if not 0.0 <= score <= 100.0:
                raise FormatError(path, line_no, f"score {score} outside [0, 100]")
            results[(speaker, listener)] = score
    if not results:
        raise ConfigurationError(f"no cloze results in {path}")
    return results


def evaluate_against_cloze(scores: dict[tuple[str, str], float],
                           cloze: dict[tuple[str, str], float],
                           configuration: str = "",
                           n_perm: int = DEFAULT_PERMUTATIONS,
                           seed: int = 0,
                           warn=None) -> CorrelationReport:
    """Correlate directional scores with cloze results over their shared
    ordered language pairs (canonically ordered); pairs missing from the
    cloze data are dropped with a warning."""
    common = sorted(set(scores) & set(cloze))
    dropped = sorted(set(scores) - set(cloze))
    if dropped and warn is not None:
        warn(f"{len(dropped)} ordered pairs missing from cloze data: "
             + ", ".join(f"{a}-{b}" for a, b in dropped))
    if len(common) < 3:
        raise ComputationError(
            f"only {len(common)} ordered pairs overlap with the cloze data; need at least 3"
        )
    x = [scores[key] for key in common]
    y = [cloze[key] for key in common]
    rho = spearman(x, y)
    return CorrelationReport(
        rho=rho,
        p_permutation=permutation_p_value(x, y, n_perm=n_perm, seed=seed),
        p_t_two_sided=t_approximation_p_value(rho, len(common)),
        n=len(common),
        n_permutations=n_perm,
        seed=seed,
        configuration=configuration,
        dropped_pairs=dropped,
    )
