"""Affinity-propagation clustering of per-occurrence embedding vectors.

Message passing on a similarity matrix of negative squared Euclidean
distances, median-of-off-diagonal preference, damping 0.5, at most 200
iterations, convergence declared after 15 iterations without exemplar
changes.  When the procedure does not converge or selects no exemplar,
callers fall back to a single global-mean cluster.
"""

from dataclasses import dataclass

import numpy as np

DAMPING = 0.5
MAX_ITER = 200
CONVERGENCE_WINDOW = 15


@dataclass(frozen=True)
class ClusterSet:
    """Clusters of one word's occurrence vectors.

    `centers` holds the arithmetic mean of each cluster's members, one
    row per cluster; `labels` assigns every input vector to a center.
    """

    key: tuple
    centers: np.ndarray
    sizes: tuple[int, ...]
    labels: tuple[int, ...]

    def __post_init__(self):
        if len(self.sizes) != len(self.centers):
            raise ValueError("one size per center required")
        if sum(self.sizes) != len(self.labels):
            raise ValueError("cluster sizes must sum to the number of inputs")


def affinity_propagation(similarity: np.ndarray, preference: float,
                         damping: float = DAMPING, max_iter: int = MAX_ITER,
                         convergence_window: int = CONVERGENCE_WINDOW):
    """Run affinity propagation on a square similarity matrix.

    Returns (exemplar_indices, labels, converged).  `labels[i]` indexes
    into `exemplar_indices`.  `converged` is False when the exemplar set
    was still changing at `max_iter` or no exemplar emerged.
    """
    S = np.array(similarity, dtype=float, copy=True)
    n = S.shape[0]
    if S.shape != (n, n):
        raise ValueError("similarity matrix must be square")
    idx = np.arange(n)
    S[idx, idx] = preference

    A = np.zeros((n, n))
    R = np.zeros((n, n))
    exemplars = np.zeros(n, dtype=bool)
    stable = 0
    converged = False

    for _ in range(max_iter):
        # responsibilities
        AS = A + S
        best = AS.argmax(axis=1)
        best_val = AS[idx, best]
        AS[idx, best] = -np.inf
        second_val = AS.max(axis=1)
        R_new = S - best_val[:, None]
        R_new[idx, best] = S[idx, best] - second_val
        R = damping * R + (1.0 - damping) * R_new

        # availabilities
        Rp = np.maximum(R, 0.0)
        Rp[idx, idx] = R[idx, idx]
        A_new = Rp.sum(axis=0)[None, :] - Rp
        diagonal = A_new[idx, idx].copy()
        A_new = np.minimum(A_new, 0.0)
        A_new[idx, idx] = diagonal
        A = damping * A + (1.0 - damping) * A_new

        current = (np.diag(A) + np.diag(R)) > 0
        if np.array_equal(current, exemplars):
            stable += 1
            if stable >= convergence_window and current.any():
                exemplars = current
                converged = True
                break
        else:
            stable = 0
        exemplars = current

    exemplar_indices = np.flatnonzero(exemplars)
    if exemplar_indices.size == 0:
        return exemplar_indices, np.zeros(n, dtype=int), False

    labels = np.argmax(S[:, exemplar_indices], axis=1)
    labels[exemplar_indices] = np.arange(exemplar_indices.size)
    # refine each exemplar to the member maximizing within-cluster similarity
    for k in range(exemplar_indices.size):
        members = np.flatnonzero(labels == k)
        best_member = members[np.argmax(S[np.ix_(members, members)].sum(axis=0))]
        exemplar_indices[k] = best_member
    labels = np.argmax(S[:, exemplar_indices], axis=1)
    labels[exemplar_indices] = np.arange(exemplar_indices.size)
    return exemplar_indices, labels, converged


def negative_squared_distances(vectors: np.ndarray) -> np.ndarray:
    """Similarity matrix S[i, j] = -||x_i - x_j||^2."""
    sq = np.sum(vectors * vectors, axis=1)
    d2 = sq[:, None] + sq[None, :] - 2.0 * (vectors @ vectors.T)
    np.maximum(d2, 0.0, out=d2)
    return -d2


def cluster_vectors(key, vectors: np.ndarray) -> ClusterSet:
    """Cluster occurrence vectors; fall back to one global-mean cluster when
    affinity propagation fails to converge or yields no exemplar."""
    vectors = np.asarray(vectors, dtype=float)
    n = len(vectors)
    if n == 0:
        raise ValueError("cannot cluster an empty set of vectors")
    if n == 1:
        return ClusterSet(key=key, centers=vectors.copy(), sizes=(1,), labels=(0,))

    S = negative_squared_distances(vectors)
    off_diagonal = S[~np.eye(n, dtype=bool)]
    preference = float(np.median(off_diagonal))
    exemplar_indices, labels, converged = affinity_propagation(S, preference)

    if not converged or exemplar_indices.size == 0:
        center = vectors.mean(axis=0, keepdims=True)
        return ClusterSet(key=key, centers=center, sizes=(n,), labels=(0,) * n)

    centers = np.vstack([
        vectors[labels == k].mean(axis=0) for k in range(exemplar_indices.size)
    ])
    sizes = tuple(int(np.sum(labels == k)) for k in range(exemplar_indices.size))
    return ClusterSet(key=key, centers=centers, sizes=sizes, labels=tuple(int(x) for x in labels))
