"""Seeded random generators shared by the test modules."""

from fractions import Fraction

import numpy as np

from genspace import ExactDistribution, GenericSpace, JointDistribution


def random_composition(rng, total, parts):
    """Positive integers of length `parts` summing to `total`."""
    assert 1 <= parts <= total
    if parts == 1:
        return [total]
    cuts = np.sort(rng.choice(total - 1, size=parts - 1, replace=False) + 1)
    bounds = [0, *cuts.tolist(), total]
    return [bounds[i + 1] - bounds[i] for i in range(parts)]


def random_distribution(rng, max_outcomes=6, max_denominator=64, min_outcomes=1):
    n = int(rng.integers(min_outcomes, max_outcomes + 1))
    q = int(rng.integers(max(n, 2), max_denominator + 1))
    return ExactDistribution(Fraction(w, q) for w in random_composition(rng, q, n))


def random_generic_space(rng, max_dimension=512, max_parts=6):
    d = int(rng.integers(2, max_dimension + 1))
    parts = int(rng.integers(1, min(max_parts, d) + 1))
    return GenericSpace(d, tuple(random_composition(rng, d, parts)))


def random_dyadic_space(rng, max_log2=12, max_parts=64):
    """Generic space with a power-of-two dimension and power-of-two counts.

    Built by repeatedly halving a random splittable block, which reaches
    every power-of-two composition.
    """
    k = int(rng.integers(1, max_log2 + 1))
    d = 2**k
    target = int(rng.integers(2, min(max_parts, d) + 1))
    counts = [d]
    while len(counts) < target:
        splittable = [i for i, c in enumerate(counts) if c > 1]
        if not splittable:
            break
        c = counts.pop(int(rng.choice(splittable)))
        counts.extend([c // 2, c // 2])
    order = rng.permutation(len(counts))
    return GenericSpace(d, tuple(int(counts[i]) for i in order))


def random_joint(rng, max_rows=8, max_cols=8, max_denominator=64):
    """Random exact joint with strictly positive marginals."""
    r = int(rng.integers(1, max_rows + 1))
    c = int(rng.integers(1, max_cols + 1))
    q = int(rng.integers(r + c, max_denominator + 1))
    weights = np.zeros((r, c), dtype=int)
    for i in range(r):
        weights[i, int(rng.integers(0, c))] += 1
    for j in range(c):
        if weights[:, j].sum() == 0:
            weights[int(rng.integers(0, r)), j] += 1
    remaining = q - int(weights.sum())
    for flat in rng.integers(0, r * c, size=remaining):
        weights[flat // c, flat % c] += 1
    return JointDistribution(
        [[Fraction(int(w), q) for w in row] for row in weights]
    )


def random_unit_vector(rng, dim):
    while True:
        v = rng.normal(size=dim)
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            return v / norm


def gram_schmidt_basis(rng, dim):
    """Random orthonormal basis, rows of the returned matrix.

    Classical Gram-Schmidt with a second orthogonalization pass to push the
    Gram defect down to rounding level.
    """
    basis = []
    while len(basis) < dim:
        v = rng.normal(size=dim)
        for _ in range(2):
            for b in basis:
                v = v - (b @ v) * b
        norm = np.linalg.norm(v)
        if norm > 1e-6:
            basis.append(v / norm)
    return np.vstack(basis)
