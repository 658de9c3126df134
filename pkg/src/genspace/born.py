"""Geometric probability: unit state vectors, density matrices, measurement.

A distribution embeds into a real Hilbert space as the unit vector whose
components are sqrt(p_i); the probability of an outcome axis is then the
squared inner product (cosine squared of the angle) between state and
axis.  The same vector arises by starting from the uniform state in the
generic space (all components 1/sqrt(D)) and collapsing each block of
counts[i] axes onto its diagonal, which preserves the norm.

Density matrices generalize this to mixed states: a symmetric positive
semidefinite matrix with unit trace, measured by operators m_z that sum
to the identity, yields outcome probabilities trace(rho @ m_z).

Everything works in real arithmetic; validation uses the module's own
cyclic Jacobi eigensolver rather than an external decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .distribution import ExactDistribution, GenericSpace

__all__ = [
    "JspsVector",
    "DensityMatrix",
    "DensityValidation",
    "MeasurementSet",
    "jsps_from_distribution",
    "collapse_jsps",
    "born_probability",
    "measure",
    "validate_density",
    "jacobi_eigenvalues",
    "sample",
    "parse_matrix",
    "format_matrix",
]

UNIT_NORM_TOL = 1e-9
SYMMETRY_TOL = 1e-12
TRACE_TOL = 1e-12
EIGENVALUE_FLOOR = -1e-10
COMPLETENESS_TOL = 1e-10
MAX_EIGEN_DIM = 64


class JspsVector:
    """A unit-norm real vector whose squared components are probabilities.

    Canonical constructions use the nonnegative square root, but negated
    components are accepted: probabilities only see the squares.
    """

    __slots__ = ("components",)

    def __init__(self, components: Iterable[float]):
        arr = np.asarray(tuple(components), dtype=float)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("state vector must be a non-empty 1-D sequence")
        if not np.all(np.isfinite(arr)):
            raise ValueError("state vector components must be finite")
        norm_sq = float(np.dot(arr, arr))
        if abs(norm_sq - 1.0) > UNIT_NORM_TOL:
            raise ValueError(f"state vector has squared norm {norm_sq}, expected 1")
        arr.setflags(write=False)
        self.components = arr

    @property
    def size(self) -> int:
        return int(self.components.size)

    def probabilities(self) -> np.ndarray:
        """Squared components; a float probability vector."""
        return self.components**2

    def angles(self) -> np.ndarray:
        """arccos of each component: the angle to each outcome axis."""
        return np.arccos(np.clip(self.components, -1.0, 1.0))

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"JspsVector({self.components.tolist()!r})"


def jsps_from_distribution(dist: ExactDistribution) -> JspsVector:
    """Embed a distribution as the unit vector with components sqrt(p_i)."""
    return JspsVector(math.sqrt(p) for p in dist.probs)


def collapse_jsps(dimension: int, counts: Sequence[int]) -> JspsVector:
    """Collapse the uniform generic-space state onto block diagonals.

    Each block of counts[i] axes carrying amplitude 1/sqrt(D) collapses
    onto its diagonal with amplitude sqrt(counts[i]/D); the norm is
    preserved, so the result squares to the collapsed distribution.
    """
    space = GenericSpace(dimension, tuple(counts))
    return JspsVector(
        math.sqrt(c / space.dimension) for c in space.counts
    )


def born_probability(psi: JspsVector, outcome: JspsVector) -> float:
    """Probability of `outcome` given state `psi`: their squared inner product."""
    if psi.size != outcome.size:
        raise ValueError(f"dimension mismatch: state {psi.size}, outcome {outcome.size}")
    return float(np.dot(outcome.components, psi.components)) ** 2


def jacobi_eigenvalues(
    matrix: np.ndarray, tol: float = 1e-12, max_sweeps: int = 100
) -> np.ndarray:
    """Eigenvalues of a symmetric matrix by cyclic Jacobi rotations.

    Sweeps row-cyclically over the upper triangle, annihilating each
    off-diagonal entry with a plane rotation, until the off-diagonal
    Frobenius norm drops to `tol`.  Ascending-sorted eigenvalues.

    Intended for desk-scale validation; dimensions above 64 are refused.
    """
    a = np.array(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    if n > MAX_EIGEN_DIM:
        raise ValueError(f"eigensolver supports dimensions <= {MAX_EIGEN_DIM}, got {n}")
    if np.max(np.abs(a - a.T), initial=0.0) > 1e-8:
        raise ValueError("eigensolver requires a symmetric matrix")
    if n == 1:
        return a.diagonal().copy()

    off_mask = ~np.eye(n, dtype=bool)

    def off_norm() -> float:
        # Summed directly over the off-diagonal entries; subtracting the
        # diagonal from the full norm would cancel catastrophically here.
        return math.sqrt(float(np.sum(a[off_mask] ** 2)))

    for _ in range(max_sweeps):
        if off_norm() <= tol:
            return np.sort(a.diagonal().copy())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                # Rotation with |angle| <= pi/4 (tan = t), which keeps the
                # cyclic sweep monotonically convergent; hypot avoids
                # overflow when the diagonal gap dwarfs the entry.
                tau = float(a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0:
                    t = 1.0 / (tau + math.hypot(tau, 1.0))
                else:
                    t = -1.0 / (-tau + math.hypot(tau, 1.0))
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                row_p = a[p, :].copy()
                row_q = a[q, :].copy()
                a[p, :] = c * row_p - s * row_q
                a[q, :] = s * row_p + c * row_q
                col_p = a[:, p].copy()
                col_q = a[:, q].copy()
                a[:, p] = c * col_p - s * col_q
                a[:, q] = s * col_p + c * col_q
    if off_norm() <= tol:
        return np.sort(a.diagonal().copy())
    raise RuntimeError(f"Jacobi iteration did not converge in {max_sweeps} sweeps")


@dataclass(frozen=True)
class DensityValidation:
    """Diagnostics for a candidate density matrix."""

    symmetry_defect: float
    trace_defect: float
    eigenvalues: tuple[float, ...]
    symmetric: bool
    unit_trace: bool
    psd: bool

    @property
    def valid(self) -> bool:
        return self.symmetric and self.unit_trace and self.psd

    def problems(self) -> list[str]:
        issues = []
        if not self.symmetric:
            issues.append(f"symmetry defect {self.symmetry_defect:.3g} > {SYMMETRY_TOL}")
        if not self.unit_trace:
            issues.append(f"trace defect {self.trace_defect:.3g} > {TRACE_TOL}")
        if not self.psd:
            issues.append(f"minimum eigenvalue {min(self.eigenvalues):.6g} < 0")
        return issues


def validate_density(matrix: np.ndarray) -> DensityValidation:
    """Check symmetry, unit trace, and positive semidefiniteness.

    Eigenvalues come from :func:`jacobi_eigenvalues` applied to the
    symmetric part; a floor of -1e-10 absorbs rounding in user input.
    """
    a = np.asarray(matrix, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    symmetry_defect = float(np.max(np.abs(a - a.T), initial=0.0))
    trace_defect = float(abs(np.trace(a) - 1.0))
    eigenvalues = jacobi_eigenvalues((a + a.T) / 2.0)
    return DensityValidation(
        symmetry_defect=symmetry_defect,
        trace_defect=trace_defect,
        eigenvalues=tuple(float(v) for v in eigenvalues),
        symmetric=symmetry_defect <= SYMMETRY_TOL,
        unit_trace=trace_defect <= TRACE_TOL,
        psd=min(eigenvalues) >= EIGENVALUE_FLOOR,
    )


class DensityMatrix:
    """Symmetric positive semidefinite matrix with unit trace."""

    __slots__ = ("entries",)

    def __init__(self, entries: np.ndarray):
        arr = np.array(entries, dtype=float)
        report = validate_density(arr)
        if not report.valid:
            raise ValueError("not a density matrix: " + "; ".join(report.problems()))
        arr.setflags(write=False)
        self.entries = arr

    @classmethod
    def pure(cls, psi: JspsVector) -> "DensityMatrix":
        """Rank-one density of a pure state: the outer product psi psi^T."""
        return cls(np.outer(psi.components, psi.components))

    @property
    def dimension(self) -> int:
        return int(self.entries.shape[0])


class MeasurementSet:
    """Positive semidefinite operators that sum to the identity."""

    __slots__ = ("operators",)

    def __init__(self, operators: Sequence[np.ndarray], _validated: bool = False):
        ops = tuple(np.array(op, dtype=float) for op in operators)
        if not ops:
            raise ValueError("measurement needs at least one operator")
        n = ops[0].shape[0]
        for op in ops:
            if op.ndim != 2 or op.shape != (n, n):
                raise ValueError("measurement operators must be square and equally sized")
        if not _validated:
            for i, op in enumerate(ops):
                if np.max(np.abs(op - op.T)) > SYMMETRY_TOL:
                    raise ValueError(f"operator {i} is not symmetric")
                if min(jacobi_eigenvalues(op)) < EIGENVALUE_FLOOR:
                    raise ValueError(f"operator {i} is not positive semidefinite")
        total = sum(ops)
        if np.max(np.abs(total - np.eye(n))) > COMPLETENESS_TOL:
            raise ValueError("measurement operators do not sum to the identity")
        for op in ops:
            op.setflags(write=False)
        self.operators = ops

    @classmethod
    def von_neumann(cls, basis: Sequence[JspsVector] | np.ndarray) -> "MeasurementSet":
        """Rank-one projectors a a^T over an orthonormal basis.

        Orthonormality is checked directly (it already implies the
        operators are positive semidefinite and sum to the identity).
        """
        rows = [
            b.components if isinstance(b, JspsVector) else np.asarray(b, dtype=float)
            for b in basis
        ]
        mat = np.vstack(rows)
        if mat.shape[0] != mat.shape[1]:
            raise ValueError("von Neumann measurement needs a complete basis")
        gram_defect = np.max(np.abs(mat @ mat.T - np.eye(mat.shape[0])))
        if gram_defect > COMPLETENESS_TOL:
            raise ValueError(f"basis is not orthonormal (Gram defect {gram_defect:.3g})")
        return cls([np.outer(r, r) for r in rows], _validated=True)

    @property
    def dimension(self) -> int:
        return int(self.operators[0].shape[0])

    def __len__(self) -> int:
        return len(self.operators)

    def __iter__(self) -> Iterator[np.ndarray]:
        return iter(self.operators)


def measure(rho: DensityMatrix, measurement: MeasurementSet) -> list[float]:
    """Outcome probabilities trace(rho @ m_z) for each operator."""
    if rho.dimension != measurement.dimension:
        raise ValueError(
            f"dimension mismatch: state {rho.dimension}, measurement {measurement.dimension}"
        )
    return [float(np.trace(rho.entries @ op)) for op in measurement]


def sample(psi: JspsVector, seed: int, draws: int) -> list[int]:
    """Draw outcomes with probabilities equal to the squared components.

    Inverse-CDF sampling over the cumulative squared components, driven by
    numpy's PCG64 generator seeded with `seed`, so counts are reproducible
    bit-for-bit on a given platform.  Returns per-outcome counts summing
    to `draws`.
    """
    if draws < 1:
        raise ValueError(f"number of draws must be >= 1, got {draws}")
    cumulative = np.cumsum(psi.probabilities())
    cumulative[-1] = 1.0
    rng = np.random.Generator(np.random.PCG64(seed))
    outcomes = np.searchsorted(cumulative, rng.random(draws), side="right")
    return [int(c) for c in np.bincount(outcomes, minlength=psi.size)]


def parse_matrix(text: str) -> np.ndarray:
    """Parse the matrix text format: a line "N", then N rows of N decimals."""
    lines = [line for line in (l.strip() for l in text.splitlines()) if line]
    if not lines:
        raise ValueError("empty matrix text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"malformed matrix size line {lines[0]!r}") from None
    if n < 1:
        raise ValueError(f"matrix size must be >= 1, got {n}")
    if len(lines) != n + 1:
        raise ValueError(f"expected {n} matrix rows, got {len(lines) - 1}")
    rows = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n:
            raise ValueError(f"expected {n} entries per row, got {len(tokens)}: {line!r}")
        try:
            rows.append([float(t) for t in tokens])
        except ValueError:
            raise ValueError(f"malformed matrix entry in row {line!r}") from None
    return np.array(rows, dtype=float)


def format_matrix(matrix: np.ndarray) -> str:
    """Inverse of :func:`parse_matrix`; full float precision."""
    a = np.asarray(matrix, dtype=float)
    lines = [str(a.shape[0])]
    lines.extend(" ".join(repr(x) for x in row) for row in a.tolist())
    return "\n".join(lines) + "\n"
