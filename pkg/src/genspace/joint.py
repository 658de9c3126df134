"""Exact two-variable joints: marginals, conditional entropy, mutual information.

Cells are exact rationals; zero cells are allowed (0 log 0 counts as 0)
as long as every row and column keeps positive mass, so the marginals are
always valid distributions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .distribution import ExactDistribution
from .entropy import _check_base, _log2_fraction, shannon_entropy

__all__ = [
    "JointDistribution",
    "InequalityReport",
    "product_joint",
    "marginals",
    "joint_entropy",
    "conditional_entropy",
    "mutual_information",
    "check_inequalities",
    "parse_joint",
    "format_joint",
]


class JointDistribution:
    """An R x C matrix of non-negative rationals summing to exactly 1."""

    __slots__ = ("cells",)

    def __init__(self, cells: Iterable[Iterable[Fraction | int]]):
        rows = tuple(tuple(Fraction(c) for c in row) for row in cells)
        if not rows or not rows[0]:
            raise ValueError("joint distribution must have at least one cell")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise ValueError("all rows must have the same number of cells")
        for r, row in enumerate(rows):
            for c, cell in enumerate(row):
                if cell < 0:
                    raise ValueError(f"cell ({r},{c}) is negative: {cell}")
        total = sum(sum(row) for row in rows)
        if total != 1:
            raise ValueError(f"cells sum to {total}, expected 1")
        for r, row in enumerate(rows):
            if sum(row) == 0:
                raise ValueError(f"row {r} has zero mass")
        for c in range(width):
            if sum(row[c] for row in rows) == 0:
                raise ValueError(f"column {c} has zero mass")
        self.cells = rows

    @property
    def rows(self) -> int:
        return len(self.cells)

    @property
    def cols(self) -> int:
        return len(self.cells[0])

    def transpose(self) -> "JointDistribution":
        return JointDistribution(zip(*self.cells))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, JointDistribution):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self) -> int:
        return hash(self.cells)


def product_joint(px: ExactDistribution, py: ExactDistribution) -> JointDistribution:
    """The independent joint with cells p_i * q_j."""
    return JointDistribution((pi * qj for qj in py.probs) for pi in px.probs)


def marginals(joint: JointDistribution) -> tuple[ExactDistribution, ExactDistribution]:
    """Exact row-sum (X) and column-sum (Y) distributions."""
    x = ExactDistribution(sum(row) for row in joint.cells)
    y = ExactDistribution(
        sum(row[c] for row in joint.cells) for c in range(joint.cols)
    )
    return x, y


def joint_entropy(joint: JointDistribution, base: int = 2) -> float:
    """H(X, Y) over the cells, with zero cells contributing zero."""
    _check_base(base)
    bits = -sum(
        float(cell) * _log2_fraction(cell)
        for row in joint.cells
        for cell in row
        if cell > 0
    )
    return bits / math.log2(base)


def conditional_entropy(joint: JointDistribution, base: int = 2) -> float:
    """H(X | Y) = H(X, Y) - H(Y)."""
    _, y = marginals(joint)
    return joint_entropy(joint, base) - shannon_entropy(y, base)


def mutual_information(joint: JointDistribution, base: int = 2) -> float:
    """I(X; Y) = H(X) - H(X | Y)."""
    x, _ = marginals(joint)
    return shannon_entropy(x, base) - conditional_entropy(joint, base)


@dataclass(frozen=True)
class InequalityReport:
    """Entropy quantities of a joint and the elementary inequality verdicts."""

    h_x: float
    h_y: float
    h_joint: float
    h_x_given_y: float
    h_y_given_x: float
    mi_xy: float
    mi_yx: float
    independent: bool
    conditioning_reduces_entropy: bool
    mi_nonnegative: bool
    mi_symmetric: bool
    independence_consistent: bool

    @property
    def all_pass(self) -> bool:
        return (
            self.conditioning_reduces_entropy
            and self.mi_nonnegative
            and self.mi_symmetric
            and self.independence_consistent
        )


def check_inequalities(joint: JointDistribution) -> InequalityReport:
    """Verify H(X) >= H(X|Y), I >= 0, and I(X;Y) = I(Y;X) on one joint.

    Independence is decided exactly: every cell equals the product of its
    marginals as rationals.  Both information orders are computed through
    separate conditional entropies rather than by symmetry.
    """
    x, y = marginals(joint)
    h_x = shannon_entropy(x, 2)
    h_y = shannon_entropy(y, 2)
    h_xy = joint_entropy(joint, 2)
    h_x_given_y = conditional_entropy(joint, 2)
    h_y_given_x = conditional_entropy(joint.transpose(), 2)
    mi_xy = h_x - h_x_given_y
    mi_yx = h_y - h_y_given_x
    independent = all(
        cell == x.probs[r] * y.probs[c]
        for r, row in enumerate(joint.cells)
        for c, cell in enumerate(row)
    )
    return InequalityReport(
        h_x=h_x,
        h_y=h_y,
        h_joint=h_xy,
        h_x_given_y=h_x_given_y,
        h_y_given_x=h_y_given_x,
        mi_xy=mi_xy,
        mi_yx=mi_yx,
        independent=independent,
        conditioning_reduces_entropy=h_x >= h_x_given_y - 1e-12,
        mi_nonnegative=mi_xy >= -1e-12,
        mi_symmetric=abs(mi_xy - mi_yx) <= 1e-12,
        independence_consistent=(not independent) or mi_xy <= 1e-12,
    )


def _rational_token(token: str) -> Fraction:
    parts = token.split("/")
    try:
        if len(parts) == 1:
            return Fraction(int(parts[0]))
        if len(parts) == 2:
            return Fraction(int(parts[0]), int(parts[1]))
    except (ValueError, ZeroDivisionError):
        pass
    raise ValueError(f"malformed rational token {token!r}")


def parse_joint(text: str) -> JointDistribution:
    """Parse the joint file format: a "R C" line, then R rows of C rationals.

    '#' comments run to end of line; blank lines are skipped.
    """
    lines = []
    for raw in text.splitlines():
        body = raw.split("#", 1)[0].strip()
        if body:
            lines.append(body)
    if not lines:
        raise ValueError("empty joint file")
    header = lines[0].split()
    if len(header) != 2:
        raise ValueError(f"expected header 'R C', got {lines[0]!r}")
    try:
        n_rows, n_cols = int(header[0]), int(header[1])
    except ValueError:
        raise ValueError(f"malformed header {lines[0]!r}") from None
    if len(lines) != n_rows + 1:
        raise ValueError(f"expected {n_rows} joint rows, got {len(lines) - 1}")
    cells = []
    for line in lines[1:]:
        tokens = line.split()
        if len(tokens) != n_cols:
            raise ValueError(f"expected {n_cols} cells per row, got {len(tokens)}: {line!r}")
        cells.append([_rational_token(t) for t in tokens])
    return JointDistribution(cells)


def format_joint(joint: JointDistribution) -> str:
    """Inverse of :func:`parse_joint`."""
    lines = [f"{joint.rows} {joint.cols}"]
    lines.extend(
        " ".join(f"{c.numerator}/{c.denominator}" for c in row) for row in joint.cells
    )
    return "\n".join(lines) + "\n"
