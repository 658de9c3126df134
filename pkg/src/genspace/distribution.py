"""Exact rational distributions and their generic-space form.

A finite distribution whose probabilities are reduced fractions n_i/d_i can
be rewritten over the common denominator D = lcm(d_1, ..., d_N) as counts
N_i = n_i * D / d_i with sum(N_i) = D.  D is the smallest uniform sample
space that collapses onto the observed distribution when the N_i outcomes
of each group are merged into one indistinguishable outcome; we call D the
generic dimension and the pair (D, counts) the generic space.

Everything here is exact: probabilities are `fractions.Fraction`, counts
and dimensions are arbitrary-precision integers, and no operation rounds.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

__all__ = [
    "ExactDistribution",
    "GenericSpace",
    "parse_distribution",
    "format_distribution",
    "generic_space",
    "collapse",
    "tensor_product",
]

_TOKEN_RE = re.compile(r"^(\d+)(?:/(\d+))?$")


class ExactDistribution:
    """An ordered list of strictly positive rationals that sum to exactly 1.

    Input order defines outcome identity; entries are stored reduced but
    never sorted or deduplicated.
    """

    __slots__ = ("probs",)

    def __init__(self, probs: Iterable[Fraction | int]):
        entries = tuple(Fraction(p) for p in probs)
        if not entries:
            raise ValueError("distribution needs at least one outcome")
        for i, p in enumerate(entries):
            if p <= 0:
                raise ValueError(f"probability at index {i} is {p}; all must be > 0")
        total = sum(entries)
        if total != 1:
            raise ValueError(f"probabilities sum to {total}, expected 1")
        self.probs = entries

    @property
    def size(self) -> int:
        """Number of outcomes in the measurement space."""
        return len(self.probs)

    def __len__(self) -> int:
        return len(self.probs)

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.probs)

    def __getitem__(self, index: int) -> Fraction:
        return self.probs[index]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactDistribution):
            return NotImplemented
        return self.probs == other.probs

    def __hash__(self) -> int:
        return hash(self.probs)

    def __repr__(self) -> str:
        return f"ExactDistribution({format_distribution(self)!r})"


@dataclass(frozen=True)
class GenericSpace:
    """A uniform space of `dimension` outcomes grouped into blocks of `counts`.

    Collapsing block i onto a single outcome yields probability
    counts[i] / dimension.  `labels`, when given, name the collapsed
    outcomes (one label per count).
    """

    dimension: int
    counts: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if self.dimension < 1:
            raise ValueError(f"dimension must be >= 1, got {self.dimension}")
        if not self.counts:
            raise ValueError("counts must be non-empty")
        for i, c in enumerate(self.counts):
            if c < 1:
                raise ValueError(f"count at index {i} is {c}; all must be >= 1")
        if sum(self.counts) != self.dimension:
            raise ValueError(
                f"counts sum to {sum(self.counts)} but dimension is {self.dimension}"
            )
        if self.labels is not None and len(self.labels) != len(self.counts):
            raise ValueError("labels must match counts one-to-one")

    @property
    def size(self) -> int:
        """Number of outcomes in the measurement space."""
        return len(self.counts)


def parse_distribution(text: str) -> ExactDistribution:
    """Parse whitespace-separated "n/d" (or integer "n") tokens.

    A '#' starts a comment that runs to the end of the line.
    """
    tokens: list[str] = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        tokens.extend(body.split())
    probs: list[Fraction] = []
    for token in tokens:
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ValueError(f"malformed probability token {token!r}")
        num = int(m.group(1))
        den = int(m.group(2)) if m.group(2) is not None else 1
        if den == 0:
            raise ValueError(f"malformed probability token {token!r} (zero denominator)")
        if num == 0:
            raise ValueError(f"zero probability token {token!r}")
        probs.append(Fraction(num, den))
    return ExactDistribution(probs)


def format_distribution(dist: ExactDistribution) -> str:
    """Canonical one-line form: reduced "n/d" tokens, single-space separated."""
    return " ".join(f"{p.numerator}/{p.denominator}" for p in dist.probs)


def generic_space(dist: ExactDistribution) -> GenericSpace:
    """Build the minimal generic space of a distribution.

    The dimension is the lcm of the reduced denominators, which makes it
    the smallest D for which every D * p_i is an integer; the counts are
    then coprime as a set.
    """
    dimension = math.lcm(*(p.denominator for p in dist.probs))
    counts = tuple(p.numerator * (dimension // p.denominator) for p in dist.probs)
    return GenericSpace(dimension, counts)


def collapse(dimension: int, counts: Sequence[int]) -> ExactDistribution:
    """Merge each block of a uniform `dimension`-outcome space into one outcome.

    Returns the distribution with p_i = counts[i] / dimension.  Inverse of
    :func:`generic_space` whenever the counts are setwise coprime.
    """
    space = GenericSpace(dimension, tuple(counts))
    return ExactDistribution(Fraction(c, space.dimension) for c in space.counts)


def tensor_product(p: ExactDistribution, q: ExactDistribution) -> ExactDistribution:
    """Joint distribution of two independent variables, row-major order."""
    return ExactDistribution(pi * qj for pi in p.probs for qj in q.probs)
