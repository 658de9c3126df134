"""Combinatorial volumes and the entropy family they induce.

For a generic space (D, counts) the volume of the absolutely typical
ensemble is V_info = prod(N_i ** N_i) and the volume of the generic
uniform distribution is V_uinfo = D ** D.  Their ratio R = V_uinfo/V_info
is a pure number >= 1, and (1/D) * log2(R) reproduces the Shannon entropy
of the collapsed distribution, so R ** (1/D) = 2 ** H acts as the
effective dimension: the size of a uniform distribution with equal
uncertainty.

All quantities are evaluated from exact rationals and converted to float
only inside the final logarithm or multiplication, so the direct-formula
and volume-ratio routes agree to ~1e-12 at any dimension the exact path
can reach.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .distribution import ExactDistribution, GenericSpace, generic_space

__all__ = [
    "VolumeReport",
    "EntropySuite",
    "combinatorial_volumes",
    "shannon_entropy",
    "shannon_via_ratio",
    "effective_dimension",
    "renyi_entropy",
    "tsallis_entropy",
    "projection_ratio",
    "projection_entropy",
    "entropy_suite",
]

#: Above this generic dimension the exact big-integer volumes are skipped
#: and only the log-domain values are reported.
DEFAULT_EXACT_LIMIT = 512


def _log2_fraction(value: Fraction) -> float:
    # Robust for numerators/denominators far outside float range.
    return math.log2(value.numerator) - math.log2(value.denominator)


def _check_base(base: int) -> None:
    if not isinstance(base, int) or base < 2:
        raise ValueError(f"logarithm base must be an integer >= 2, got {base!r}")


@dataclass(frozen=True)
class VolumeReport:
    """Exact and log-domain combinatorial volumes of a generic space.

    `v_info`, `v_uinfo` and `ratio` are present only when the exact path
    ran (`exact_computed`); the log2 fields are always filled in.
    """

    v_info: int | None
    v_uinfo: int | None
    log2_v_info: float
    log2_v_uinfo: float
    ratio: Fraction | None
    log2_ratio: float
    exact_computed: bool


@dataclass(frozen=True)
class EntropySuite:
    """Bundle of the entropy quantities for one distribution.

    `renyi` and `tsallis` are (order, value) pairs when requested.
    Invariants: 0 <= shannon <= log_b(N) and 1 <= effective_dimension <= N.
    """

    shannon: float
    shannon_via_ratio: float
    effective_dimension: float
    projection: float
    base: int
    renyi: tuple[float, float] | None = None
    tsallis: tuple[float, float] | None = None


def combinatorial_volumes(
    space: GenericSpace, exact_limit: int = DEFAULT_EXACT_LIMIT
) -> VolumeReport:
    """Compute V_info = prod(N_i^N_i) and V_uinfo = D^D for a generic space.

    The exact big-integer values (and their exact ratio) are produced when
    the dimension does not exceed `exact_limit`; log-domain values are
    computed unconditionally as sum(N_i * log2 N_i) and D * log2 D.
    """
    d = space.dimension
    log2_v_info = sum(c * math.log2(c) for c in space.counts)
    log2_v_uinfo = d * math.log2(d)
    exact = d <= exact_limit
    if exact:
        v_info = math.prod(c**c for c in space.counts)
        v_uinfo = d**d
        ratio = Fraction(v_uinfo, v_info)
    else:
        v_info = v_uinfo = ratio = None
    return VolumeReport(
        v_info=v_info,
        v_uinfo=v_uinfo,
        log2_v_info=log2_v_info,
        log2_v_uinfo=log2_v_uinfo,
        ratio=ratio,
        log2_ratio=log2_v_uinfo - log2_v_info,
        exact_computed=exact,
    )


def shannon_entropy(dist: ExactDistribution, base: int = 2) -> float:
    """-sum(p_i log_b p_i), each term evaluated from the exact rational p_i."""
    _check_base(base)
    bits = -sum(float(p) * _log2_fraction(p) for p in dist.probs)
    return bits / math.log2(base)


def shannon_via_ratio(space: GenericSpace, base: int = 2) -> float:
    """Entropy as (1/D) * log_b of the volume ratio, in the log domain.

    Equals (D log_b D - sum(N_i log_b N_i)) / D, which matches
    :func:`shannon_entropy` of the collapsed distribution to ~1e-12.
    """
    _check_base(base)
    d = space.dimension
    bits = d * math.log2(d) - sum(c * math.log2(c) for c in space.counts)
    return bits / (d * math.log2(base))


def effective_dimension(dist: ExactDistribution) -> float:
    """R^(1/D) computed as 2^H: the size of an equally uncertain uniform.

    Base-independent because R is a pure ratio; ranges from 1 (certainty)
    to N (uniform).
    """
    return 2.0 ** shannon_entropy(dist, 2)


def renyi_entropy(dist: ExactDistribution, order: float, base: int = 2) -> float:
    """(1 - r)^-1 * log_b(sum p_i^r) for r > 0, r != 1."""
    _check_base(base)
    if order <= 0 or order == 1:
        raise ValueError(f"Renyi order must be > 0 and != 1, got {order}")
    power_sum = sum(float(p) ** order for p in dist.probs)
    return math.log2(power_sum) / ((1.0 - order) * math.log2(base))


def tsallis_entropy(dist: ExactDistribution, order: float) -> float:
    """(q - 1)^-1 * (1 - sum p_i^q) for q > 0, q != 1.

    Not of logarithmic form, so there is no base; the q -> 1 limit is the
    natural-log Shannon entropy.
    """
    if order <= 0 or order == 1:
        raise ValueError(f"Tsallis order must be > 0 and != 1, got {order}")
    power_sum = sum(float(p) ** order for p in dist.probs)
    return (1.0 - power_sum) / (order - 1.0)


def projection_ratio(dist: ExactDistribution) -> Fraction:
    """Exact product of all probabilities.

    Equals prod(N_i) / D^N: the volume of the hypercuboid with edges N_i
    relative to the hypercube of edge D in the N-dimensional space.
    """
    return math.prod(dist.probs, start=Fraction(1))


def projection_entropy(dist: ExactDistribution, base: int = 2) -> float:
    """log_b(N^2 * prod(p_i)^(1/N)), an entropy measure in measurement space.

    Cheaper than the Shannon entropy and shares its uniform-maximum,
    additivity and grouping behaviour, but can go negative when some
    outcome is very unlikely.
    """
    _check_base(base)
    n = dist.size
    bits = 2.0 * math.log2(n) + _log2_fraction(projection_ratio(dist)) / n
    return bits / math.log2(base)


def entropy_suite(
    dist: ExactDistribution,
    base: int = 2,
    renyi_order: float | None = None,
    tsallis_order: float | None = None,
) -> EntropySuite:
    """Evaluate the whole entropy family for one distribution."""
    space = generic_space(dist)
    renyi = None
    if renyi_order is not None:
        renyi = (renyi_order, renyi_entropy(dist, renyi_order, base))
    tsallis = None
    if tsallis_order is not None:
        tsallis = (tsallis_order, tsallis_entropy(dist, tsallis_order))
    return EntropySuite(
        shannon=shannon_entropy(dist, base),
        shannon_via_ratio=shannon_via_ratio(space, base),
        effective_dimension=effective_dimension(dist),
        projection=projection_entropy(dist, base),
        base=base,
        renyi=renyi,
        tsallis=tsallis,
    )
