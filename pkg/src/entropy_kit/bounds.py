"""Continuity and stability bounds for the unified entropy family.

Two Fannes-type trace-distance bounds cover the Tsallis case: a low-index
form valid for q in (0, 2] while 2*eps stays below q^(1/(1-q)), and a
high-index form for q > 1.  The unified bound composes these over the two
proven (q, s) regions, with a dimension factor d^(2(q-1)) on the high-q
side for s in [-1, 0].  Evaluating a bound outside its region raises
OutOfValidity instead of returning a number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .entropies import binary_tsallis, q_log
from .errors import DomainError, InvalidIndex, OutOfValidity
from .tolerances import TOL


@dataclass(frozen=True)
class BoundSpec:
    """Inputs of a bound evaluation: indices, dimension, trace distance."""

    q: float
    s: float
    d: int
    eps: float

    def __post_init__(self):
        if not self.q > 0:
            raise InvalidIndex(f"entropic index q must be positive, got {self.q!r}")
        if self.d < 2:
            raise DomainError(f"dimension must be at least 2, got {self.d!r}")
        if not 0.0 <= self.eps <= 1.0:
            raise DomainError(f"trace distance must lie in [0, 1], got {self.eps!r}")


def eta_q(x: float, q: float) -> float:
    """Generalized eta function (x^q - x)/(1 - q); -x ln x at q -> 1."""
    if x < 0:
        raise DomainError(f"eta needs x >= 0, got {x!r}")
    if not q > 0:
        raise InvalidIndex(f"eta needs q > 0, got {q!r}")
    if abs(q - 1.0) < TOL.q_limit:
        return -x * math.log(x) if x > 0 else 0.0
    return (x**q - x) / (1.0 - q)


def low_q_threshold(q: float) -> float:
    """Largest admissible 2*eps for the low-index bound: q^(1/(1-q)).

    Continuous through q = 1 where it equals 1/e.
    """
    if not q > 0:
        raise InvalidIndex(f"threshold needs q > 0, got {q!r}")
    if q == 1.0:
        return math.exp(-1.0)
    return math.exp(math.log1p(q - 1.0) / (1.0 - q))


def fannes_tsallis_low_q(spec: BoundSpec) -> float:
    """Low-index Tsallis continuity bound (2 eps)^q ln_q(d) + eta_q(2 eps).

    Valid for q in (0, 2] while 2*eps <= q^(1/(1-q)); at q = 1 this is the
    classic Fannes form 2 eps ln d - 2 eps ln(2 eps).
    """
    q, eps, d = spec.q, spec.eps, spec.d
    if q > 2:
        raise OutOfValidity(f"low-index bound needs q <= 2, got {q!r}")
    x = 2.0 * eps
    if x > low_q_threshold(q):
        raise OutOfValidity(
            f"2*eps = {x!r} exceeds the monotonicity threshold {low_q_threshold(q)!r}"
        )
    if eps == 0.0:
        return 0.0
    return x**q * q_log(d, q) + eta_q(x, q)


def fannes_tsallis_high_q(spec: BoundSpec) -> float:
    """High-index Tsallis continuity bound eps^q ln_q(d-1) + H_q(eps, 1-eps)."""
    q, eps, d = spec.q, spec.eps, spec.d
    if not q > 1:
        raise InvalidIndex(f"high-index bound needs q > 1, got {q!r}")
    return eps**q * q_log(d - 1, q) + binary_tsallis(eps, q)


def kappa_s(q: float, s: float, d: int) -> float:
    """Dimension factor for the unified bound at q > 1.

    Equals d^(2(q-1)) for s in [-1, 0] and 1 for s >= 1; the strip
    0 < s < 1 (and s < -1) is outside the proven region.
    """
    if not q > 1:
        raise InvalidIndex(f"dimension factor needs q > 1, got {q!r}")
    if d < 2:
        raise DomainError(f"dimension must be at least 2, got {d!r}")
    if -1.0 <= s <= 0.0:
        return float(d) ** (2.0 * (q - 1.0))
    if s >= 1.0:
        return 1.0
    raise OutOfValidity(f"no proven factor for s = {s!r} at q > 1")


def fannes_range(q: float, s: float) -> str | None:
    """Which unified continuity region (q, s) falls in: "low", "high" or None.

    Low: 0 < q < 1 with s <= -1 or 0 <= s <= 1.
    High: q > 1 with -1 <= s <= 0 or s >= 1.
    """
    if 0 < q < 1 and (s <= -1.0 or 0.0 <= s <= 1.0):
        return "low"
    if q > 1 and (-1.0 <= s <= 0.0 or s >= 1.0):
        return "high"
    return None


def unified_fannes_bound(spec: BoundSpec) -> float:
    """Continuity bound for the unified (q, s)-entropy.

    In the low region this is the low-index Tsallis bound (with its
    2*eps threshold); in the high region it is kappa_s times the
    high-index Tsallis bound.  Elsewhere raises OutOfValidity.
    """
    region = fannes_range(spec.q, spec.s)
    if region == "low":
        return fannes_tsallis_low_q(spec)
    if region == "high":
        return kappa_s(spec.q, spec.s, spec.d) * fannes_tsallis_high_q(spec)
    raise OutOfValidity(
        f"no unified continuity bound proven at (q, s) = ({spec.q!r}, {spec.s!r})"
    )


def lipschitz_bound(eps: float, q: float) -> float:
    """Lipschitz-type bound 2 q (q - 1)^(-1) eps, for q >= 1 and s >= 1."""
    if not q > 1:
        raise InvalidIndex(f"Lipschitz bound needs q > 1, got {q!r}")
    if not 0.0 <= eps <= 1.0:
        raise DomainError(f"trace distance must lie in [0, 1], got {eps!r}")
    return 2.0 * q / (q - 1.0) * eps


def max_unified(q: float, s: float, d: int) -> float:
    """Largest unified entropy on a d-dimensional system.

    Attained at the maximally mixed state: (d^((1-q)s) - 1)/((1-q)s),
    which degenerates to ln d at s = 0 or q -> 1, and to 0 at d = 1.
    """
    if not q > 0:
        raise InvalidIndex(f"entropic index q must be positive, got {q!r}")
    if d < 1:
        raise DomainError(f"dimension must be positive, got {d!r}")
    if d == 1:
        return 0.0
    if abs(q - 1.0) < TOL.q_limit or abs(s) < TOL.s_limit:
        return math.log(d)
    x = (1.0 - q) * s
    return math.expm1(x * math.log(d)) / x


def stability_ratio_bound(spec: BoundSpec) -> float:
    """Continuity bound normalized by the maximal entropy.

    This is the Lesche-stability functional F(eps) = bound / max; it
    vanishes at eps = 0 and grows monotonically over the bound's
    validity interval.
    """
    return unified_fannes_bound(spec) / max_unified(spec.q, spec.s, spec.d)


def thermodynamic_ratio_limit(q: float, s: float, eps: float) -> float:
    """d -> infinity limit of the normalized high-region bound, q > 1, s >= 1.

    Equals s (1 - (1 - eps)^q) = s [eps^q + (q - 1) H_q(eps, 1-eps)],
    which stays below s * q * eps.
    """
    if not q > 1:
        raise InvalidIndex(f"thermodynamic limit needs q > 1, got {q!r}")
    if s < 1.0:
        raise OutOfValidity(f"thermodynamic limit proven for s >= 1, got {s!r}")
    if not 0.0 <= eps <= 1.0:
        raise DomainError(f"trace distance must lie in [0, 1], got {eps!r}")
    return s * -math.expm1(q * math.log1p(-eps)) if eps < 1.0 else s
