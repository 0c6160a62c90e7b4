"""Linear complementary pairs of mixed codes.

{C, D} is an LCP when C n D = 0 and C + D is the whole ambient space.  For
weakly-free codes this is decided without enumeration: stack the standard
generator rows of C over those of D, lift the Rbar block with iota, and ask
for a square matrix that is invertible over R, together with
dim C + dim D = s*alpha + r*beta.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .code import (
    DEFAULT_ENUM_BUDGET,
    MixedCode,
    _same_ambient,
    dual,
    iota_rows,
    min_distance,
    random_weakly_free_code,
)
from .matrix import RingMatrix, is_nonsingular
from .oracle import oracle_direct_sum
from .ring import ChainRingSpec

__all__ = [
    "LcpVerdict",
    "LcpResult",
    "is_lcp",
    "is_lcp_oracle",
    "security_parameter",
    "random_weakly_free_pair",
    "lcp_search",
]

REASONS = ("nonsquare_stack", "singular_iota_G", "dimension_mismatch", "ok")


@dataclass(frozen=True)
class LcpVerdict:
    is_lcp: bool
    reason: str
    stacked_dim: int
    ambient_dim: int

    def __bool__(self) -> bool:
        return self.is_lcp


def stacked_iota_matrix(C: MixedCode, D: MixedCode) -> RingMatrix:
    G = np.vstack([C.standard_rows, D.standard_rows])
    return RingMatrix(C.spec, iota_rows(C.spec, C.alpha, G).reshape(len(G), C.length))


def is_lcp(C: MixedCode, D: MixedCode) -> LcpVerdict:
    _same_ambient(C, D)
    stacked = C.dimension + D.dimension
    ambient = C.ambient_dimension
    G = stacked_iota_matrix(C, D)
    if G.rows != G.cols:
        reason = "nonsquare_stack"
    elif not is_nonsingular(G):
        reason = "singular_iota_G"
    elif stacked != ambient:
        reason = "dimension_mismatch"
    else:
        reason = "ok"
    return LcpVerdict(reason == "ok", reason, stacked, ambient)


def is_lcp_oracle(C: MixedCode, D: MixedCode, budget: int = 2**22) -> bool:
    """Brute-force LCP test straight from the definition."""
    return oracle_direct_sum(C, D, budget=budget)


def security_parameter(C: MixedCode, D: MixedCode, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """min(d(C), d(D-perp)) for an LCP pair."""
    if not is_lcp(C, D):
        raise ValueError("security parameter defined for LCP pairs")
    return min(min_distance(C, budget), min_distance(dual(D), budget))


def random_weakly_free_pair(
    spec: ChainRingSpec, alpha: int, beta: int, rng: np.random.Generator
) -> tuple[MixedCode, MixedCode]:
    """Two random weakly-free codes; half the time with complementary types."""
    C = random_weakly_free_code(spec, alpha, beta, rng)
    if rng.random() < 0.5:
        t = C.code_type
        D = random_weakly_free_code(spec, alpha, beta, rng, mu=alpha - t.mu, rho=beta - t.rho)
    else:
        D = random_weakly_free_code(spec, alpha, beta, rng)
    return C, D


@dataclass(frozen=True)
class LcpResult:
    code: MixedCode
    partner: MixedCode
    security: int

    def sort_key(self):
        return (
            -self.security,
            self.code.dimension,
            tuple(int(x) for x in self.code.standard_rows.flat),
            tuple(int(x) for x in self.partner.standard_rows.flat),
        )


def lcp_search(
    spec: ChainRingSpec,
    alpha: int,
    beta: int,
    budget: int,
    seed: int,
    enum_budget: int = DEFAULT_ENUM_BUDGET,
) -> list[LcpResult]:
    """Sample ``budget`` random weakly-free pairs and keep the LCPs.

    Results are sorted by security parameter (descending), then by the
    dimension of the first code, then by generator rows.  Pairs that occur
    more than once are reported once; pairs with a zero member are skipped.
    """
    rng = np.random.default_rng(seed)
    found: dict[tuple, LcpResult] = {}
    for _ in range(budget):
        C, D = random_weakly_free_pair(spec, alpha, beta, rng)
        if C.dimension == 0 or D.dimension == 0 or not is_lcp(C, D):
            continue
        res = LcpResult(C.minimal(), D.minimal(), security_parameter(C, D, enum_budget))
        found.setdefault(res.sort_key(), res)
    return [found[k] for k in sorted(found)]
