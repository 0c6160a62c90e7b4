"""Oracle cross-checks of the optimized routines at desk scale.

Each ``check_*`` function returns one or more :class:`OracleReport` objects.
``run_suite`` bundles them for the ``verify`` command; the acceptance tests
call the same functions with their own instance counts.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .code import (
    MixedCode,
    dual,
    format_mixed_matrix,
    intersection,
    is_weakly_free,
    random_weakly_free_code,
    sum_codes,
)
from .group import (
    GroupSpec,
    enumerate_group_codes,
    split_separable,
    verify_equivalence_theorem,
)
from .lcp import is_lcp, random_weakly_free_pair
from .oracle import OracleReport, oracle_codes_equal, oracle_direct_sum, oracle_dual
from .ring import ChainRingSpec, gamma_digits, teichmuller_set

__all__ = [
    "DESK_SPECS",
    "DeskShape",
    "random_shape",
    "check_ring_maps",
    "check_lcp_agreement",
    "check_duality",
    "check_lcp_structure",
    "check_group_theorem",
    "run_suite",
]

MAX_LOG_AMBIENT = 14


@dataclass(frozen=True)
class DeskShape:
    """Block-length limits for one ring, capped by s*alpha + r*beta <= 14."""

    spec: ChainRingSpec
    max_alpha: int
    max_beta: int

    def shapes(self) -> list[tuple[int, int]]:
        s, r = self.spec.s, self.spec.r
        return [
            (a, b)
            for a in range(self.max_alpha + 1)
            for b in range(self.max_beta + 1)
            if a + b > 0 and s * a + r * b <= MAX_LOG_AMBIENT
        ]


DESK_SPECS = (
    DeskShape(ChainRingSpec(2, 2, 1), 3, 2),
    DeskShape(ChainRingSpec(2, 3, 2), 2, 2),
    DeskShape(ChainRingSpec(3, 2, 1), 2, 2),
)


def random_shape(desk: DeskShape, rng: np.random.Generator) -> tuple[int, int]:
    shapes = desk.shapes()
    return shapes[int(rng.integers(len(shapes)))]


def _describe(*codes: MixedCode) -> str:
    C = codes[0]
    parts = [f"{C.spec} alpha={C.alpha} beta={C.beta}"]
    for X in codes:
        parts.append("[" + format_mixed_matrix(X.standard_rows, X.alpha).replace("\n", "; ") + "]")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# ring maps


def check_ring_maps(specs=None) -> list[OracleReport]:
    """Exhaustive checks of pi, iota, chi, psi and Teichmuller digits."""
    specs = [d.spec for d in DESK_SPECS] if specs is None else specs
    names = [
        "pi o iota = id",
        "p^(s-r) iota(pi(x)) = p^(s-r) x",
        "psi o chi = id",
        "chi(pi(uv)) = chi(pi(u)) iota(pi(v))",
        "Teichmuller digit reconstruction",
    ]
    reports = [OracleReport(n) for n in names]
    for spec in specs:
        q, qb, step = spec.modulus, spec.bar_modulus, spec.p**spec.gap
        xs = np.arange(q, dtype=spec.dtype)
        ys = np.arange(qb, dtype=spec.dtype)
        for y, back in zip(ys, spec.pi(spec.iota(ys))):
            reports[0].record(back == y, lambda y=y: f"{spec}: y={y}")
        lhs = (step * spec.iota(spec.pi(xs))) % q
        for x, a, b in zip(xs, lhs, (step * xs) % q):
            reports[1].record(a == b, lambda x=x: f"{spec}: x={x}")
        for y, back in zip(ys, spec.psi(spec.chi(ys))):
            reports[2].record(back == y, lambda y=y: f"{spec}: y={y}")
        u, v = np.meshgrid(xs, xs, indexing="ij")
        lhs = spec.chi(spec.pi((u * v) % q))
        rhs = (spec.chi(spec.pi(u)) * spec.iota(spec.pi(v))) % q
        for a, b, uu, vv in zip(lhs.flat, rhs.flat, u.flat, v.flat):
            reports[3].record(a == b, lambda uu=uu, vv=vv: f"{spec}: u={uu}, v={vv}")
        gamma = {g.value for g in teichmuller_set(spec)}
        for x in range(q):
            digits = [d.value for d in gamma_digits(spec.R(x))]
            total = sum(d * spec.p**t for t, d in enumerate(digits)) % q
            ok = total == x and all(d in gamma for d in digits)
            reports[4].record(ok, lambda x=x, d=digits: f"{spec}: x={x}, digits={d}")
    return reports


# ---------------------------------------------------------------------------
# LCP decision vs. brute force


@dataclass
class LcpAgreement:
    report: OracleReport
    pairs: list[tuple[MixedCode, MixedCode]] = field(default_factory=list)
    positives: int = 0


def check_lcp_agreement(desk: DeskShape, instances: int, seed: int) -> LcpAgreement:
    """is_lcp against oracle_direct_sum on seeded random weakly-free pairs."""
    rng = np.random.default_rng(seed)
    out = LcpAgreement(OracleReport(f"is_lcp = oracle_direct_sum over {desk.spec}"))
    for _ in range(instances):
        alpha, beta = random_shape(desk, rng)
        C, D = random_weakly_free_pair(desk.spec, alpha, beta, rng)
        fast = bool(is_lcp(C, D))
        slow = oracle_direct_sum(C, D)
        out.report.record(fast == slow, lambda: f"is_lcp={fast} oracle={slow} " + _describe(C, D))
        if slow:
            out.positives += 1
            out.pairs.append((C, D))
    return out


# ---------------------------------------------------------------------------
# duality


def check_duality(desk: DeskShape, instances: int, seed: int) -> list[OracleReport]:
    spec = desk.spec
    rng = np.random.default_rng(seed)
    reports = [
        OracleReport(f"dim C + dim C-perp = s alpha + r beta over {spec}"),
        OracleReport(f"(C-perp)-perp = C over {spec}"),
        OracleReport(f"(C + D)-perp = C-perp n D-perp over {spec}"),
        OracleReport(f"dual = oracle_dual over {spec}"),
    ]
    for _ in range(instances):
        alpha, beta = random_shape(desk, rng)
        C = random_weakly_free_code(spec, alpha, beta, rng)
        D = random_weakly_free_code(spec, alpha, beta, rng)
        Cp = dual(C)
        reports[0].record(
            C.dimension + Cp.dimension == C.ambient_dimension, lambda: _describe(C)
        )
        reports[1].record(dual(Cp) == C, lambda: _describe(C))
        lhs = dual(sum_codes(C, D))
        rhs = intersection(Cp, dual(D))
        reports[2].record(oracle_codes_equal(lhs, rhs), lambda: _describe(C, D))
        reports[3].record(oracle_codes_equal(Cp, oracle_dual(C)), lambda: _describe(C))
    return reports


# ---------------------------------------------------------------------------
# structure of LCP pairs


def check_lcp_structure(pairs) -> list[OracleReport]:
    reports = [
        OracleReport("duals of an LCP form an LCP"),
        OracleReport("dim D-perp = dim C for an LCP"),
        OracleReport("both members of an LCP are weakly-free"),
    ]
    for C, D in pairs:
        Cp, Dp = dual(C), dual(D)
        reports[0].record(bool(is_lcp(Cp, Dp)) and oracle_direct_sum(Cp, Dp), lambda: _describe(C, D))
        reports[1].record(Dp.dimension == C.dimension, lambda: _describe(C, D))
        reports[2].record(is_weakly_free(C) and is_weakly_free(D), lambda: _describe(C, D))
    return reports


# ---------------------------------------------------------------------------
# product group codes


@dataclass
class GroupTheoremResult:
    split: OracleReport
    equivalence: OracleReport
    submodules: int
    group_codes: int
    lcp_pairs: int

    def summary(self) -> str:
        return (
            f"{self.submodules} submodules, {self.group_codes} group codes, "
            f"{self.lcp_pairs} LCP pairs"
        )


def check_group_theorem(spec: ChainRingSpec, H: GroupSpec, K: GroupSpec) -> GroupTheoremResult:
    """Product split of every group code and C ~ D-perp for every LCP pair."""
    codes, n_sub = enumerate_group_codes(spec, H, K)
    split = OracleReport(f"group codes split as C1 x C2 over {spec}[{H}] x [{K}]")
    equiv = OracleReport(f"LCP group codes: C equivalent to D-perp over {spec}[{H}] x [{K}]")
    for C in codes:
        try:
            split_separable(C, H, K)
            ok = True
        except AssertionError:
            ok = False
        split.record(ok, lambda C=C: _describe(C))
    n_lcp = 0
    for C, D in itertools.product(codes, repeat=2):
        if not is_lcp(C, D):
            continue
        n_lcp += 1
        witness = verify_equivalence_theorem(C, D, H, K)
        equiv.record(witness is not None, lambda C=C, D=D: _describe(C, D))
    return GroupTheoremResult(split, equiv, n_sub, len(codes), n_lcp)


# ---------------------------------------------------------------------------


def run_suite(instances: int = 50, seed: int = 0) -> list[OracleReport]:
    """Every oracle comparison, ``instances`` random cases per ring."""
    reports = check_ring_maps()
    pairs = []
    for i, desk in enumerate(DESK_SPECS):
        agreement = check_lcp_agreement(desk, instances, seed + i)
        reports.append(agreement.report)
        pairs += agreement.pairs
        reports += check_duality(desk, instances, seed + 100 + i)
    reports += check_lcp_structure(pairs)
    g = check_group_theorem(ChainRingSpec(2, 2, 1), GroupSpec.cyclic(2), GroupSpec.cyclic(2))
    reports += [g.split, g.equivalence]
    return reports
