"""Brute-force reference computations.

Everything here works from the raw definitions by exhaustive enumeration
and only relies on scalar ring arithmetic.  Spans are additive closures
(over Z_{p^s} an R-submodule is just a subgroup), the dual is a scan of the
whole ambient space, and direct sums are checked by counting.  Slow by
design; meant for ambient spaces of at most a few million vectors.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .ring import ChainRingSpec

__all__ = [
    "OracleReport",
    "OracleBudgetError",
    "encode",
    "decode",
    "ambient_words",
    "oracle_span",
    "oracle_inner",
    "oracle_dual_words",
    "oracle_dual",
    "oracle_direct_sum",
    "oracle_codes_equal",
]

DEFAULT_ORACLE_BUDGET = 2**22


class OracleBudgetError(RuntimeError):
    pass


@dataclass
class OracleReport:
    checked: str
    instances: int = 0
    failures: int = 0
    first_failure: str | None = None

    def record(self, ok: bool, detail=None) -> None:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.first_failure is None:
                self.first_failure = detail() if callable(detail) else str(detail)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f"  first failure: {self.first_failure}" if self.first_failure else ""
        return f"{status} {self.checked}: {self.instances} instances, {self.failures} failures{tail}"


def _radices(spec: ChainRingSpec, alpha: int, beta: int) -> list[int]:
    return [spec.modulus] * alpha + [spec.bar_modulus] * beta


def _ambient_size(spec, alpha, beta) -> int:
    return spec.modulus**alpha * spec.bar_modulus**beta


def encode(spec: ChainRingSpec, alpha: int, beta: int, words: np.ndarray) -> np.ndarray:
    """Mixed-radix integer code of each row (first column most significant)."""
    dt = np.int64 if _ambient_size(spec, alpha, beta) < 2**62 else object
    words = np.asarray(words, dtype=dt).reshape(-1, alpha + beta)
    out = np.zeros(len(words), dtype=dt)
    for j, m in enumerate(_radices(spec, alpha, beta)):
        out = out * m + words[:, j] % m
    return out


def decode(spec: ChainRingSpec, alpha: int, beta: int, codes) -> np.ndarray:
    codes = np.array(codes, dtype=object).reshape(-1)
    radices = _radices(spec, alpha, beta)
    out = np.zeros((len(codes), len(radices)), dtype=object)
    for j in reversed(range(len(radices))):
        out[:, j] = codes % radices[j]
        codes = codes // radices[j]
    return out.astype(spec.dtype)


def ambient_words(spec, alpha, beta, budget: int = DEFAULT_ORACLE_BUDGET) -> np.ndarray:
    size = _ambient_size(spec, alpha, beta)
    if size > budget:
        raise OracleBudgetError(f"ambient of size {size} exceeds oracle budget {budget}")
    ranges = [np.arange(m, dtype=spec.dtype) for m in _radices(spec, alpha, beta)]
    if not ranges:
        return np.zeros((1, 0), dtype=spec.dtype)
    grids = np.meshgrid(*ranges, indexing="ij")
    return np.stack([g.reshape(-1) for g in grids], axis=1)


def _reduce(spec, alpha, words):
    words = np.array(words, dtype=spec.dtype)
    words[:, :alpha] %= spec.modulus
    words[:, alpha:] %= spec.bar_modulus
    return words


def oracle_span(spec, alpha, beta, generators, budget: int = DEFAULT_ORACLE_BUDGET) -> np.ndarray:
    """All Z-linear (hence R-linear) combinations of ``generators``."""
    n = alpha + beta
    span = np.zeros((1, n), dtype=spec.dtype)
    for g in np.asarray(generators, dtype=spec.dtype).reshape(-1, n):
        multiples = [np.zeros(n, dtype=spec.dtype)]
        while True:
            nxt = _reduce(spec, alpha, (multiples[-1] + g)[None, :])[0]
            if not nxt.any():
                break
            multiples.append(nxt)
        mult = np.array(multiples)
        combined = _reduce(spec, alpha, (span[:, None, :] + mult[None, :, :]).reshape(-1, n))
        _, first = np.unique(encode(spec, alpha, beta, combined), return_index=True)
        span = combined[np.sort(first)]
        if len(span) > budget:
            raise OracleBudgetError(f"span exceeds oracle budget {budget}")
    return span


def oracle_inner(spec: ChainRingSpec, alpha: int, u: np.ndarray, v: np.ndarray) -> np.ndarray:
    """[u, v] = sum u_i v_i + chi(sum ubar_j vbar_j), rowwise over broadcast inputs."""
    n = np.shape(u)[-1]
    dt = np.int64 if spec.modulus**2 * (n + 1) < 2**63 else object
    u = np.asarray(u, dtype=dt)
    v = np.asarray(v, dtype=dt)
    left = (u[..., :alpha] * v[..., :alpha]).sum(axis=-1) % spec.modulus
    right = (u[..., alpha:] * v[..., alpha:]).sum(axis=-1) % spec.bar_modulus
    lifted = np.asarray(spec.chi(np.asarray(right, dtype=spec.dtype)), dtype=dt)
    return (left + lifted) % spec.modulus


def oracle_dual_words(C, budget: int = DEFAULT_ORACLE_BUDGET) -> np.ndarray:
    """Every ambient vector orthogonal to every codeword of C.

    The form is bilinear, so testing against the generators of C suffices.
    """
    spec, alpha = C.spec, C.alpha
    amb = ambient_words(spec, alpha, C.beta, budget)
    keep = np.ones(len(amb), dtype=bool)
    for g in C.generator_matrix:
        keep &= oracle_inner(spec, alpha, amb, g[None, :]) == 0
    return amb[keep]


def _greedy_generators(spec, alpha, beta, words: np.ndarray) -> np.ndarray:
    """A generating subset of an additively closed set of words."""
    target = set(encode(spec, alpha, beta, words).tolist())
    chosen: list[np.ndarray] = []
    span = {0}
    for w, key in zip(words, encode(spec, alpha, beta, words).tolist()):
        if key in span:
            continue
        chosen.append(w)
        span = set(encode(spec, alpha, beta, oracle_span(spec, alpha, beta, chosen)).tolist())
        if span == target:
            break
    if not chosen:
        return np.zeros((0, alpha + beta), dtype=spec.dtype)
    return np.array(chosen, dtype=spec.dtype)


def oracle_dual(C, budget: int = DEFAULT_ORACLE_BUDGET):
    from .code import MixedCode

    words = oracle_dual_words(C, budget)
    gens = _greedy_generators(C.spec, C.alpha, C.beta, words)
    return MixedCode(C.spec, C.alpha, C.beta, gens)


def oracle_word_set(C, budget: int = DEFAULT_ORACLE_BUDGET) -> set[int]:
    words = oracle_span(C.spec, C.alpha, C.beta, C.generator_matrix, budget)
    return set(encode(C.spec, C.alpha, C.beta, words).tolist())


def oracle_codes_equal(C, D, budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    return oracle_word_set(C, budget) == oracle_word_set(D, budget)


def oracle_direct_sum(C, D, budget: int = DEFAULT_ORACLE_BUDGET) -> bool:
    """True iff (c, d) -> c + d is a bijection C x D -> ambient.

    Injectivity is C n D = {0}; with |C| |D| = |ambient| it is a bijection.
    """
    if (C.spec, C.alpha, C.beta) != (D.spec, D.alpha, D.beta):
        raise ValueError("ambient mismatch")
    cw = oracle_word_set(C, budget)
    dw = oracle_word_set(D, budget)
    if len(cw) * len(dw) != _ambient_size(C.spec, C.alpha, C.beta):
        return False
    return cw & dw == {0}

