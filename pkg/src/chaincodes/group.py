"""Product group codes: ideals of R[H] x Rbar[K] for finite abelian H, K.

A group ring element sum_g u_g g is identified with its coefficient vector
under a fixed ordering of the group, so a mixed code of block lengths
(|H|, |K|) *is* a subset of R[H] x Rbar[K] and no explicit isomorphism is
needed.  Groups are given by invariant factors; elements are exponent
tuples listed in lexicographic order, so index 0 is the identity and in a
cyclic group element i is g^i.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .code import (
    MixedCode,
    MixedVector,
    contains,
    dual,
    product_code,
    project_r,
    project_rbar,
    weight_distribution,
)
from .lcp import is_lcp
from .ring import ChainRingSpec

__all__ = [
    "GroupSpec",
    "shift_action",
    "is_group_code",
    "ideal_generated",
    "split_separable",
    "verify_equivalence_theorem",
    "apply_block_permutation",
    "enumerate_submodules",
    "enumerate_group_codes",
]

DEFAULT_PERMUTATION_BUDGET = 10**6


@dataclass(frozen=True)
class GroupSpec:
    """Direct product of cyclic groups of the given orders."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self) -> None:
        factors = tuple(int(n) for n in self.invariant_factors)
        if any(n < 2 for n in factors):
            raise ValueError("invariant factors must be at least 2")
        object.__setattr__(self, "invariant_factors", factors)

    @classmethod
    def cyclic(cls, n: int) -> GroupSpec:
        return cls((n,)) if n > 1 else cls(())

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    @cached_property
    def elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(itertools.product(*(range(n) for n in self.invariant_factors)))

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {e: i for i, e in enumerate(self.elements)}

    def multiply(self, i: int, j: int) -> int:
        a, b = self.elements[i], self.elements[j]
        return self._index[
            tuple((x + y) % n for x, y, n in zip(a, b, self.invariant_factors))
        ]

    @property
    def generators(self) -> tuple[int, ...]:
        """Indices of the canonical generators, one per invariant factor."""
        k = len(self.invariant_factors)
        return tuple(self._index[tuple(int(t == i) for t in range(k))] for i in range(k))

    def regular_permutation(self, h: int) -> np.ndarray:
        """perm[g] = index of h*g."""
        if not 0 <= h < self.order:
            raise IndexError(f"group element index {h} out of range")
        return np.array([self.multiply(h, g) for g in range(self.order)], dtype=np.intp)

    def __str__(self) -> str:
        return " x ".join(f"C{n}" for n in self.invariant_factors) or "1"


def _check_shapes(alpha: int, beta: int, H: GroupSpec, K: GroupSpec) -> None:
    if H.order != alpha or K.order != beta:
        raise ValueError(
            f"group orders ({H.order}, {K.order}) do not match block lengths ({alpha}, {beta})"
        )


def _shift(rows: np.ndarray, perm: np.ndarray) -> np.ndarray:
    out = np.empty_like(rows)
    out[..., perm] = rows
    return out


def shift_action(
    v: MixedVector, h_index: int, k_index: int, H: GroupSpec, K: GroupSpec
) -> MixedVector:
    """Multiply (u | ubar) by the monomial (h, k): the coefficient at g moves to h*g."""
    _check_shapes(v.alpha, v.beta, H, K)
    u = _shift(np.array(v.r_part, dtype=v.spec.dtype), H.regular_permutation(h_index))
    ub = _shift(np.array(v.rbar_part, dtype=v.spec.dtype), K.regular_permutation(k_index))
    return MixedVector(v.spec, v.alpha, v.beta, tuple(u), tuple(ub))


def _ideal_images(rows: np.ndarray, alpha: int, H: GroupSpec, K: GroupSpec):
    """Images of ``rows`` under the ring elements (h, 0) and (0, k).

    h and k run over the identity and the group generators.  Together these
    generate R[H] x Rbar[K] as a ring, so closure under them is closure
    under multiplication by the whole product ring.
    """
    left = np.zeros_like(rows)
    right = np.zeros_like(rows)
    left[:, :alpha] = rows[:, :alpha]
    right[:, alpha:] = rows[:, alpha:]
    yield left
    yield right
    for h in H.generators:
        perm = H.regular_permutation(h)
        out = np.zeros_like(rows)
        out[:, :alpha] = _shift(rows[:, :alpha], perm)
        yield out
    for k in K.generators:
        perm = K.regular_permutation(k)
        out = np.zeros_like(rows)
        out[:, alpha:] = _shift(rows[:, alpha:], perm)
        yield out


def is_group_code(C: MixedCode, H: GroupSpec, K: GroupSpec) -> bool:
    """True iff C is an ideal of the product ring R[H] x Rbar[K]."""
    _check_shapes(C.alpha, C.beta, H, K)
    rows = np.array(C.standard_rows)
    return all(
        contains(C, w) for image in _ideal_images(rows, C.alpha, H, K) for w in image
    )


def ideal_generated(
    gens, H: GroupSpec, K: GroupSpec, spec: ChainRingSpec | None = None
) -> MixedCode:
    """Smallest ideal of R[H] x Rbar[K] containing ``gens``."""
    alpha, beta = H.order, K.order
    if isinstance(gens, MixedCode):
        code = gens
    else:
        gens = list(gens)
        if spec is None:
            if not gens or not isinstance(gens[0], MixedVector):
                raise ValueError("spec is required unless generators are MixedVectors")
            spec = gens[0].spec
        code = MixedCode(spec, alpha, beta, gens)
    _check_shapes(code.alpha, code.beta, H, K)
    while True:
        rows = np.array(code.standard_rows)
        new = [w for image in _ideal_images(rows, alpha, H, K) for w in image if not contains(code, w)]
        if not new:
            return code.minimal()
        code = MixedCode(code.spec, alpha, beta, np.vstack([rows, np.array(new)]))


def split_separable(C: MixedCode, H: GroupSpec, K: GroupSpec) -> tuple[MixedCode, MixedCode]:
    """(C1, C2bar) with C = C1 x C2bar for a group code C."""
    if not is_group_code(C, H, K):
        raise ValueError("split_separable requires a group code")
    C1 = project_r(C).minimal()
    C2 = project_rbar(C).minimal()
    if product_code(C1, C2).dimension != C.dimension:
        raise AssertionError(
            "group code is not the product of its projections; this contradicts "
            "the separability of product group codes"
        )
    return C1, C2


def apply_block_permutation(C: MixedCode, perm_r, perm_rbar) -> MixedCode:
    """Permute coordinates within each block: new column j is old column perm[j]."""
    cols = list(perm_r) + [C.alpha + j for j in perm_rbar]
    return MixedCode(C.spec, C.alpha, C.beta, C.generator_matrix[:, cols])


def verify_equivalence_theorem(
    C: MixedCode,
    D: MixedCode,
    H: GroupSpec,
    K: GroupSpec,
    budget: int = DEFAULT_PERMUTATION_BUDGET,
) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Search for a block-respecting permutation carrying D-perp onto C.

    Returns the lexicographically first witness ``(perm_r, perm_rbar)`` or
    None.  Requires {C, D} to be an LCP of group codes.
    """
    for X in (C, D):
        if not is_group_code(X, H, K):
            raise ValueError("both codes must be group codes")
    if not is_lcp(C, D):
        raise ValueError("{C, D} is not an LCP")
    if math.factorial(C.alpha) * math.factorial(C.beta) > budget:
        raise ValueError(f"permutation search exceeds budget {budget}")
    target = dual(D)
    if target.dimension != C.dimension:
        return None
    if weight_distribution(target) != weight_distribution(C):
        return None
    # equal sizes, so mapping the generators into C is enough
    gens = np.array(target.standard_rows)
    for pr in itertools.permutations(range(C.alpha)):
        for pb in itertools.permutations(range(C.beta)):
            cols = list(pr) + [C.alpha + j for j in pb]
            if all(contains(C, g[cols]) for g in gens):
                return pr, pb
    return None


# ---------------------------------------------------------------------------
# exhaustive enumeration at desk scale


def _ambient_table(spec: ChainRingSpec, alpha: int, beta: int):
    radices = [spec.modulus] * alpha + [spec.bar_modulus] * beta
    words = np.array(list(itertools.product(*(range(m) for m in radices))), dtype=spec.dtype)
    words = words.reshape(-1, alpha + beta)
    weights = np.array([math.prod(radices[j + 1 :]) for j in range(len(radices))], dtype=np.int64)

    def index(rows):
        rows = np.array(rows, dtype=np.int64)
        rows[..., :alpha] %= spec.modulus
        rows[..., alpha:] %= spec.bar_modulus
        return rows @ weights

    add = index(words[:, None, :] + words[None, :, :])
    return words, index, add


def enumerate_submodules(
    spec: ChainRingSpec, alpha: int, beta: int, budget: int = 2**12
) -> list[MixedCode]:
    """Every R-submodule of R^alpha x Rbar^beta (ambient size <= ``budget``)."""
    size = spec.modulus**alpha * spec.bar_modulus**beta
    if size > budget:
        raise ValueError(f"ambient of size {size} exceeds budget {budget}")
    words, _, add = _ambient_table(spec, alpha, beta)
    order = len(words)

    def cyclic(x: int) -> list[int]:
        out, y = [0], x
        while y != 0:
            out.append(y)
            y = int(add[y, x])
        return out

    cyc = [np.array(cyclic(x)) for x in range(order)]
    seen = {frozenset([0]): None}
    frontier = [frozenset([0])]
    while frontier:
        nxt = []
        for S in frontier:
            arr = np.fromiter(S, dtype=np.int64)
            for x in range(order):
                if x in S:
                    continue
                T = frozenset(np.unique(add[np.ix_(arr, cyc[x])]).tolist())
                if T not in seen:
                    seen[T] = None
                    nxt.append(T)
        frontier = nxt
    return [
        MixedCode(spec, alpha, beta, words[sorted(S)]).minimal()
        for S in sorted(seen, key=lambda S: (len(S), sorted(S)))
    ]


def enumerate_group_codes(
    spec: ChainRingSpec, H: GroupSpec, K: GroupSpec, budget: int = 2**12
) -> tuple[list[MixedCode], int]:
    """All group codes w.r.t. (H, K), found by filtering every submodule.

    Returns the group codes and the total number of submodules scanned.
    """
    subs = enumerate_submodules(spec, H.order, K.order, budget)
    return [C for C in subs if is_group_code(C, H, K)], len(subs)
