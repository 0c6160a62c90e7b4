"""Mixed-alphabet linear codes in R^alpha x Rbar^beta.

A code is an R-submodule of R^alpha x Rbar^beta, where R acts on the Rbar
block through reduction mod p^r.  It is stored as a matrix of generator
rows whose first ``alpha`` columns hold residues mod p^s and whose last
``beta`` columns hold residues mod p^r.

Most structure is read off chi(C), the image in R^(alpha+beta) obtained by
scaling the Rbar block into p^(s-r) R.  chi is an R-module isomorphism onto
its image, so the standard form, the type and membership of C all come from
the p-adic row reduction of chi(G).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import numpy as np

from .matrix import RingMatrix, StandardForm, right_kernel, row_reduce_standard
from .ring import ChainRingSpec, Level, RingElement

__all__ = [
    "MixedVector",
    "MixedCode",
    "CodeType",
    "EnumerationBudgetError",
    "DEFAULT_ENUM_BUDGET",
    "scalar_action",
    "chi_vec",
    "psi_vec",
    "iota_vec",
    "varphi_vec",
    "standard_generator_matrix",
    "dimension",
    "is_weakly_free",
    "is_free",
    "is_separable",
    "inner_product",
    "dual",
    "parity_check_weakly_free",
    "enumerate_codewords",
    "contains",
    "sum_codes",
    "intersection",
    "intersection_bruteforce",
    "min_distance",
    "weight_distribution",
    "project_r",
    "project_rbar",
    "product_code",
    "random_weakly_free_code",
    "random_code",
]

DEFAULT_ENUM_BUDGET = 2**20


class EnumerationBudgetError(RuntimeError):
    pass


# ---------------------------------------------------------------------------
# vectors


@dataclass(frozen=True)
class MixedVector:
    """An element (u | ubar) of R^alpha x Rbar^beta."""

    spec: ChainRingSpec
    alpha: int
    beta: int
    r_part: tuple[int, ...]
    rbar_part: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.r_part) != self.alpha or len(self.rbar_part) != self.beta:
            raise ValueError("block lengths do not match (alpha, beta)")
        object.__setattr__(self, "r_part", tuple(int(x) % self.spec.modulus for x in self.r_part))
        object.__setattr__(
            self, "rbar_part", tuple(int(x) % self.spec.bar_modulus for x in self.rbar_part)
        )

    @classmethod
    def from_entries(cls, spec, alpha: int, beta: int, entries) -> MixedVector:
        entries = [int(x) for x in entries]
        if len(entries) != alpha + beta:
            raise ValueError(f"expected {alpha + beta} entries, got {len(entries)}")
        return cls(spec, alpha, beta, tuple(entries[:alpha]), tuple(entries[alpha:]))

    @classmethod
    def zero(cls, spec, alpha: int, beta: int) -> MixedVector:
        return cls(spec, alpha, beta, (0,) * alpha, (0,) * beta)

    @property
    def entries(self) -> np.ndarray:
        return np.array(self.r_part + self.rbar_part, dtype=self.spec.dtype)

    @property
    def weight(self) -> int:
        return sum(1 for x in self.r_part + self.rbar_part if x)

    def __add__(self, other: MixedVector) -> MixedVector:
        _same_ambient(self, other)
        return MixedVector(
            self.spec,
            self.alpha,
            self.beta,
            tuple(a + b for a, b in zip(self.r_part, other.r_part)),
            tuple(a + b for a, b in zip(self.rbar_part, other.rbar_part)),
        )

    def __neg__(self) -> MixedVector:
        return MixedVector(
            self.spec, self.alpha, self.beta,
            tuple(-a for a in self.r_part), tuple(-a for a in self.rbar_part),
        )

    def __sub__(self, other: MixedVector) -> MixedVector:
        return self + (-other)

    def __rmul__(self, a) -> MixedVector:
        return scalar_action(a, self)

    def __str__(self) -> str:
        left = " ".join(map(str, self.r_part))
        right = " ".join(map(str, self.rbar_part))
        return f"({left} | {right})"


def _same_ambient(a, b) -> None:
    if (a.spec, a.alpha, a.beta) != (b.spec, b.alpha, b.beta):
        raise ValueError(
            f"ambient mismatch: {a.spec}^({a.alpha},{a.beta}) vs {b.spec}^({b.alpha},{b.beta})"
        )


def _scalar_value(spec: ChainRingSpec, a) -> int:
    if isinstance(a, RingElement):
        if a.level is not Level.R:
            raise ValueError("scalars act from R")
        return a.value
    return int(a) % spec.modulus


def scalar_action(a, v: MixedVector) -> MixedVector:
    """a * (u | ubar) = (a u | pi(a) ubar)."""
    a = _scalar_value(v.spec, a)
    return MixedVector(
        v.spec, v.alpha, v.beta,
        tuple(a * x for x in v.r_part), tuple(a * x for x in v.rbar_part),
    )


# array-level maps; ``rows`` is (..., alpha + beta)


def _reduce_mixed(spec, alpha, rows) -> np.ndarray:
    rows = np.array(rows, dtype=spec.dtype)
    rows[..., :alpha] %= spec.modulus
    rows[..., alpha:] %= spec.bar_modulus
    return rows


def chi_rows(spec, alpha, rows) -> np.ndarray:
    out = np.array(rows, dtype=spec.dtype)
    out[..., :alpha] %= spec.modulus
    out[..., alpha:] = spec.chi(out[..., alpha:])
    return out


def psi_rows(spec, alpha, rows) -> np.ndarray:
    out = np.array(rows, dtype=spec.dtype)
    out[..., :alpha] %= spec.modulus
    out[..., alpha:] = spec.psi(out[..., alpha:])
    return out


def iota_rows(spec, alpha, rows) -> np.ndarray:
    out = np.array(rows, dtype=spec.dtype)
    out[..., :alpha] %= spec.modulus
    out[..., alpha:] = spec.iota(out[..., alpha:])
    return out


def varphi_rows(spec, alpha, rows) -> np.ndarray:
    return _reduce_mixed(spec, alpha, rows)


def chi_vec(v: MixedVector) -> np.ndarray:
    return chi_rows(v.spec, v.alpha, v.entries)


def psi_vec(w, alpha: int, beta: int, spec: ChainRingSpec) -> MixedVector:
    w = np.asarray(w)
    if w.shape != (alpha + beta,):
        raise ValueError(f"expected a vector of length {alpha + beta}")
    return MixedVector.from_entries(spec, alpha, beta, psi_rows(spec, alpha, w))


def iota_vec(v: MixedVector) -> np.ndarray:
    return iota_rows(v.spec, v.alpha, v.entries)


def varphi_vec(w, alpha: int, beta: int, spec: ChainRingSpec) -> MixedVector:
    return MixedVector.from_entries(spec, alpha, beta, np.asarray(w))


# ---------------------------------------------------------------------------
# codes


@dataclass(frozen=True)
class CodeType:
    """(alpha, beta; k_0, ..., k_{s-r-1} | k_{s-r}, ..., k_{s-1})."""

    alpha: int
    beta: int
    ks: tuple[int, ...]
    gap: int

    @property
    def mu(self) -> int:
        return sum(self.ks[: self.gap])

    @property
    def rho(self) -> int:
        return sum(self.ks[self.gap :])

    @property
    def dimension(self) -> int:
        s = len(self.ks)
        return sum((s - t) * k for t, k in enumerate(self.ks))

    def __str__(self) -> str:
        left = ", ".join(map(str, self.ks[: self.gap]))
        right = ", ".join(map(str, self.ks[self.gap :]))
        return f"({self.alpha},{self.beta}; {left} | {right})"


class MixedCode:
    """The R-span of a set of generator rows in R^alpha x Rbar^beta.

    Equality is equality of codes (same ambient, same codeword set); the
    generator rows themselves are not canonical.
    """

    __hash__ = None

    def __init__(self, spec: ChainRingSpec, alpha: int, beta: int, generators=()) -> None:
        if alpha < 0 or beta < 0:
            raise ValueError("block lengths must be nonnegative")
        self.spec = spec
        self.alpha = alpha
        self.beta = beta
        if isinstance(generators, np.ndarray):
            rows = generators.reshape(-1, alpha + beta) if generators.size else generators
        else:
            rows = [
                g.entries if isinstance(g, MixedVector) else list(g) for g in generators
            ]
        if len(rows) == 0:
            arr = np.zeros((0, alpha + beta), dtype=spec.dtype)
        else:
            arr = np.array(rows, dtype=spec.dtype).reshape(len(rows), -1)
            if arr.shape[1] != alpha + beta:
                raise ValueError(f"generator rows must have length {alpha + beta}")
        arr = _reduce_mixed(spec, alpha, arr)
        arr.setflags(write=False)
        self.generator_matrix = arr

    @classmethod
    def ambient(cls, spec, alpha: int, beta: int) -> MixedCode:
        return cls(spec, alpha, beta, np.eye(alpha + beta, dtype=spec.dtype))

    @classmethod
    def zero(cls, spec, alpha: int, beta: int) -> MixedCode:
        return cls(spec, alpha, beta)

    @property
    def length(self) -> int:
        return self.alpha + self.beta

    @property
    def ambient_dimension(self) -> int:
        return self.spec.s * self.alpha + self.spec.r * self.beta

    @property
    def generators(self) -> tuple[MixedVector, ...]:
        return tuple(
            MixedVector.from_entries(self.spec, self.alpha, self.beta, g)
            for g in self.generator_matrix
        )

    def chi_matrix(self) -> RingMatrix:
        return RingMatrix(self.spec, chi_rows(self.spec, self.alpha, self.generator_matrix))

    @functools.cached_property
    def chi_form(self) -> StandardForm:
        """Standard form of chi(C) with the (alpha, beta) column grouping."""
        return row_reduce_standard(self.chi_matrix(), (self.alpha, self.beta))

    @functools.cached_property
    def standard_rows(self) -> np.ndarray:
        """Mixed standard generator rows (psi applied to the chi form)."""
        rows = psi_rows(self.spec, self.alpha, self.chi_form.matrix.data)
        rows.setflags(write=False)
        return rows

    @property
    def code_type(self) -> CodeType:
        return CodeType(self.alpha, self.beta, self.chi_form.type_ks, self.spec.gap)

    @property
    def dimension(self) -> int:
        return self.code_type.dimension

    @property
    def size(self) -> int:
        return self.spec.p**self.dimension

    def minimal(self) -> MixedCode:
        """Same code, generated by its standard rows."""
        return MixedCode(self.spec, self.alpha, self.beta, self.standard_rows)

    def __contains__(self, v) -> bool:
        return contains(self, v)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MixedCode):
            return NotImplemented
        if (self.spec, self.alpha, self.beta) != (other.spec, other.alpha, other.beta):
            return False
        return all(contains(self, g) for g in other.generator_matrix) and all(
            contains(other, g) for g in self.generator_matrix
        )

    def __le__(self, other: MixedCode) -> bool:
        _same_ambient(self, other)
        return all(contains(other, g) for g in self.generator_matrix)

    def __repr__(self) -> str:
        return (
            f"MixedCode({self.spec}, alpha={self.alpha}, beta={self.beta}, "
            f"type={self.code_type})"
        )

    def __str__(self) -> str:
        return format_mixed_matrix(self.standard_rows, self.alpha)


def format_mixed_matrix(rows: np.ndarray, alpha: int) -> str:
    lines = []
    for row in rows:
        left = " ".join(str(int(x)) for x in row[:alpha])
        right = " ".join(str(int(x)) for x in row[alpha:])
        lines.append(f"{left} | {right}".strip())
    return "\n".join(lines)


def standard_generator_matrix(C: MixedCode) -> tuple[StandardForm, CodeType]:
    """Standard generator matrix of C and its type.

    The returned form's ``matrix`` holds mixed rows: residues mod p^s in the
    first ``alpha`` columns, residues mod p^r in the last ``beta``.  Its
    ``permutation`` and ``pivots`` are those of the chi-image reduction.
    """
    sf = C.chi_form
    mixed = StandardForm(
        matrix=RingMatrix(C.spec, C.standard_rows),
        permutation=sf.permutation,
        type_ks=sf.type_ks,
        pivots=sf.pivots,
        block_split=sf.block_split,
        fallback_pivots=sf.fallback_pivots,
    )
    return mixed, C.code_type


def dimension(C: MixedCode) -> int:
    return C.dimension


def is_weakly_free(C: MixedCode) -> bool:
    """All k_t vanish except possibly k_0 and k_{s-r}."""
    gap = C.spec.gap
    return all(k == 0 for t, k in enumerate(C.code_type.ks) if t not in (0, gap))


def is_free(C: MixedCode) -> bool:
    return is_weakly_free(C) and C.code_type.rho == 0


def project_r(C: MixedCode) -> MixedCode:
    """Projection of C onto the R block, as a code with beta = 0."""
    return MixedCode(C.spec, C.alpha, 0, C.generator_matrix[:, : C.alpha])


def project_rbar(C: MixedCode) -> MixedCode:
    """Projection of C onto the Rbar block, as a code with alpha = 0."""
    return MixedCode(C.spec, 0, C.beta, C.generator_matrix[:, C.alpha :])


def product_code(C1: MixedCode, C2: MixedCode) -> MixedCode:
    """C1 x C2 for C1 over R (beta = 0) and C2 over Rbar (alpha = 0)."""
    if C1.beta or C2.alpha or C1.spec != C2.spec:
        raise ValueError("product_code expects an R-code and an Rbar-code")
    a, b = C1.alpha, C2.beta
    top = np.hstack([C1.generator_matrix, np.zeros((len(C1.generator_matrix), b), dtype=C1.spec.dtype)])
    bottom = np.hstack([np.zeros((len(C2.generator_matrix), a), dtype=C1.spec.dtype), C2.generator_matrix])
    return MixedCode(C1.spec, a, b, np.vstack([top, bottom]))


def is_separable(C: MixedCode) -> bool:
    """C equals the product of its two block projections."""
    P = product_code(project_r(C), project_rbar(C))
    # C is always contained in P, so equal size means equal codes
    return P.dimension == C.dimension


# ---------------------------------------------------------------------------
# duality


def inner_product(u: MixedVector, v: MixedVector) -> int:
    """[u, v] = <u, v>_R + chi(<ubar, vbar>_Rbar), computed as <iota(u), chi(v)>."""
    _same_ambient(u, v)
    a = iota_vec(u).astype(object)
    b = chi_vec(v).astype(object)
    return int(np.dot(a, b)) % u.spec.modulus


def dual(C: MixedCode) -> MixedCode:
    """C-perp = varphi(chi(C)-perp), via the right kernel of chi(G)."""
    K = right_kernel(C.chi_matrix())
    return MixedCode(C.spec, C.alpha, C.beta, varphi_rows(C.spec, C.alpha, K.data))


def parity_check_weakly_free(C: MixedCode) -> np.ndarray:
    """Closed-form parity-check matrix of a weakly-free code.

    With the standard form written, after the column permutation U, as

        [ I_mu   G11           |  0      G12bar ]
        [ 0      p^(s-r) G21   |  I_rho  G22bar ]

    the parity-check matrix is

        [ -G11^T              I  | -pi(G21)^T  0 ]
        [ -p^(s-r) G12^T      0  | -G22bar^T   I ]

    with U undone on the columns.  Returns mixed rows.
    """
    spec, alpha, beta = C.spec, C.alpha, C.beta
    sf = C.chi_form
    if not is_weakly_free(C):
        raise ValueError("parity-check formula requires weakly-free")
    if sf.fallback_pivots:
        raise ValueError(
            "parity-check formula requires weakly-free: rows of valuation s-r "
            "have no pivot in the Rbar block"
        )
    gap, mod, bmod = spec.gap, spec.modulus, spec.bar_modulus
    mu, rho = C.code_type.mu, C.code_type.rho
    perm = list(sf.permutation)
    G = C.standard_rows[:, perm]

    G11 = G[:mu, mu:alpha]
    G12 = G[:mu, alpha + rho :]
    G21 = G[mu:, mu:alpha] // spec.p**gap
    G22 = G[mu:, alpha + rho :]
    dt = spec.dtype
    top = np.hstack([
        (-G11.T) % mod,
        np.eye(alpha - mu, dtype=dt),
        (-spec.pi(G21).T) % bmod,
        np.zeros((alpha - mu, beta - rho), dtype=dt),
    ])
    bottom = np.hstack([
        (-(spec.iota(G12) * spec.p**gap).T) % mod,
        np.zeros((beta - rho, alpha - mu), dtype=dt),
        (-G22.T) % bmod,
        np.eye(beta - rho, dtype=dt),
    ])
    Hp = np.vstack([top, bottom]).astype(dt)
    H = np.zeros_like(Hp)
    H[:, perm] = Hp
    return _reduce_mixed(spec, alpha, H)


# ---------------------------------------------------------------------------
# enumeration and set operations


def enumerate_codewords(C: MixedCode, budget: int = DEFAULT_ENUM_BUDGET) -> np.ndarray:
    """All codewords of C as rows of an array, each exactly once."""
    if C.size > budget:
        raise EnumerationBudgetError(
            f"enumeration budget: |C| = {C.spec.p}^{C.dimension} exceeds {budget}"
        )
    spec = C.spec
    words = np.zeros((1, C.length), dtype=spec.dtype)
    for row, (_, m) in zip(C.chi_form.matrix.data, C.chi_form.pivots):
        coeffs = np.arange(spec.p ** (spec.s - m), dtype=spec.dtype)
        words = (words[:, None, :] + coeffs[None, :, None] * row[None, None, :]) % spec.modulus
        words = words.reshape(-1, C.length)
    return psi_rows(spec, C.alpha, words)


def codeword_set(C: MixedCode, budget: int = DEFAULT_ENUM_BUDGET) -> set[tuple[int, ...]]:
    return {tuple(int(x) for x in w) for w in enumerate_codewords(C, budget)}


def contains(C: MixedCode, v) -> bool:
    """Membership by back-substitution against the standard form."""
    entries = v.entries if isinstance(v, MixedVector) else np.asarray(v)
    if isinstance(v, MixedVector):
        _same_ambient(v, C)
    if entries.shape != (C.length,):
        raise ValueError(f"expected a vector of length {C.length}")
    spec = C.spec
    w = chi_rows(spec, C.alpha, entries)
    for row, (c, m) in zip(C.chi_form.matrix.data, C.chi_form.pivots):
        if w[c] % spec.p**m:
            return False
        if w[c]:
            w = (w - (int(w[c]) // spec.p**m) * row) % spec.modulus
    return not np.any(w)


def sum_codes(C: MixedCode, D: MixedCode) -> MixedCode:
    _same_ambient(C, D)
    return MixedCode(C.spec, C.alpha, C.beta, np.vstack([C.generator_matrix, D.generator_matrix]))


def intersection(C: MixedCode, D: MixedCode) -> MixedCode:
    """C n D = (C-perp + D-perp)-perp."""
    _same_ambient(C, D)
    return dual(sum_codes(dual(C), dual(D)))


def intersection_bruteforce(
    C: MixedCode, D: MixedCode, budget: int = DEFAULT_ENUM_BUDGET
) -> MixedCode:
    _same_ambient(C, D)
    common = codeword_set(C, budget) & codeword_set(D, budget)
    code = MixedCode(C.spec, C.alpha, C.beta, sorted(common))
    return code.minimal()


def weight_distribution(C: MixedCode, budget: int = DEFAULT_ENUM_BUDGET) -> dict[tuple[int, int], int]:
    """Counts of codewords by (weight in R block, weight in Rbar block)."""
    words = enumerate_codewords(C, budget)
    wr = np.count_nonzero(words[:, : C.alpha], axis=1)
    wb = np.count_nonzero(words[:, C.alpha :], axis=1)
    pairs, counts = np.unique(np.stack([wr, wb], axis=1), axis=0, return_counts=True)
    return {(int(a), int(b)): int(n) for (a, b), n in zip(pairs, counts)}


def min_distance(C: MixedCode, budget: int = DEFAULT_ENUM_BUDGET) -> int:
    """Minimum Hamming weight of a nonzero codeword.

    Both blocks count alike.  The zero code gets alpha + beta + 1.
    """
    if C.dimension == 0:
        return C.length + 1
    weights = np.count_nonzero(enumerate_codewords(C, budget), axis=1)
    return int(weights[weights > 0].min())


# ---------------------------------------------------------------------------
# random codes


def random_weakly_free_code(
    spec: ChainRingSpec,
    alpha: int,
    beta: int,
    rng: np.random.Generator,
    mu: int | None = None,
    rho: int | None = None,
) -> MixedCode:
    """Uniform fill of the free blocks of a weakly-free standard form.

    Block-respecting column permutations are drawn uniformly too.
    """
    mu = int(rng.integers(0, alpha + 1)) if mu is None else mu
    rho = int(rng.integers(0, beta + 1)) if rho is None else rho
    if not (0 <= mu <= alpha and 0 <= rho <= beta):
        raise ValueError("need 0 <= mu <= alpha and 0 <= rho <= beta")
    dt, mod, bmod = spec.dtype, spec.modulus, spec.bar_modulus
    a_rest, b_rest = alpha - mu, beta - rho

    def uniform(m, shape):
        return rng.integers(0, m, size=shape).astype(dt)

    top = np.hstack([
        np.eye(mu, dtype=dt), uniform(mod, (mu, a_rest)),
        np.zeros((mu, rho), dtype=dt), uniform(bmod, (mu, b_rest)),
    ])
    bottom = np.hstack([
        np.zeros((rho, mu), dtype=dt),
        (uniform(mod, (rho, a_rest)) * spec.p**spec.gap) % mod,
        np.eye(rho, dtype=dt), uniform(bmod, (rho, b_rest)),
    ])
    staircase = np.vstack([top, bottom]).reshape(mu + rho, alpha + beta)
    perm = np.concatenate([rng.permutation(alpha), alpha + rng.permutation(beta)]).astype(int)
    G = np.zeros_like(staircase)
    G[:, perm] = staircase
    return MixedCode(spec, alpha, beta, G)


def random_code(
    spec: ChainRingSpec, alpha: int, beta: int, rng: np.random.Generator, rows: int | None = None
) -> MixedCode:
    """Span of uniformly random mixed vectors (not necessarily weakly-free)."""
    rows = int(rng.integers(0, alpha + beta + 2)) if rows is None else rows
    G = np.hstack([
        rng.integers(0, spec.modulus, size=(rows, alpha)),
        rng.integers(0, spec.bar_modulus, size=(rows, beta)),
    ]).astype(spec.dtype)
    # scale rows by random powers of p so that all types show up
    G = G * spec.p ** rng.integers(0, spec.s, size=(rows, 1)).astype(spec.dtype)
    return MixedCode(spec, alpha, beta, G)
