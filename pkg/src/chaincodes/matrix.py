"""Dense matrices over Z_{p^s} and p-adic row reduction.

The reduction brings a matrix to the staircase shape used for linear codes
over chain rings: every nonzero row has a pivot entry exactly p^v in a
column that is zero in all later rows, pivots are met in nondecreasing
order of v, and entries above a pivot p^v are reduced into [0, p^v).
The multiset of pivot valuations (the type) is an invariant of the row
span, so any two generator matrices of a code give the same type.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .ring import ChainRingSpec, Level

__all__ = [
    "RingMatrix",
    "StandardForm",
    "row_reduce_standard",
    "is_nonsingular",
    "right_kernel",
    "rank_mod_p",
]


@dataclass(frozen=True, eq=False)
class RingMatrix:
    """A rows x cols matrix of canonical residues at one ring level."""

    spec: ChainRingSpec
    data: np.ndarray
    level: Level = Level.R

    def __post_init__(self) -> None:
        arr = np.array(self.data, dtype=self.spec.dtype)
        if arr.ndim == 1:
            arr = arr.reshape(1, -1)
        elif arr.ndim != 2:
            raise ValueError("a matrix must be two-dimensional")
        arr %= self.modulus
        arr.setflags(write=False)
        object.__setattr__(self, "data", arr)

    @classmethod
    def from_rows(cls, spec, rows, cols: int | None = None, level: Level = Level.R):
        rows = [list(r) for r in rows]
        if not rows:
            return cls(spec, np.zeros((0, cols or 0), dtype=spec.dtype), level)
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        return cls(spec, np.array(rows, dtype=spec.dtype), level)

    @classmethod
    def identity(cls, spec, n: int, level: Level = Level.R):
        return cls(spec, np.eye(n, dtype=spec.dtype), level)

    @property
    def modulus(self) -> int:
        return self.spec.level_modulus(self.level)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def tolist(self) -> list[list[int]]:
        return [[int(x) for x in row] for row in self.data]

    def __eq__(self, other) -> bool:
        if not isinstance(other, RingMatrix):
            return NotImplemented
        return (
            self.spec == other.spec
            and self.level is other.level
            and self.data.shape == other.data.shape
            and bool(np.all(self.data == other.data))
        )

    def __repr__(self) -> str:
        return f"RingMatrix({self.spec}, {self.level.value}, {self.tolist()})"


@dataclass(frozen=True)
class StandardForm:
    """Reduced generator matrix together with its pivot structure.

    ``matrix`` is kept in the original column order.  ``permutation`` lists
    the original column indices in staircase order (pivot columns first,
    block by block), so ``matrix.data[:, permutation]`` is the staircase
    itself.  ``pivots`` holds one ``(column, valuation)`` pair per row.
    """

    matrix: RingMatrix
    permutation: tuple[int, ...]
    type_ks: tuple[int, ...]
    pivots: tuple[tuple[int, int], ...]
    block_split: tuple[int, int] | None = None
    fallback_pivots: tuple[int, ...] = field(default=())  # row indices

    @property
    def staircase(self) -> np.ndarray:
        return self.matrix.data[:, list(self.permutation)]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _check_block_split(M: RingMatrix, block_split) -> tuple[int, int]:
    alpha, beta = block_split
    if alpha < 0 or beta < 0 or alpha + beta != M.cols:
        raise ValueError(f"block split {block_split} does not match {M.cols} columns")
    if M.level is not Level.R:
        raise ValueError("block split requires a matrix over R")
    step = M.spec.p**M.spec.gap
    if beta and np.any(M.data[:, alpha:] % step):
        raise ValueError("row not in R^α × θ^{s−r}R^β")
    return alpha, beta


def row_reduce_standard(
    M: RingMatrix, block_split: tuple[int, int] | None = None
) -> StandardForm:
    """Reduce ``M`` to standard (staircase) form with the same row span.

    Valuations are processed in increasing order.  At each step the topmost
    unprocessed row holding an entry of minimal valuation supplies the
    pivot, in its leftmost such column.  With ``block_split = (alpha,
    beta)`` a pivot of valuation >= s - r is placed in the last ``beta``
    columns whenever the row allows it; rows that do not are recorded in
    ``fallback_pivots``.
    """
    spec = M.spec
    p, mod = spec.p, M.modulus
    length = spec.level_index(M.level)
    if block_split is not None:
        alpha, _ = _check_block_split(M, block_split)

    A = np.array(M.data, dtype=spec.dtype)
    pending = list(range(A.shape[0]))
    order: list[int] = []
    pivots: list[tuple[int, int]] = []
    fallback: list[int] = []

    while pending:
        vals = spec.valuation_array(A[pending], M.level)
        m = int(vals.min()) if vals.size else length
        if m >= length:
            break
        idx = next(i for i in range(len(pending)) if vals[i].min() == m)
        row = pending[idx]
        candidates = np.flatnonzero(vals[idx] == m)
        col = int(candidates[0])
        if block_split is not None and m >= spec.gap:
            right = candidates[candidates >= alpha]
            if right.size:
                col = int(right[0])
            else:
                fallback.append(len(order))

        step = p**m
        unit = int(A[row, col]) // step
        A[row] = (A[row] * pow(unit, -1, mod)) % mod
        for j in range(A.shape[0]):
            if j != row and A[j, col]:
                q = int(A[j, col]) // step
                A[j] = (A[j] - q * A[row]) % mod
        pending.remove(row)
        order.append(row)
        pivots.append((col, m))

    # rows sharing a valuation vanish at each other's pivots, so listing them
    # by pivot column keeps the staircase intact
    ranked = sorted(range(len(order)), key=lambda i: (pivots[i][1], pivots[i][0]))
    fallback = [ranked.index(i) for i in fallback]
    order = [order[i] for i in ranked]
    pivots = [pivots[i] for i in ranked]
    reduced = RingMatrix(spec, A[order] if order else A[:0], M.level)
    ks = [0] * length
    for _, m in pivots:
        ks[m] += 1
    return StandardForm(
        matrix=reduced,
        permutation=_staircase_permutation(M.cols, pivots, block_split),
        type_ks=tuple(ks),
        pivots=tuple(pivots),
        block_split=tuple(block_split) if block_split is not None else None,
        fallback_pivots=tuple(fallback),
    )


def _staircase_permutation(n, pivots, block_split) -> tuple[int, ...]:
    pcols = [c for c, _ in pivots]
    blocks = [range(n)] if block_split is None else [
        range(block_split[0]),
        range(block_split[0], n),
    ]
    perm: list[int] = []
    for block in blocks:
        inside = set(block)
        perm += [c for c in pcols if c in inside]
        perm += [c for c in block if c not in pcols]
    return tuple(perm)


def rank_mod_p(data: np.ndarray, p: int) -> int:
    """Rank of an integer matrix reduced mod p, by Gaussian elimination."""
    A = np.array(data, dtype=object) % p
    rows, cols = A.shape
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if A[i, c] % p), None)
        if piv is None:
            continue
        A[[rank, piv]] = A[[piv, rank]]
        A[rank] = (A[rank] * pow(int(A[rank, c]), -1, p)) % p
        for i in range(rows):
            if i != rank and A[i, c]:
                A[i] = (A[i] - A[i, c] * A[rank]) % p
        rank += 1
        if rank == rows:
            break
    return rank


def is_nonsingular(M: RingMatrix) -> bool:
    """True iff det(M) is a unit, i.e. M mod p is invertible over F_p."""
    if M.rows != M.cols:
        raise ValueError("nonsingularity requires a square matrix")
    return rank_mod_p(M.data, M.spec.p) == M.rows


def right_kernel(M: RingMatrix) -> RingMatrix:
    """Generator matrix of {x : M x^T = 0}.

    From the standard form S = [p^{m_i} w_i], unimodular column operations
    Q turn S into the monomial matrix D with rows p^{m_i} e_{c_i}.  The
    kernel of D is spanned by p^{L - m_i} e_{c_i} and the unit vectors of
    the non-pivot columns; the kernel of M is its image under Q.
    """
    spec = M.spec
    p, mod = spec.p, M.modulus
    length = spec.level_index(M.level)
    sf = row_reduce_standard(M)
    S = np.array(sf.matrix.data, dtype=spec.dtype)
    n = M.cols
    Q = np.eye(n, dtype=spec.dtype)

    for i in reversed(range(len(sf.pivots))):
        c, m = sf.pivots[i]
        w = S[i] // p**m
        for j in np.flatnonzero(w):
            if j == c:
                continue
            f = int(w[j])
            S[:, j] = (S[:, j] - f * S[:, c]) % mod
            Q[:, j] = (Q[:, j] - f * Q[:, c]) % mod

    pivot_cols = {c for c, _ in sf.pivots}
    gens = [Q[:, j] for j in range(n) if j not in pivot_cols]
    gens += [(Q[:, c] * p ** (length - m)) % mod for c, m in sf.pivots if m > 0]
    data = np.array(gens, dtype=spec.dtype) if gens else np.zeros((0, n), dtype=spec.dtype)
    return RingMatrix(spec, data, M.level)
