"""Arithmetic in the chain ring Z_{p^s} and its quotient Z_{p^r}.

The ring R = Z_{p^s} has maximal ideal generated by p, and the quotient
alphabet is R/p^r R = Z_{p^r}.  Elements of either level are stored as
canonical residues.  Besides scalar arithmetic this module provides the
Teichmuller machinery and the four scalar maps relating R and its quotient:

    pi   : R -> Rbar          reduction mod p^r
    iota : Rbar -> R          digit-wise Teichmuller lift
    chi  : Rbar -> p^{s-r} R  u |-> p^{s-r} iota(u)
    psi  : p^{s-r} R -> Rbar  inverse of chi

Vectorised variants (``ChainRingSpec.pi`` etc.) act on integer arrays and
are what the rest of the package uses.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass

import numpy as np

__all__ = [
    "ChainRingSpec",
    "Level",
    "RingElement",
    "ring_arith",
    "valuation",
    "unit_inverse",
    "teichmuller_set",
    "gamma_digits",
    "pi_scalar",
    "iota_scalar",
    "chi_scalar",
    "psi_scalar",
]

MAX_PRIME = 2**16
_INT64_SAFE = 2**31  # products of residues below this fit in int64


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def int_dtype(modulus: int) -> type | np.dtype:
    """numpy dtype able to hold products of residues mod ``modulus``."""
    return np.int64 if modulus <= _INT64_SAFE else object


class Level(enum.Enum):
    """Which ring an element lives in: R = Z_{p^s} or Rbar = Z_{p^r}."""

    R = "R"
    RBAR = "Rbar"


@dataclass(frozen=True)
class ChainRingSpec:
    """The triple (p, s, r) fixing R = Z_{p^s} and Rbar = Z_{p^r}."""

    p: int
    s: int
    r: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or not _is_prime(self.p):
            raise ValueError(f"p = {self.p!r} is not prime")
        if self.p > MAX_PRIME:
            raise ValueError(f"p = {self.p} exceeds {MAX_PRIME}")
        if self.s < 1:
            raise ValueError("s must be at least 1")
        if not 1 <= self.r <= self.s:
            raise ValueError(f"need 1 <= r <= s, got r={self.r}, s={self.s}")
        if self.p**self.s >= 2**63:
            raise ValueError("p^s does not fit in a signed 64-bit integer")

    def __str__(self) -> str:
        return f"Z{self.modulus}Z{self.bar_modulus}"

    @property
    def modulus(self) -> int:
        return self.p**self.s

    @property
    def bar_modulus(self) -> int:
        return self.p**self.r

    @property
    def gap(self) -> int:
        """s - r, the power of p carrying Rbar into R under chi."""
        return self.s - self.r

    def level_modulus(self, level: Level) -> int:
        return self.modulus if level is Level.R else self.bar_modulus

    def level_index(self, level: Level) -> int:
        return self.s if level is Level.R else self.r

    @property
    def dtype(self):
        return int_dtype(self.modulus)

    # -- element constructors ------------------------------------------------

    def R(self, value: int) -> RingElement:
        return RingElement(self, Level.R, value % self.modulus)

    def Rbar(self, value: int) -> RingElement:
        return RingElement(self, Level.RBAR, value % self.bar_modulus)

    # -- Teichmuller lifts ---------------------------------------------------

    def teichmuller_lift(self, a: int, length: int | None = None) -> int:
        """Teichmuller representative of ``a mod p`` in Z_{p^length}."""
        length = self.s if length is None else length
        mod = self.p**length
        return pow(a % self.p, self.p ** (length - 1), mod)

    @functools.cached_property
    def _iota_table(self) -> np.ndarray | None:
        if self.bar_modulus > 2**16:
            return None
        return np.array(
            [_iota_int(self, x) for x in range(self.bar_modulus)], dtype=self.dtype
        )

    # -- vectorised scalar maps ----------------------------------------------

    def pi(self, x) -> np.ndarray:
        return np.asarray(x, dtype=self.dtype) % self.bar_modulus

    def iota(self, x) -> np.ndarray:
        x = np.asarray(x, dtype=self.dtype) % self.bar_modulus
        if self.p == 2:
            # Gamma(R) = {0, 1}: the lift leaves residues unchanged
            return x.copy()
        table = self._iota_table
        if table is not None:
            return table[x.astype(np.int64)]
        return np.vectorize(lambda v: _iota_int(self, int(v)), otypes=[object])(x).astype(
            self.dtype
        )

    def chi(self, x) -> np.ndarray:
        return (self.iota(x) * self.p**self.gap) % self.modulus

    def psi(self, y) -> np.ndarray:
        y = np.asarray(y, dtype=self.dtype) % self.modulus
        step = self.p**self.gap
        if np.any(y % step):
            raise ValueError("not in the image of χ")
        return (y // step) % self.bar_modulus

    def valuation_array(self, x, level: Level = Level.R) -> np.ndarray:
        """Elementwise p-adic valuation, with val(0) = nilpotency index."""
        mod = self.level_modulus(level)
        length = self.level_index(level)
        x = np.asarray(x, dtype=self.dtype) % mod
        out = np.full(x.shape, length, dtype=np.int64)
        nz = x != 0
        work = x[nz]
        v = np.zeros(work.shape, dtype=np.int64)
        for _ in range(length):
            div = work % self.p == 0
            if not np.any(div):
                break
            v += div
            work = np.where(div, work // self.p, work)
        out[nz] = v
        return out


@dataclass(frozen=True)
class RingElement:
    """A residue in Z_{p^s} (level R) or Z_{p^r} (level Rbar)."""

    spec: ChainRingSpec
    level: Level
    value: int

    def __post_init__(self) -> None:
        mod = self.spec.level_modulus(self.level)
        if not 0 <= self.value < mod:
            raise ValueError(f"{self.value} is not a canonical residue mod {mod}")

    @property
    def modulus(self) -> int:
        return self.spec.level_modulus(self.level)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"{self.value} (mod {self.modulus})"

    def __add__(self, other: RingElement) -> RingElement:
        return ring_arith(self, other, "add")

    def __sub__(self, other: RingElement) -> RingElement:
        return ring_arith(self, other, "sub")

    def __mul__(self, other: RingElement) -> RingElement:
        return ring_arith(self, other, "mul")


def ring_arith(a: RingElement, b: RingElement, op: str) -> RingElement:
    """Add, subtract or multiply two elements of the same ring."""
    if a.spec != b.spec or a.level is not b.level:
        raise ValueError("mixed-level arithmetic")
    if op == "add":
        v = a.value + b.value
    elif op == "sub":
        v = a.value - b.value
    elif op == "mul":
        v = a.value * b.value
    else:
        raise ValueError(f"unknown operation {op!r}")
    return RingElement(a.spec, a.level, v % a.modulus)


def _valuation_int(x: int, p: int, length: int) -> int:
    if x == 0:
        return length
    t = 0
    while x % p == 0 and t < length:
        x //= p
        t += 1
    return t


def valuation(x: RingElement) -> int:
    """Largest t with p^t dividing x; val(0) is the nilpotency index."""
    return _valuation_int(x.value, x.spec.p, x.spec.level_index(x.level))


def unit_inverse(x: RingElement) -> RingElement:
    if x.value % x.spec.p == 0:
        raise ValueError("not a unit")
    return RingElement(x.spec, x.level, pow(x.value, -1, x.modulus))


@functools.lru_cache(maxsize=None)
def teichmuller_set(spec: ChainRingSpec) -> frozenset[RingElement]:
    """The p roots of x^p = x in Z_{p^s}."""
    return frozenset(spec.R(spec.teichmuller_lift(a)) for a in range(spec.p))


def _digits_int(x: int, p: int, length: int) -> list[int]:
    mod = p**length
    x %= mod
    if length == 1:
        return [x]
    d0 = pow(x % p, p ** (length - 1), mod)
    rest = _digits_int(((x - d0) % mod) // p, p, length - 1)
    # lift the lower-precision Teichmuller digits back into Z_{p^length}
    return [d0] + [pow(e % p, p ** (length - 1), mod) for e in rest]


def gamma_digits(x: RingElement) -> tuple[RingElement, ...]:
    """Teichmuller digits (g_0, ..., g_{L-1}) with x = sum g_t p^t."""
    length = x.spec.level_index(x.level)
    return tuple(
        RingElement(x.spec, x.level, d) for d in _digits_int(x.value, x.spec.p, length)
    )


def _iota_int(spec: ChainRingSpec, x: int) -> int:
    digits = _digits_int(x % spec.bar_modulus, spec.p, spec.r)
    total = sum(spec.teichmuller_lift(d) * spec.p**t for t, d in enumerate(digits))
    return total % spec.modulus


def _require(x: RingElement, level: Level) -> None:
    if x.level is not level:
        raise ValueError(f"expected an element of {level.value}, got {x.level.value}")


def pi_scalar(x: RingElement) -> RingElement:
    _require(x, Level.R)
    return x.spec.Rbar(x.value)


def iota_scalar(x: RingElement) -> RingElement:
    _require(x, Level.RBAR)
    return x.spec.R(_iota_int(x.spec, x.value))


def chi_scalar(x: RingElement) -> RingElement:
    _require(x, Level.RBAR)
    return x.spec.R(_iota_int(x.spec, x.value) * x.spec.p**x.spec.gap)


def psi_scalar(y: RingElement) -> RingElement:
    _require(y, Level.R)
    step = y.spec.p**y.spec.gap
    if y.value % step:
        raise ValueError("not in the image of χ")
    return y.spec.Rbar(y.value // step)
