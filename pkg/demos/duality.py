"""Dual codes and parity-check matrices."""

from chaincodes import (
    ChainRingSpec,
    MixedCode,
    dual,
    inner_product,
    parity_check_weakly_free,
)
from chaincodes.code import format_mixed_matrix

spec = ChainRingSpec(2, 3, 2)
C = MixedCode(spec, 4, 3, [
    [1, 0, 3, 2, 0, 0, 0],
    [0, 6, 6, 0, 1, 0, 0],
    [0, 4, 2, 0, 0, 1, 0],
    [0, 0, 2, 0, 0, 0, 1],
])
H = parity_check_weakly_free(C)
print("parity-check matrix")
print(format_mixed_matrix(H, C.alpha))

Cp = dual(C)
print("\ndual type", Cp.code_type, "dual dimension", Cp.dimension)
print("dim C + dim C-perp =", C.dimension + Cp.dimension, "=", C.ambient_dimension)
print("double dual equals C:", dual(Cp) == C)
print("generators orthogonal to C:", all(inner_product(g, h) == 0 for g in C.generators for h in Cp.generators))

# a code with a fallback pivot is weakly-free by type but has no parity-check matrix
odd = MixedCode(spec, 1, 1, [[2, 0]])
print("\n<(2|0)> type", odd.code_type, "fallback pivots", odd.chi_form.fallback_pivots)
try:
    parity_check_weakly_free(odd)
except ValueError as exc:
    print("parity_check_weakly_free refused:", exc)
