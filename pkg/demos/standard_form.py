"""Standard generator matrix and type of a Z_8 Z_4 code."""

from chaincodes import ChainRingSpec, MixedCode, is_free, is_weakly_free, standard_generator_matrix
from chaincodes.code import format_mixed_matrix

spec = ChainRingSpec(2, 3, 2)
G = [
    [7, 6, 5, 4, 1, 2, 3],
    [6, 4, 0, 2, 2, 0, 1],
    [4, 4, 2, 4, 0, 1, 2],
    [2, 6, 6, 2, 1, 0, 1],
]
C = MixedCode(spec, 4, 3, G)
form, ctype = standard_generator_matrix(C)

print("input generators")
print(format_mixed_matrix(C.generator_matrix, C.alpha))
print("\nchi image, reduced over Z_8")
print(C.chi_form.matrix.data)
print("\nstandard rows")
print(format_mixed_matrix(C.standard_rows, C.alpha))
print("\ntype", ctype)
print("dimension", C.dimension, "size", C.size)
print("weakly-free", is_weakly_free(C), "free", is_free(C))
