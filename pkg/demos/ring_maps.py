"""Ring maps between Z_8 and Z_4.

pi reduces, iota lifts through Teichmuller digits, chi embeds Z_4 as the
ideal 2Z_8 and psi undoes chi.
"""

import numpy as np

from chaincodes import ChainRingSpec, gamma_digits

spec = ChainRingSpec(2, 3, 2)
xs = np.arange(spec.modulus)
ys = np.arange(spec.bar_modulus)

print(spec)
print("x        ", xs)
print("pi(x)    ", spec.pi(xs))
print("y        ", ys)
print("iota(y)  ", spec.iota(ys))
print("chi(y)   ", spec.chi(ys))
print("psi(chi) ", spec.psi(spec.chi(ys)))

# every element of Z_8 is sum_t gamma_t 2^t with gamma_t in {0, 1}
for x in range(spec.modulus):
    digits = [d.value for d in gamma_digits(spec.R(x))]
    print(f"{x} = " + " + ".join(f"{d}*2^{t}" for t, d in enumerate(digits)))
