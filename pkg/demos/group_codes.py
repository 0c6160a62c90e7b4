"""Product group codes in Z4[C2] x Z2[C2] and the LCP equivalence."""

import itertools

from chaincodes import (
    ChainRingSpec,
    GroupSpec,
    MixedCode,
    enumerate_group_codes,
    ideal_generated,
    is_group_code,
    is_lcp,
    split_separable,
    verify_equivalence_theorem,
)

spec = ChainRingSpec(2, 2, 1)
H, K = GroupSpec.cyclic(2), GroupSpec.cyclic(2)

span = MixedCode(spec, 2, 2, [[1, 1, 1, 1]])
print("span{(1,1|1,1)} is a group code:", is_group_code(span, H, K))
I = ideal_generated(span, H, K)
print("ideal it generates:", repr(I))
C1, C2 = split_separable(I, H, K)
print("splits as", repr(C1), "x", repr(C2))

codes, n_sub = enumerate_group_codes(spec, H, K)
print(f"\n{n_sub} submodules, {len(codes)} group codes")
for C, D in itertools.product(codes, repeat=2):
    if is_lcp(C, D):
        print("LCP", repr(C), "|", repr(D), "witness", verify_equivalence_theorem(C, D, H, K))
