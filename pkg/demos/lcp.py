"""Linear complementary pairs: deciding, brute-force confirmation and search."""

from chaincodes import ChainRingSpec, MixedCode, is_lcp, is_lcp_oracle, lcp_search, security_parameter
from chaincodes.code import format_mixed_matrix

spec = ChainRingSpec(2, 2, 1)
C = MixedCode(spec, 2, 0, [[1, 1]])
D = MixedCode(spec, 2, 0, [[0, 1]])
verdict = is_lcp(C, D)
print("C = <(1,1)>, D = <(0,1)> over Z4:", verdict)
print("brute force agrees:", is_lcp_oracle(C, D) == bool(verdict))
print("security parameter:", security_parameter(C, D))

# overlapping codes fail the nonsingularity test
print("C with itself:", is_lcp(C, C).reason)

print("\nseeded search over Z4Z2, alpha=2, beta=1")
for res in lcp_search(spec, 2, 1, budget=60, seed=0)[:5]:
    C_rows = format_mixed_matrix(res.code.standard_rows, 2).replace("\n", "; ")
    D_rows = format_mixed_matrix(res.partner.standard_rows, 2).replace("\n", "; ")
    print(f"security {res.security}: C = [{C_rows}]  D = [{D_rows}]")
