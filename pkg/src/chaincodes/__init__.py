"""Mixed-alphabet linear codes over Z_{p^s} x Z_{p^r}.

Standard forms, types, duals, linear complementary pairs and product group
codes, with brute-force oracles for desk-scale cross-checks.
"""

from .ring import (
    ChainRingSpec,
    Level,
    RingElement,
    chi_scalar,
    gamma_digits,
    iota_scalar,
    pi_scalar,
    psi_scalar,
    teichmuller_set,
    unit_inverse,
    valuation,
)
from .matrix import (
    RingMatrix,
    StandardForm,
    is_nonsingular,
    rank_mod_p,
    right_kernel,
    row_reduce_standard,
)
from .code import (
    CodeType,
    EnumerationBudgetError,
    MixedCode,
    MixedVector,
    chi_vec,
    codeword_set,
    contains,
    dimension,
    dual,
    enumerate_codewords,
    inner_product,
    intersection,
    iota_vec,
    is_free,
    is_separable,
    is_weakly_free,
    min_distance,
    parity_check_weakly_free,
    product_code,
    project_r,
    project_rbar,
    psi_vec,
    random_code,
    random_weakly_free_code,
    scalar_action,
    standard_generator_matrix,
    sum_codes,
    varphi_vec,
    weight_distribution,
)
from .lcp import LcpResult, LcpVerdict, is_lcp, is_lcp_oracle, lcp_search, security_parameter
from .group import (
    GroupSpec,
    apply_block_permutation,
    enumerate_group_codes,
    enumerate_submodules,
    ideal_generated,
    is_group_code,
    shift_action,
    split_separable,
    verify_equivalence_theorem,
)
from .oracle import OracleReport, oracle_direct_sum, oracle_dual
from .codefile import CodeFile, CodeFileError, dump_code_file, load_code_file, parse_code_file

__version__ = "0.1.0"
