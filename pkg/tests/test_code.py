import itertools

import numpy as np
import pytest

from chaincodes import (
    ChainRingSpec,
    EnumerationBudgetError,
    MixedCode,
    MixedVector,
    chi_vec,
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
)
from chaincodes.code import intersection_bruteforce
from chaincodes.oracle import oracle_codes_equal, oracle_dual, oracle_inner, oracle_word_set

from conftest import EX2_CHI, EX2_G, EX2_STANDARD, EX3_PARITY

SPECS = [ChainRingSpec(2, 2, 1), ChainRingSpec(2, 3, 2), ChainRingSpec(3, 2, 1), ChainRingSpec(2, 3, 1)]


def vec(spec, alpha, beta, entries):
    return MixedVector.from_entries(spec, alpha, beta, entries)


def small_shapes(spec, limit=12):
    return [
        (a, b)
        for a in range(4)
        for b in range(4)
        if a + b > 0 and spec.s * a + spec.r * b <= limit
    ]


def random_codes(n, seed, weakly_free=True, limit=12):
    rng = np.random.default_rng(seed)
    for i in range(n):
        spec = SPECS[i % len(SPECS)]
        shapes = small_shapes(spec, limit)
        alpha, beta = shapes[int(rng.integers(len(shapes)))]
        if weakly_free:
            yield random_weakly_free_code(spec, alpha, beta, rng)
        else:
            yield random_code(spec, alpha, beta, rng)


# ---------------------------------------------------------------------------
# vectors and maps


def test_mixed_vector_invariants(z8z4):
    v = vec(z8z4, 2, 1, [9, -1, 5])
    assert v.r_part == (1, 7) and v.rbar_part == (1,)
    assert str(v) == "(1 7 | 1)"
    with pytest.raises(ValueError):
        MixedVector(z8z4, 2, 1, (1,), (1,))
    with pytest.raises(ValueError):
        vec(z8z4, 2, 1, [1, 2])
    w = vec(z8z4, 2, 1, [7, 1, 3])
    assert (v + w).entries.tolist() == [0, 0, 0]
    assert (v - w).entries.tolist() == [2, 6, 2]
    assert w.weight == 3


def test_scalar_action_examples(z8z4):
    v = vec(z8z4, 4, 3, [1, 0, 3, 2, 1, 2, 3])
    assert scalar_action(1, v) == v
    assert scalar_action(2, v).entries.tolist() == [2, 0, 6, 4, 2, 0, 2]
    assert scalar_action(z8z4.R(2), v) == 2 * v
    ones = vec(z8z4, 4, 3, [0, 0, 0, 0, 1, 1, 1])
    assert scalar_action(4, ones) == MixedVector.zero(z8z4, 4, 3)
    with pytest.raises(ValueError):
        scalar_action(z8z4.Rbar(1), v)


def test_chi_psi_examples(z8z4):
    v = vec(z8z4, 4, 3, [7, 6, 5, 4, 1, 2, 3])
    assert chi_vec(v).tolist() == [7, 6, 5, 4, 2, 4, 6]
    assert chi_vec(MixedVector.zero(z8z4, 4, 3)).tolist() == [0] * 7
    assert chi_vec(vec(z8z4, 4, 3, [0, 0, 0, 0, 3, 0, 0])).tolist() == [0, 0, 0, 0, 6, 0, 0]
    assert psi_vec([7, 6, 5, 4, 2, 4, 6], 4, 3, z8z4) == v
    assert psi_vec([0] * 7, 4, 3, z8z4) == MixedVector.zero(z8z4, 4, 3)
    with pytest.raises(ValueError, match="image"):
        psi_vec([0, 0, 0, 0, 0, 0, 3], 4, 3, z8z4)


def test_chi_rows_of_example_matrix(z8z4):
    rows = [chi_vec(vec(z8z4, 4, 3, g)).tolist() for g in EX2_G]
    assert rows == EX2_CHI


def test_iota_varphi_examples(z8z4):
    assert iota_vec(vec(z8z4, 4, 3, [0, 0, 0, 0, 3, 0, 0])).tolist() == [0, 0, 0, 0, 3, 0, 0]
    assert varphi_vec([1, 2, 3, 4, 5, 6, 7], 4, 3, z8z4) == vec(z8z4, 4, 3, [1, 2, 3, 4, 1, 2, 3])
    assert iota_vec(MixedVector.zero(z8z4, 4, 3)).tolist() == [0] * 7


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_vector_maps_invert_exhaustively(spec):
    for alpha, beta in [(1, 1), (2, 1), (1, 2), (2, 2)]:
        if spec.s * alpha + spec.r * beta > 10:
            continue
        radices = [spec.modulus] * alpha + [spec.bar_modulus] * beta
        for entries in itertools.product(*(range(m) for m in radices)):
            v = vec(spec, alpha, beta, entries)
            assert psi_vec(chi_vec(v), alpha, beta, spec) == v
            assert varphi_vec(iota_vec(v), alpha, beta, spec) == v


def test_lemma3_inner_product_equalities():
    rng = np.random.default_rng(7)
    count = 0
    for i in range(1200):
        spec = SPECS[i % len(SPECS)]
        alpha, beta = int(rng.integers(0, 5)), int(rng.integers(0, 5))
        u = vec(spec, alpha, beta, list(rng.integers(0, spec.modulus, alpha)) + list(rng.integers(0, spec.bar_modulus, beta)))
        v = vec(spec, alpha, beta, list(rng.integers(0, spec.modulus, alpha)) + list(rng.integers(0, spec.bar_modulus, beta)))
        ip = inner_product(u, v)
        a = int(iota_vec(u) @ chi_vec(v)) % spec.modulus
        b = int(chi_vec(u) @ iota_vec(v)) % spec.modulus
        assert ip == a == b == int(oracle_inner(spec, alpha, u.entries, v.entries))
        count += 1
    assert count >= 1000


def test_inner_product_examples(z8z4):
    assert inner_product(vec(z8z4, 4, 3, [1, 0, 3, 2, 0, 0, 0]), vec(z8z4, 4, 3, [6, 0, 0, 1, 0, 0, 0])) == 0
    assert inner_product(vec(z8z4, 4, 3, [0, 6, 6, 0, 1, 0, 0]), vec(z8z4, 4, 3, [0, 1, 0, 0, 1, 2, 0])) == 0
    e1 = vec(z8z4, 4, 3, [1, 0, 0, 0, 0, 0, 0])
    assert inner_product(e1, e1) == 1
    with pytest.raises(ValueError):
        inner_product(e1, vec(z8z4, 3, 4, [1, 0, 0, 0, 0, 0, 0]))


# ---------------------------------------------------------------------------
# standard form, type, dimension


def test_standard_form_of_example(ex2):
    form, ctype = standard_generator_matrix(ex2)
    assert str(ctype) == "(4,3; 1 | 3, 0)"
    assert (ctype.mu, ctype.rho) == (1, 3)
    assert is_weakly_free(ex2)
    assert MixedCode(ex2.spec, 4, 3, form.matrix.data) == ex2
    assert dimension(ex2) == 9
    assert len(enumerate_codewords(ex2)) == 512


def test_ambient_and_zero_types(z8z4):
    amb = MixedCode.ambient(z8z4, 4, 3)
    assert str(amb.code_type) == "(4,3; 4 | 3, 0)"
    assert amb.dimension == 18
    assert is_separable(amb) and not is_free(amb)
    assert is_free(MixedCode.ambient(z8z4, 4, 0))
    zero = MixedCode.zero(z8z4, 4, 3)
    assert zero.code_type.ks == (0, 0, 0) and zero.dimension == 0


def test_separability_example(z8z4):
    C = MixedCode(z8z4, 1, 1, [[1, 1]])
    assert not is_separable(C)
    assert C.size == 8
    assert product_code(project_r(C), project_rbar(C)).size == 32


def test_standard_rows_generate_the_code():
    for C in random_codes(60, seed=1, weakly_free=False):
        form, ctype = standard_generator_matrix(C)
        assert oracle_word_set(MixedCode(C.spec, C.alpha, C.beta, form.matrix.data)) == oracle_word_set(C)
        assert len(oracle_word_set(C)) == C.spec.p ** ctype.dimension
        assert ctype.mu + ctype.rho <= C.alpha + C.beta
        if not form.fallback_pivots:
            assert ctype.mu <= C.alpha and ctype.rho <= C.beta
        # the staircase uses a permutation that keeps the two blocks apart
        perm = form.permutation
        assert sorted(perm[: C.alpha]) == list(range(C.alpha))


def test_rho_can_exceed_beta_without_rbar_pivots(z4z2):
    C = MixedCode(z4z2, 2, 0, [[2, 2]])
    assert C.code_type.ks == (0, 1)
    assert C.code_type.rho == 1 > C.beta
    assert C.chi_form.fallback_pivots == (0,)


def test_random_weakly_free_codes_are_weakly_free():
    for C in random_codes(200, seed=2):
        assert is_weakly_free(C)
        assert not C.chi_form.fallback_pivots


# ---------------------------------------------------------------------------
# duality


def test_dual_trivial_cases(z8z4):
    amb, zero = MixedCode.ambient(z8z4, 2, 2), MixedCode.zero(z8z4, 2, 2)
    assert dual(amb) == zero
    assert dual(zero) == amb


def test_dual_of_example_standard_matrix(ex2_standard):
    D = dual(ex2_standard)
    assert str(D.code_type) == "(4,3; 3 | 0, 0)"
    assert D == MixedCode(ex2_standard.spec, 4, 3, EX3_PARITY)


def test_parity_check_examples(ex2_standard, z8z4):
    H = parity_check_weakly_free(ex2_standard)
    assert H.tolist() == EX3_PARITY
    free = MixedCode(z8z4, 3, 2, [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0]])
    Hf = parity_check_weakly_free(free)
    assert MixedCode(z8z4, 3, 2, Hf) == MixedCode(z8z4, 3, 2, np.eye(5, dtype=int)[2:])
    assert parity_check_weakly_free(MixedCode.ambient(z8z4, 3, 2)).shape == (0, 5)


def test_parity_check_rejects_non_weakly_free(z8z4):
    with pytest.raises(ValueError, match="parity-check formula requires weakly-free"):
        parity_check_weakly_free(MixedCode(z8z4, 2, 0, [[4, 0]]))


def test_type_only_weakly_free_code_without_block_shape(z8z4):
    # <(2 | 0)> has type (1,1; 0 | 1, 0) but its valuation-1 pivot cannot sit in
    # the Rbar block, and its dual is not weakly-free
    C = MixedCode(z8z4, 1, 1, [[2, 0]])
    assert is_weakly_free(C)
    assert C.chi_form.fallback_pivots == (0,)
    D = dual(C)
    assert str(D.code_type) == "(1,1; 0 | 1, 1)"
    assert not is_weakly_free(D)
    assert oracle_codes_equal(D, oracle_dual(C))
    assert C.dimension + D.dimension == C.ambient_dimension
    with pytest.raises(ValueError, match="requires weakly-free"):
        parity_check_weakly_free(C)


def test_dual_orthogonal_and_matches_oracle():
    for C in random_codes(80, seed=3, weakly_free=False, limit=10):
        D = dual(C)
        words_c = enumerate_codewords(C)
        words_d = enumerate_codewords(D)
        ips = oracle_inner(C.spec, C.alpha, words_c[:, None, :], words_d[None, :, :])
        assert not np.any(ips)
        assert oracle_codes_equal(D, oracle_dual(C))


def test_weakly_free_duality_corollary():
    for C in random_codes(150, seed=4):
        D = dual(C)
        assert is_weakly_free(D)
        assert C.dimension + D.dimension == C.ambient_dimension
        assert dual(D) == C
        t = C.code_type
        expected = [0] * C.spec.s
        expected[0] += C.alpha - t.mu
        expected[C.spec.gap] += C.beta - t.rho
        assert list(D.code_type.ks) == expected
        H = parity_check_weakly_free(C)
        assert MixedCode(C.spec, C.alpha, C.beta, H) == D


def test_general_codes_duality_observed(capsys):
    stats = {"instances": 0, "dims add up": 0, "double dual": 0, "dual weakly-free": 0, "weakly-free": 0}
    for C in random_codes(150, seed=5, weakly_free=False):
        D = dual(C)
        stats["instances"] += 1
        stats["dims add up"] += C.dimension + D.dimension == C.ambient_dimension
        stats["double dual"] += dual(D) == C
        stats["weakly-free"] += is_weakly_free(C)
        stats["dual weakly-free"] += is_weakly_free(D)
    with capsys.disabled():
        print("\ngeneral codes, observed:", stats)
    assert stats["instances"] == 150


def test_sum_intersection_corollary():
    rng = np.random.default_rng(6)
    for i in range(120):
        spec = SPECS[i % len(SPECS)]
        shapes = small_shapes(spec, 10)
        alpha, beta = shapes[int(rng.integers(len(shapes)))]
        make = random_weakly_free_code if i % 2 else random_code
        C, D = make(spec, alpha, beta, rng), make(spec, alpha, beta, rng)
        lhs = dual(sum_codes(C, D))
        rhs = intersection(dual(C), dual(D))
        assert oracle_word_set(lhs) == oracle_word_set(rhs)
        I = intersection(C, D)
        assert oracle_word_set(I) == oracle_word_set(C) & oracle_word_set(D)
        assert I == intersection_bruteforce(C, D)
        assert sum_codes(C, D).dimension + I.dimension == C.dimension + D.dimension


def test_separable_duals():
    rng = np.random.default_rng(8)
    checked = 0
    for i in range(100):
        spec = SPECS[i % len(SPECS)]
        alpha, beta = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        C1 = random_code(spec, alpha, 0, rng)
        C2 = random_code(spec, 0, beta, rng)
        C = product_code(C1, C2)
        assert is_separable(C)
        D = dual(C)
        assert is_separable(D)
        assert D == product_code(dual(C1), dual(C2))
        checked += 1
    assert checked == 100


# ---------------------------------------------------------------------------
# enumeration, membership, distances


def test_enumeration_examples(ex2, z4z2):
    assert len(enumerate_codewords(ex2)) == 512
    assert enumerate_codewords(MixedCode.zero(z4z2, 2, 1)).tolist() == [[0, 0, 0]]
    assert len(enumerate_codewords(MixedCode.ambient(z4z2, 1, 1))) == 8
    with pytest.raises(EnumerationBudgetError, match="enumeration budget"):
        enumerate_codewords(ex2, budget=100)


def test_membership_agrees_with_enumeration():
    for C in random_codes(40, seed=9, weakly_free=False, limit=8):
        words = oracle_word_set(C)
        radices = [C.spec.modulus] * C.alpha + [C.spec.bar_modulus] * C.beta
        for idx, entries in enumerate(itertools.product(*(range(m) for m in radices))):
            assert contains(C, np.array(entries)) == (idx in words)


def test_sum_intersection_examples():
    Z4 = ChainRingSpec(2, 2, 1)
    C = MixedCode(Z4, 2, 0, [[1, 1]])
    D = MixedCode(Z4, 2, 0, [[1, 3]])
    I = intersection(C, D)
    assert I == MixedCode(Z4, 2, 0, [[2, 2]]) and I.dimension == 1
    assert sum_codes(C, D).dimension == 3 == C.dimension + D.dimension - I.dimension
    assert intersection(C, C) == C and sum_codes(C, C) == C


def test_min_distance_examples(z8z4, ex2_standard):
    assert min_distance(MixedCode.ambient(z8z4, 3, 2)) == 1
    assert min_distance(MixedCode.zero(z8z4, 3, 2)) == 6
    words = enumerate_codewords(ex2_standard)
    weights = np.count_nonzero(words, axis=1)
    assert min_distance(ex2_standard) == weights[weights > 0].min()


def test_code_equality_and_order(z8z4):
    C = MixedCode(z8z4, 2, 1, [[1, 1, 1]])
    D = MixedCode(z8z4, 2, 1, [[3, 3, 3], [2, 2, 2]])
    assert C == D and C <= D and D <= C
    assert MixedCode(z8z4, 2, 1, [[2, 2, 2]]) <= C
    assert C != MixedCode.ambient(z8z4, 2, 1)
    assert vec(z8z4, 2, 1, [5, 5, 1]) in C
    with pytest.raises(TypeError):
        hash(C)
