"""LinearCode tests backed by independent brute-force oracles.

The oracles here enumerate codewords with itertools over scalar field
operations, deliberately avoiding the library's vectorized span engine.
"""

import itertools

import numpy as np
import pytest

from grmcodes import gf, lincode
from grmcodes.errors import (
    CapExceeded,
    DimensionMismatch,
    EmptyCode,
    FieldMismatch,
    NotNested,
)
from grmcodes.lincode import (
    LinearCode,
    exact_difference_weight,
    exact_min_weight,
    find_first_of_weight,
    iter_span_blocks,
    kernel_basis,
    min_weight_difference,
    min_weight_support_search,
    product_span,
    rref,
)


def oracle_codewords(field, gen):
    """Every codeword of the row space, via scalar arithmetic."""
    k, n = gen.shape
    words = set()
    for msg in itertools.product(range(field.q), repeat=k):
        vec = [0] * n
        for m, row in zip(msg, gen):
            if m:
                for j in range(n):
                    vec[j] = field.add(vec[j], field.mul(m, int(row[j])))
        words.add(tuple(vec))
    return words


def oracle_min_weight(field, gen):
    return min(
        sum(1 for x in w if x) for w in oracle_codewords(field, gen) if any(w)
    )


def random_code(field, n, k_rows, rng):
    return LinearCode(field, rng.integers(0, field.q, size=(k_rows, n)).astype(np.uint8), n)


def test_rref_is_idempotent_and_canonical():
    rng = np.random.default_rng(1)
    for q in (2, 3, 4, 9):
        f = gf.get_field(q)
        for _ in range(20):
            M = rng.integers(0, q, size=(4, 7)).astype(np.uint8)
            R, piv = rref(f, M)
            R2, piv2 = rref(f, R)
            assert np.array_equal(R, R2) and piv == piv2
            for i, p in enumerate(piv):
                col = np.zeros(len(piv), dtype=np.uint8)
                col[i] = 1
                assert np.array_equal(R[:, p], col)


def test_rref_rank_matches_span_size():
    rng = np.random.default_rng(2)
    for q in (2, 3, 5):
        f = gf.get_field(q)
        for _ in range(10):
            M = rng.integers(0, q, size=(3, 5)).astype(np.uint8)
            C = LinearCode(f, M, 5)
            assert q**C.k == len(oracle_codewords(f, M))


def test_same_span_means_equal_code():
    f = gf.get_field(3)
    rows = np.array([[1, 2, 0], [0, 1, 1]], dtype=np.uint8)
    shuffled = np.array([[1, 0, 1], [0, 1, 1], [2, 2, 1]], dtype=np.uint8)
    # shuffled rows: r0+r1, r1, 2*r0+r1 all lie in the same span
    a = LinearCode(f, rows, 3)
    b = LinearCode(f, shuffled, 3)
    assert oracle_codewords(f, rows) == oracle_codewords(f, shuffled)
    assert a == b and hash(a) == hash(b)


def test_zero_and_full_codes():
    f = gf.get_field(4)
    z = LinearCode.zero_code(f, 5)
    full = LinearCode.full_space(f, 5)
    assert z.k == 0 and full.k == 5
    assert z.dual() == full and full.dual() == z
    assert z.is_subcode_of(full)
    with pytest.raises(EmptyCode):
        z.min_weight()
    assert full.min_weight() == (1, True)


def test_dual_is_involution_and_orthogonal():
    rng = np.random.default_rng(3)
    for q in (2, 3, 4, 9):
        f = gf.get_field(q)
        for _ in range(10):
            C = random_code(f, 6, 3, rng)
            D = C.dual()
            assert D.k == C.n - C.k
            assert C.dual().dual() == C
            for u in C.gen:
                for v in D.gen:
                    assert f.dot(u, v) == 0


def test_even_weight_dual_of_repetition():
    f = gf.get_field(2)
    rep = LinearCode(f, np.ones((1, 3), dtype=np.uint8), 3)
    even = rep.dual()
    assert even.k == 2
    assert all(np.count_nonzero(w) % 2 == 0 for w in oracle_codewords(f, even.gen))


def test_contains_against_oracle():
    rng = np.random.default_rng(4)
    f = gf.get_field(3)
    C = random_code(f, 5, 2, rng)
    words = oracle_codewords(f, C.gen)
    assert C.contains(np.zeros(5, dtype=np.uint8))
    for v in itertools.product(range(3), repeat=5):
        assert C.contains(np.array(v, dtype=np.uint8)) == (v in words)


def test_contains_checks_length():
    f = gf.get_field(3)
    C = LinearCode.full_space(f, 4)
    with pytest.raises(DimensionMismatch):
        C.contains(np.zeros(3, dtype=np.uint8))


def test_subcode_of_errors_and_truth():
    f = gf.get_field(2)
    a = LinearCode(f, np.array([[1, 1, 0, 0]], dtype=np.uint8), 4)
    b = LinearCode(f, np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint8), 4)
    assert a.is_subcode_of(b) and not b.is_subcode_of(a)
    with pytest.raises(FieldMismatch):
        a.is_subcode_of(LinearCode.full_space(gf.get_field(3), 4))
    with pytest.raises(DimensionMismatch):
        a.is_subcode_of(LinearCode.full_space(f, 5))


def test_span_blocks_cover_exactly_the_span_in_order():
    f = gf.get_field(3)
    rows = np.array([[1, 0, 2, 1], [0, 1, 1, 1]], dtype=np.uint8)
    seen = []
    for start, block in iter_span_blocks(f, rows):
        assert start == len(seen)
        seen.extend(tuple(int(x) for x in r) for r in block)
    assert len(seen) == 9
    assert set(seen) == oracle_codewords(f, rows)
    # lexicographic message order: index = m1*3 + m2 over canonical scalars
    for idx, word in enumerate(seen):
        m1, m2 = idx // 3, idx % 3
        expect = tuple(
            f.add(f.mul(m1, int(rows[0][j])), f.mul(m2, int(rows[1][j])))
            for j in range(4)
        )
        assert word == expect


@pytest.mark.parametrize("q", [2, 3, 4, 9])
def test_min_weight_matches_oracle(q):
    rng = np.random.default_rng(5)
    f = gf.get_field(q)
    for _ in range(8):
        C = random_code(f, 6, 3, rng)
        if C.k == 0:
            continue
        w, exact = C.min_weight()
        assert exact
        assert w == oracle_min_weight(f, C.gen)


def test_min_weight_repetition():
    f = gf.get_field(5)
    rep = LinearCode(f, np.ones((1, 7), dtype=np.uint8), 7)
    assert rep.min_weight() == (7, True)


def test_min_weight_partial_lower_bound():
    f = gf.get_field(2)
    rng = np.random.default_rng(6)
    C = random_code(f, 12, 8, rng)
    true_w, exact = C.min_weight()
    assert exact
    w, flag = C.min_weight(cap=4)  # forces the information-set path
    assert w <= true_w
    if flag:
        assert w == true_w


def test_weight_distribution_counts():
    f = gf.get_field(3)
    rep = LinearCode(f, np.ones((1, 3), dtype=np.uint8), 3)
    dist = rep.weight_distribution()
    assert dist.exact and dist.counts == (1, 0, 0, 2)
    assert dist.total() == 3
    with pytest.raises(CapExceeded):
        LinearCode.full_space(f, 20).weight_distribution(cap=100, strict=True)
    sampled = LinearCode.full_space(f, 20).weight_distribution(cap=100)
    assert not sampled.exact


def test_min_weight_equals_first_positive_distribution_index():
    rng = np.random.default_rng(7)
    for q in (2, 3, 4):
        f = gf.get_field(q)
        for _ in range(6):
            C = random_code(f, 7, 3, rng)
            if C.k == 0:
                continue
            dist = C.weight_distribution()
            assert C.min_weight()[0] == dist.min_positive_weight()
            assert dist.total() == q**C.k


def test_min_weight_difference_oracle_and_contract():
    f = gf.get_field(3)
    rng = np.random.default_rng(8)
    for _ in range(10):
        big = random_code(f, 6, 4, rng)
        if big.k < 2:
            continue
        small = LinearCode(f, big.gen[: big.k - 1], 6)
        got = min_weight_difference(big, small)
        words_big = oracle_codewords(f, big.gen)
        words_small = oracle_codewords(f, small.gen)
        expect = min(
            sum(1 for x in w if x) for w in words_big - words_small
        )
        assert got == expect
    C = LinearCode(f, np.array([[1, 1, 1]], dtype=np.uint8), 3)
    with pytest.raises(NotNested):
        min_weight_difference(C, C)
    with pytest.raises(NotNested):
        min_weight_difference(C, LinearCode.full_space(f, 3))
    # zero-code small side reduces to plain min weight
    z = LinearCode.zero_code(f, 3)
    assert exact_difference_weight(C, z) == C.min_weight()[0]
    with pytest.raises(CapExceeded):
        min_weight_difference(LinearCode.full_space(f, 10), C_pad(f, 10), cap=10)


def C_pad(f, n):
    rows = np.zeros((1, n), dtype=np.uint8)
    rows[0, 0] = 1
    return LinearCode(f, rows, n)


def test_support_search_crosschecks_span_enumeration():
    rng = np.random.default_rng(9)
    for q in (2, 3, 4):
        f = gf.get_field(q)
        for _ in range(8):
            C = random_code(f, 8, 5, rng)
            if C.k == 0:
                continue
            assert min_weight_support_search(C) == C.min_weight()[0]


def test_support_search_with_exclusion_crosschecks_difference():
    rng = np.random.default_rng(10)
    f = gf.get_field(3)
    for _ in range(8):
        big = random_code(f, 7, 5, rng)
        if big.k < 2:
            continue
        small = LinearCode(f, big.gen[: big.k - 2], 7)
        if small.k == 0:
            continue
        span_route = min_weight_difference(big, small)
        support_route = min_weight_support_search(big, exclude=small)
        assert span_route == support_route
        # the auto router picks the support route under a tiny cap
        assert exact_difference_weight(big, small, cap=1) == span_route
        assert exact_min_weight(big, cap=1) == big.min_weight()[0]


def test_find_first_of_weight_is_canonical_and_complete():
    f = gf.get_field(2)
    rows = np.array([[1, 1, 0, 0], [0, 0, 1, 1]], dtype=np.uint8)
    v = find_first_of_weight(f, rows, 2)
    # message order: (0,1) comes before (1,0) and (1,1)
    assert list(v) == [0, 0, 1, 1]
    assert find_first_of_weight(f, rows, 3) is None
    assert list(find_first_of_weight(f, rows, 0)) == [0, 0, 0, 0]


def test_product_span_properties():
    f = gf.get_field(3)
    rng = np.random.default_rng(11)
    ones = LinearCode(f, np.ones((1, 6), dtype=np.uint8), 6)
    for _ in range(6):
        A = random_code(f, 6, 2, rng)
        B = random_code(f, 6, 2, rng)
        assert product_span(A, ones) == A
        assert product_span(A, B) == product_span(B, A)
        bigger = LinearCode(f, np.vstack([A.gen, rng.integers(0, 3, size=(1, 6), dtype=np.uint8)]), 6)
        assert product_span(A, B).is_subcode_of(product_span(bigger, B))
    assert product_span(LinearCode.zero_code(f, 6), ones).k == 0


def test_product_span_matches_oracle_products():
    f = gf.get_field(4)
    rng = np.random.default_rng(12)
    A = random_code(f, 5, 2, rng)
    B = random_code(f, 5, 2, rng)
    P = product_span(A, B)
    for a in oracle_codewords(f, A.gen):
        for b in oracle_codewords(f, B.gen):
            prod = np.array([f.mul(x, y) for x, y in zip(a, b)], dtype=np.uint8)
            assert P.contains(prod)


def test_hermitian_dual_basics():
    f4 = gf.get_field(4)
    z = LinearCode.zero_code(f4, 3)
    assert z.hermitian_dual() == LinearCode.full_space(f4, 3)
    # n=1, C = span{(1)}: <1|1>_h = 1 != 0, so the Hermitian dual is zero
    C = LinearCode(f4, np.array([[1]], dtype=np.uint8), 1)
    assert C.hermitian_dual().k == 0


def test_hermitian_dual_weight_equals_euclidean_dual_weight():
    rng = np.random.default_rng(13)
    for q2 in (4, 9):
        f = gf.get_field(q2)
        for _ in range(6):
            C = random_code(f, 5, 2, rng)
            if 0 < C.k < 5:
                wh = C.hermitian_dual().min_weight()[0]
                we = C.dual().min_weight()[0]
                assert wh == we


def test_trace_code_and_restriction_examples():
    pair = gf.quadratic_extension(2)
    f4 = pair.ext
    # full space traces onto the full space; restriction of full is full
    full = LinearCode.full_space(f4, 3)
    assert full.trace_code() == LinearCode.full_space(pair.sub, 3)
    assert full.restriction() == LinearCode.full_space(pair.sub, 3)
    z = LinearCode.zero_code(f4, 3)
    assert z.trace_code().k == 0 and z.restriction().k == 0
    # D = span{(zeta, zeta)}: scaling by zeta^{-1} keeps (1,1) in D
    zeta = f4.generator
    D = LinearCode(f4, np.array([[zeta, zeta]], dtype=np.uint8), 2)
    R = D.restriction()
    assert R == LinearCode(pair.sub, np.array([[1, 1]], dtype=np.uint8), 2)


def test_restriction_codewords_are_exactly_subfield_codewords():
    rng = np.random.default_rng(14)
    for base_q in (2, 3):
        pair = gf.quadratic_extension(base_q)
        f = pair.ext
        for _ in range(6):
            D = random_code(f, 4, 2, rng)
            R = D.restriction()
            subwords = {
                w
                for w in oracle_codewords(f, D.gen)
                if all(pair.in_subfield(x) for x in w)
            }
            down = {
                tuple(int(pair.emb_inv[x]) for x in w) for w in subwords
            }
            assert oracle_codewords(pair.sub, R.gen) == down


def test_delsarte_identity_random_codes():
    rng = np.random.default_rng(15)
    for base_q in (2, 3):
        pair = gf.quadratic_extension(base_q)
        f = pair.ext
        for _ in range(20):
            n = int(rng.integers(2, 8))
            D = random_code(f, n, int(rng.integers(1, n + 1)), rng)
            assert D.trace_code().dual() == D.dual().restriction()


def test_punctured_to_and_scaled_by():
    f = gf.get_field(3)
    C = LinearCode(f, np.array([[1, 0, 1, 2], [0, 1, 1, 1]], dtype=np.uint8), 4)
    P = C.punctured_to([0, 2, 3])
    assert P.n == 3 and P.k == 2
    x = np.array([1, 2, 1, 1], dtype=np.uint8)
    S = C.scaled_by(x)
    for w in oracle_codewords(f, C.gen):
        scaled = np.array([f.mul(int(a), int(b)) for a, b in zip(w, x)], dtype=np.uint8)
        assert S.contains(scaled)


def test_kernel_basis_of_empty_matrix_is_identity():
    f = gf.get_field(3)
    K = kernel_basis(f, np.zeros((0, 4), dtype=np.uint8))
    assert np.array_equal(K, np.eye(4, dtype=np.uint8))
