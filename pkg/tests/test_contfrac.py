import math
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ellalg.contfrac import (
    NCF,
    Slope,
    combinatorial_n,
    d,
    evaluate,
    expand,
    sequences,
    slope_via_sl2,
)


def brute_force_d(entries):
    """Determinant via explicit cofactor expansion (independent oracle)."""
    entries = list(entries)
    g = len(entries)
    if g == 0:
        return 1
    if g == 1:
        return entries[0]
    # expand along the last row: only two nonzero entries
    return entries[-1] * brute_force_d(entries[:-1]) - brute_force_d(entries[:-2])


def d_range(entries, lo, hi):
    """d(n_lo, ..., n_hi) (1-based, inclusive); length -1 gives 0."""
    if hi - lo + 1 < 0:
        return 0
    return d(entries[lo - 1 : hi])


def brute_force_combinatorial(entries):
    """Literal enumeration of the parity-qualifying subsequences."""
    g = len(entries)
    total = 0
    for j in range(0, g + 1):
        if j % 2 != g % 2:
            continue
        for idxs in combinations(range(1, g + 1), j):
            if j > 0 and idxs[0] % 2 == 0:
                continue
            if any((idxs[m + 1] - idxs[m]) % 2 == 0 for m in range(j - 1)):
                continue
            if j > 0 and idxs[-1] % 2 != g % 2:
                continue
            prod = 1
            for i in idxs:
                prod *= entries[i - 1]
            total += (-1) ** ((g - j) // 2) * prod
    return total


small_int = st.integers(min_value=-6, max_value=6)
ncf_entries = st.lists(st.integers(min_value=2, max_value=7), min_size=1, max_size=8)


class TestSlopeAndNCFValidation:
    def test_slope_rejects_noncoprime(self):
        with pytest.raises(ValueError):
            Slope(6, 3)

    def test_slope_rejects_k_ge_n(self):
        with pytest.raises(ValueError):
            Slope(3, 3)

    def test_ncf_rejects_small_entries(self):
        with pytest.raises(ValueError):
            NCF((2, 1, 3))

    def test_ncf_rejects_empty(self):
        with pytest.raises(ValueError):
            NCF(())


class TestD:
    def test_empty(self):
        assert d(()) == 1

    def test_single(self):
        assert d((5,)) == 5

    def test_pair(self):
        assert d((3, 3)) == 8

    def test_le_nkk_example(self):
        # (2,3,4): d(2,3) d(3,4) = 5*11 = 55 = 3*18 + 1
        assert d((2, 3)) * d((3, 4)) == d((3,)) * d((2, 3, 4)) + 1

    @given(st.lists(small_int, max_size=7))
    def test_matches_cofactor_expansion(self, entries):
        assert d(entries) == brute_force_d(entries)

    @given(st.lists(small_int, max_size=8))
    def test_symmetry_under_reversal(self, entries):
        assert d(entries) == d(entries[::-1])

    @given(st.lists(small_int, min_size=1, max_size=8))
    def test_le_nkk_identity(self, entries):
        g = len(entries)
        lhs = d_range(entries, 1, g - 1) * d_range(entries, 2, g)
        rhs = d_range(entries, 2, g - 1) * d_range(entries, 1, g) + 1
        assert lhs == rhs

    @given(st.lists(small_int, min_size=1, max_size=8), st.data())
    def test_cofactor_identity_each_split(self, entries, data):
        # d(full) = n_i d(head) d(tail) - d(head less one) d(tail)
        #           - d(head) d(tail less one)
        g = len(entries)
        i = data.draw(st.integers(min_value=1, max_value=g))
        rhs = (
            entries[i - 1] * d_range(entries, 1, i - 1) * d_range(entries, i + 1, g)
            - d_range(entries, 1, i - 2) * d_range(entries, i + 1, g)
            - d_range(entries, 1, i - 1) * d_range(entries, i + 2, g)
        )
        assert d(entries) == rhs


class TestExpandEvaluate:
    def test_8_3(self):
        assert expand(Slope(8, 3)).entries == (3, 3)

    def test_4_3(self):
        assert expand(Slope(4, 3)).entries == (2, 2, 2)

    def test_k_1_single_entry(self):
        assert expand(Slope(5, 1)).entries == (5,)

    def test_evaluate_pair(self):
        assert evaluate(NCF((3, 3))) == Slope(8, 3)

    def test_evaluate_triple(self):
        assert evaluate(NCF((2, 2, 5))) == Slope(13, 9)

    def test_evaluate_single(self):
        assert evaluate(NCF((7,))) == Slope(7, 1)

    @given(st.integers(min_value=2, max_value=200), st.data())
    def test_roundtrip(self, n, data):
        k = data.draw(
            st.sampled_from([k for k in range(1, n) if math.gcd(n, k) == 1])
        )
        assert evaluate(expand(Slope(n, k))) == Slope(n, k)

    @given(ncf_entries)
    def test_reversal_gives_inverse_slope(self, entries):
        f = NCF(tuple(entries))
        s = evaluate(f)
        seqs = sequences(f)
        assert evaluate(f.reversed()) == Slope(s.n, seqs.k_prime)


class TestSequences:
    def test_3_3(self):
        seqs = sequences(NCF((3, 3)))
        assert seqs.k_seq == (8, 3, 1, 0)
        assert seqs.l_seq == (0, 1, 3, 8)
        assert seqs.k_prime == 3

    def test_single(self):
        seqs = sequences(NCF((6,)))
        assert seqs.k_seq == (6, 1, 0)
        assert seqs.l_seq == (0, 1, 6)
        assert seqs.k_prime == 1

    @given(ncf_entries)
    def test_invariants(self, entries):
        f = NCF(tuple(entries))
        s = evaluate(f)
        seqs = sequences(f)
        g = f.g
        n, k = s.n, s.k
        ks, ls = seqs.k_seq, seqs.l_seq
        assert ks[0] == n and ks[1] == k and ks[g] == 1 and ks[g + 1] == 0
        assert ls[0] == 0 and ls[1] == 1 and ls[g] == seqs.k_prime and ls[g + 1] == n
        for i in range(1, g + 1):
            assert ks[i] * entries[i - 1] == ks[i - 1] + ks[i + 1]
            assert ls[i] * entries[i - 1] == ls[i - 1] + ls[i + 1]
        for i in range(0, g + 1):
            assert math.gcd(ks[i], ks[i + 1]) == 1
            assert math.gcd(ls[i], ls[i + 1]) == 1
        assert (k * seqs.k_prime) % n == 1
        assert n > seqs.k_prime >= 1

    @given(ncf_entries)
    def test_tail_and_head_continued_fractions(self, entries):
        # k_{i-1}/k_i = [n_i..n_g] and l_{i+1}/l_i = [n_i..n_1]
        f = NCF(tuple(entries))
        seqs = sequences(f)
        g = f.g
        for i in range(1, g + 1):
            tail = NCF(tuple(entries[i - 1 :]))
            assert (seqs.k_seq[i - 1], seqs.k_seq[i]) == (
                d(tail.entries),
                d(tail.entries[1:]),
            )
            head = NCF(tuple(entries[i - 1 :: -1]))
            assert (seqs.l_seq[i + 1], seqs.l_seq[i]) == (
                d(head.entries),
                d(head.entries[1:]),
            )


class TestCombinatorialN:
    def test_3_3(self):
        assert combinatorial_n(NCF((3, 3))) == 8

    def test_single(self):
        assert combinatorial_n(NCF((9,))) == 9

    def test_2_2_2(self):
        assert combinatorial_n(NCF((2, 2, 2))) == 4

    @given(st.lists(st.integers(min_value=2, max_value=6), min_size=1, max_size=8))
    def test_matches_enumeration(self, entries):
        assert combinatorial_n(NCF(tuple(entries))) == brute_force_combinatorial(entries)

    @given(ncf_entries)
    def test_equals_n(self, entries):
        f = NCF(tuple(entries))
        assert combinatorial_n(f) == evaluate(f).n


class TestSlopeViaSL2:
    def test_3_3(self):
        s, (rank, deg) = slope_via_sl2(NCF((3, 3)))
        assert s == Slope(8, 3)
        assert (rank, deg) == (3, 8)

    def test_single(self):
        s, (rank, deg) = slope_via_sl2(NCF((5,)))
        assert s == Slope(5, 1)
        assert (rank, deg) == (1, 5)

    @given(ncf_entries)
    @settings(max_examples=60)
    def test_rank_degree_is_k_n(self, entries):
        f = NCF(tuple(entries))
        s = evaluate(f)
        s2, (rank, deg) = slope_via_sl2(f)
        assert s2 == s
        assert (rank, deg) == (s.k, s.n)
