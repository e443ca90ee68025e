import pytest
from hypothesis import given, strategies as st

from oracles import valuation
from wcatalan.catalan import catalan, q_catalan
from wcatalan.valuation import (NonMemberError, catalan_residues, digit_sum, double_factorial,
                                is_prime, predicted_block_length, verify_classical,
                                verify_weighted, xi, zero_blocks, zero_runs)
from wcatalan.weights import geometric, odd_squares, polynomial

nonzero = st.integers(-10 ** 30, 10 ** 30).filter(bool)


@pytest.mark.parametrize("m,base,expected", [
    (12, 2, 2), (325, 2, 0), (8, 2, 3), (-8, 2, 3), (45, 3, 2), (250, 5, 3), (7, 7, 1),
])
def test_xi(m, base, expected):
    assert xi(m, base) == expected


def test_xi_zero():
    with pytest.raises(ValueError):
        xi(0)


@given(nonzero, st.sampled_from([2, 3, 5, 10]))
def test_xi_matches_division_loop(m, base):
    assert xi(m, base) == valuation(m, base)


@given(nonzero, nonzero)
def test_xi_additive(a, b):
    assert xi(a * b) == xi(a) + xi(b)


@pytest.mark.parametrize("n,expected", [(7, 3), (4, 1), (0, 0), (1023, 10)])
def test_digit_sum(n, expected):
    assert digit_sum(n) == expected


@given(st.integers(0, 10 ** 20))
def test_digit_sum_recursion(n):
    assert digit_sum(2 * n) == digit_sum(n)
    assert digit_sum(2 * n + 1) == digit_sum(n) + 1


def test_digit_sum_other_base():
    assert digit_sum(10, 3) == 2  # 101_3
    assert digit_sum(255, 16) == 30


def test_double_factorial():
    assert [double_factorial(m) for m in (-1, 0, 1, 3, 5, 7)] == [1, 1, 1, 3, 15, 105]


def test_verify_classical_examples():
    reports = verify_classical(16)
    assert (reports[3].xi, reports[3].predicted) == (0, 0)
    assert (reports[4].xi, reports[4].predicted) == (1, 1)
    assert all(r.match for r in reports)
    for k in range(5):
        assert reports[2 ** k - 1].xi == 0


def test_catalan_odd_iff_mersenne_index():
    odd = [n for n in range(600) if catalan(n) % 2]
    assert odd == [2 ** k - 1 for k in range(10) if 2 ** k - 1 < 600]


def test_verify_weighted_examples():
    r = verify_weighted(2, odd_squares())[2]
    assert (r.xi, r.predicted, r.match) == (1, 1, True)
    r = verify_weighted(3, geometric(5))[3]
    assert (r.xi, r.predicted) == (0, 0) and q_catalan(3, 5) == 161


def test_negative_control():
    b = polynomial([1, 2])
    with pytest.raises(NonMemberError) as info:
        verify_weighted(10, b)
    assert info.value.verdict.witness == (1, 0, 2)
    r = verify_weighted(2, b, check=False)[2]
    assert (r.xi, r.predicted, r.match) == (2, 1, False)


def test_verify_weighted_sweeps():
    assert all(r.match for r in verify_weighted(120, odd_squares()))
    assert all(r.match for r in verify_weighted(120, geometric(5)))


def test_report_serialization():
    d = verify_classical(4)[4].to_dict()
    assert d == {"n": 4, "xi": 1, "predicted": 1, "match": True}


def test_is_prime():
    assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_predicted_block_lengths():
    assert predicted_block_length(3, 1) == 3
    assert predicted_block_length(3, 2) == 12
    assert predicted_block_length(5, 1) == 1
    assert predicted_block_length(5, 3) == 11
    assert predicted_block_length(2, 4) == 15


def test_zero_runs():
    assert zero_runs([1, 0, 0, 2, 0, 1, 0]) == [(1, 2, True), (4, 1, True), (6, 1, False)]
    assert zero_runs([1, 2]) == []


def test_first_block_mod_3():
    res = catalan_residues(3, 8)
    assert res[5:8] == [0, 0, 0] and res[8] != 0 and all(res[:5])
    first = zero_blocks(3, 1000, 5)[0]
    assert (first.start, first.observed, first.predicted, first.match) == (5, 3, 3, True)


def test_first_block_mod_5():
    first = zero_blocks(5, 200, 1)[0]
    assert first.observed == first.predicted == 1


def test_mod_2_blocks():
    reports = zero_blocks(2, 2100, 12)
    assert [r.observed for r in reports if r.complete] == [2 ** k - 1 for k in range(1, 11)]
    assert reports[-1].complete is False and reports[-1].match is None


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_blocks_match(p):
    assert all(r.match for r in zero_blocks(p, 3000, 20) if r.complete)


@pytest.mark.parametrize("p", [0, 1, 4, 9, -3])
def test_blocks_reject_non_primes(p):
    with pytest.raises(ValueError):
        zero_blocks(p, 10, 1)
