import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoprimes import ArgumentError, ResourceLimitError, sieve_core
from hoprimes.higher_order import (
    iter_order_k,
    membership,
    order_k_sequence,
    order_k_upto,
    order_of_primeness,
)

from .oracles import order_td, primes_td

PRIMES_HEAD = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43]
ORDER2_HEAD = [3, 5, 11, 17, 31, 41, 59, 67, 83, 109, 127, 157]
ORDER3_HEAD = [5, 11, 31, 59, 127, 179, 277, 331, 431, 599]
ORDER4_HEAD = [11, 31, 127, 277, 709]
ORDER5_HEAD = [31, 127, 709]


@pytest.mark.parametrize("k, listing", [(1, PRIMES_HEAD), (2, ORDER2_HEAD), (3, ORDER3_HEAD), (4, ORDER4_HEAD), (5, ORDER5_HEAD)])
def test_published_prefixes(k, listing):
    seq = order_k_sequence(k, len(listing))
    assert seq.order == k
    assert list(seq.terms) == listing


def test_superprime_listing_from_introduction():
    assert order_k_sequence(2, 14).terms == (3, 5, 11, 17, 31, 41, 59, 67, 83, 109, 127, 157, 179, 191)


def test_argument_checks():
    with pytest.raises(ArgumentError):
        order_k_sequence(0, 3)
    with pytest.raises(ArgumentError):
        order_k_sequence(2, 0)
    with pytest.raises(ResourceLimitError):
        order_k_sequence(13, 1)


def test_deep_order_fails_fast_past_ceiling():
    src = sieve_core.PrimeSource(ceiling=10**5)
    with pytest.raises(ResourceLimitError):
        order_k_sequence(6, 20, source=src)


def test_first_term_of_deep_order():
    # p applied 9 times to 1: 2 3 5 11 31 127 709 5381 52711
    assert order_k_sequence(9, 1).terms == (52711,)


def test_order_of_primeness_examples():
    assert order_of_primeness(2) == 1
    assert order_of_primeness(31) == 5
    assert order_of_primeness(127) == 6


def test_order_of_primeness_matches_trial_division(td_primes_1e4):
    for p in td_primes_1e4[:400]:
        assert order_of_primeness(p) == order_td(p, td_primes_1e4)


def test_order_of_primeness_rejects_composite():
    with pytest.raises(ArgumentError):
        order_of_primeness(91)
    with pytest.raises(ArgumentError):
        membership(1, 1)


def test_membership_examples():
    assert membership(3, 2)
    assert not membership(7, 2)
    assert membership(709, 5)


def test_nesting_up_to_1e5():
    src = sieve_core.default_source()
    primes = src.primes_upto(10**5)
    orders = src.orders(primes)
    for p, o in zip(primes[:2000].tolist(), orders[:2000].tolist()):
        for k in range(1, o + 2):
            assert membership(p, k) == (k <= o)
    # membership(p, k+1) => membership(p, k) holds by construction of the sets:
    for k in range(1, 7):
        upper = set(order_k_upto(k + 1, 10**5).tolist())
        lower = set(order_k_upto(k, 10**5).tolist())
        assert upper <= lower


@pytest.mark.parametrize("k", range(1, 7))
def test_oracle_agreement_1e5(k):
    bound = 10**5
    src = sieve_core.default_source()
    primes = src.primes_upto(bound)
    by_chain = primes[src.orders(primes) >= k]
    forward = order_k_upto(k, bound)
    assert np.array_equal(by_chain, forward)
    n = len(forward)
    if n:
        assert order_k_sequence(k, n).terms == tuple(forward.tolist())
        assert all(order_of_primeness(t) >= k for t in forward[:50].tolist())


@settings(max_examples=40, deadline=None)
@given(st.integers(min_value=2, max_value=6), st.integers(min_value=1, max_value=60))
def test_generation_consistency(k, n):
    prev = order_k_sequence(k - 1, n).terms
    cur = order_k_sequence(k, n).terms
    assert cur == tuple(sieve_core.nth_prime(v) for v in prev)
    assert all(a < b for a, b in zip(cur, cur[1:]))
    assert all(sieve_core.prime_pi(t) in set(order_k_upto(k - 1, t).tolist()) for t in cur[:10])


def test_iter_order_k():
    it = iter_order_k(0)
    assert [next(it) for _ in range(5)] == [1, 2, 3, 4, 5]
    it = iter_order_k(3)
    assert [next(it) for _ in range(4)] == ORDER3_HEAD[:4]


def test_order_k_upto_small():
    assert order_k_upto(2, 100).tolist() == [x for x in ORDER2_HEAD if x <= 100]
    assert order_k_upto(5, 30).tolist() == []
    assert order_k_upto(1, 50).tolist() == primes_td(50)
