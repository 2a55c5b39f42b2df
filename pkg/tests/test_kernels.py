"""Compiled and fallback kernels, and segmented against unsegmented sieving."""
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hoprimes import _kernels, sieve_core
from hoprimes._kernels import _pykernels

BACKENDS = [_pykernels]
try:
    from hoprimes._kernels import _ckernels

    BACKENDS.append(_ckernels)
except ImportError:  # extension not built
    pass

ids = [b.__name__.rsplit(".", 1)[-1] for b in BACKENDS]


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
def test_simple_sieve_small(k):
    assert k.simple_sieve(1).tolist() == []
    assert k.simple_sieve(2).tolist() == [2]
    assert k.simple_sieve(30).tolist() == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
def test_segments_all_small_bounds(k):
    ref = _pykernels.simple_sieve(3000).tolist()
    base = k.simple_sieve(60)
    for lo in range(0, 80):
        for hi in range(lo, 400, 7):
            assert k.segment_primes(lo, hi, base).tolist() == [p for p in ref if lo <= p < hi]


@pytest.mark.parametrize("k", BACKENDS, ids=ids)
def test_chain_orders(k):
    primes = k.simple_sieve(2000)
    vals = np.array([1, 2, 3, 4, 5, 7, 11, 31, 127, 709, 1000], dtype=np.int64)
    assert k.chain_orders(primes, vals).tolist() == [0, 1, 2, 0, 3, 1, 4, 5, 6, 7, 0]


def test_backends_agree_on_large_ranges():
    if len(BACKENDS) < 2:
        pytest.skip("compiled kernels not built")
    base = _pykernels.simple_sieve(40_000)
    for lo, hi in [(0, 10**6), (10**9, 10**9 + 10**5), (99_991, 100_003)]:
        a = _pykernels.segment_primes(lo, hi, base)
        b = _ckernels.segment_primes(lo, hi, base)
        assert np.array_equal(a, b)
    primes = base
    vals = primes[:3000]
    assert np.array_equal(_pykernels.chain_orders(primes, vals), _ckernels.chain_orders(primes, vals))


def test_segmented_table_matches_unsegmented(monkeypatch):
    # small segment span forces many segments
    monkeypatch.setattr(sieve_core, "SEGMENT_SPAN", 1000)
    whole = _kernels.simple_sieve(10**6)
    for bound in [0, 1, 2, 3, 999, 1000, 1001, 65_537, 10**6]:
        seg = sieve_core.sieve_upto(bound).primes
        assert np.array_equal(seg, whole[whole <= bound])


@settings(max_examples=60, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=50, max_value=5000))
def test_segmented_matches_unsegmented_property(bound, span):
    sieve_core_span = sieve_core.SEGMENT_SPAN
    try:
        sieve_core.SEGMENT_SPAN = span
        seg = sieve_core.sieve_upto(bound).primes
    finally:
        sieve_core.SEGMENT_SPAN = sieve_core_span
    assert np.array_equal(seg, _kernels.simple_sieve(bound))


def test_backend_name():
    assert _kernels.BACKEND in ("cython", "python")
