"""Hot kernels, compiled when available.

The Cython extension ``_ckernels`` is preferred; ``_pykernels`` is used when
it is not built or when ``HOPRIMES_PURE=1`` is set in the environment.
``BACKEND`` names the implementation that was selected.
"""
import os

if os.environ.get("HOPRIMES_PURE", "") not in ("", "0"):
    from ._pykernels import chain_orders, segment_primes, simple_sieve

    BACKEND = "python"
else:
    try:
        from ._ckernels import chain_orders, segment_primes, simple_sieve

        BACKEND = "cython"
    except ImportError:
        from ._pykernels import chain_orders, segment_primes, simple_sieve

        BACKEND = "python"

__all__ = ["BACKEND", "chain_orders", "segment_primes", "simple_sieve"]
