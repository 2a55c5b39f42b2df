"""Higher-order prime subsequences, alternating-sum prime classes and the N-sieve."""
from ._kernels import BACKEND
from .alt_sum import SievedClass, bulk_alternating, class_by_parity, lateral_class, lateral_row_sum
from .errors import ArgumentError, HOPrimesError, ResourceLimitError
from .higher_order import OrderKSequence, membership, order_k_sequence, order_k_upto, order_of_primeness
from .n_sieve import NATURALS, SieveSource, SieveTrace, render_trace, run_sieve, validate_sievable
from .partition import (
    PartitionWitness,
    RingAssignment,
    decompose_order,
    greedy_index_construction,
    ring_of,
    verify_partition,
)
from .sieve_core import PrimeSource, PrimeTable, is_prime, nth_prime, prime_pi, sieve_upto

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ArgumentError",
    "HOPrimesError",
    "NATURALS",
    "OrderKSequence",
    "PartitionWitness",
    "PrimeSource",
    "PrimeTable",
    "ResourceLimitError",
    "RingAssignment",
    "SieveSource",
    "SieveTrace",
    "SievedClass",
    "bulk_alternating",
    "class_by_parity",
    "decompose_order",
    "greedy_index_construction",
    "is_prime",
    "lateral_class",
    "lateral_row_sum",
    "membership",
    "nth_prime",
    "order_k_sequence",
    "order_k_upto",
    "order_of_primeness",
    "prime_pi",
    "render_trace",
    "ring_of",
    "run_sieve",
    "sieve_upto",
    "validate_sievable",
    "verify_partition",
]
