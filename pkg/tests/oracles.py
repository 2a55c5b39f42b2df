"""Brute-force references, deliberately naive and independent of hoprimes."""


def is_prime_td(x):
    if x < 2:
        return False
    d = 2
    while d * d <= x:
        if x % d == 0:
            return False
        d += 1
    return True


def primes_td(bound):
    return [x for x in range(2, bound + 1) if is_prime_td(x)]


def order_td(p, primes):
    """Order of primeness with pi evaluated by counting a trial-division list."""
    k, m = 0, p
    while is_prime_td(m):
        k += 1
        m = sum(1 for q in primes if q <= m)
    return k
