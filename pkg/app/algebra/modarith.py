"""
Exact modular arithmetic over a prime modulus.

Everything else in the package reduces its integers through these three
helpers, so they validate the modulus once and raise the project's own
exceptions.
"""

from functools import lru_cache
from typing import Tuple

from sympy import isprime

from app.core.errors import DomainError, ParameterError


@lru_cache(maxsize=4096)
def is_prime(p: int) -> bool:
    """
    Deterministic primality verdict.

    Args:
        p: Non-negative integer

    Returns:
        True if p is prime
    """
    if p < 2:
        return False
    return bool(isprime(p))


def _require_prime(p: int) -> None:
    if not isinstance(p, int) or not is_prime(p):
        raise ParameterError(f"p must be prime, got {p!r}")


def residue(c: int, p: int) -> int:
    """
    Return the unique representative 0 <= c_p < p of c modulo p.

    Raises:
        ParameterError: If p is not prime
    """
    _require_prime(p)
    return c % p


def _extended_gcd(x: int, y: int) -> Tuple[int, int]:
    """Return (g, s) with g = gcd(x, y) and s * x = g mod y."""
    old_r, r = x, y
    old_s, s = 1, 0
    while r:
        quotient = old_r // r
        old_r, r = r, old_r - quotient * r
        old_s, s = s, old_s - quotient * s
    return old_r, old_s


def mod_inverse(c: int, p: int) -> int:
    """
    Return the inverse of c modulo the prime p.

    Uses the extended Euclidean algorithm.

    Args:
        c: Integer not divisible by p
        p: Prime modulus

    Returns:
        The unique 0 < c_inv < p with c * c_inv = 1 mod p

    Raises:
        ParameterError: If p is not prime
        DomainError: If c is divisible by p
    """
    c_p = residue(c, p)
    if c_p == 0:
        raise DomainError(f"{c} has no inverse modulo {p}")
    gcd, coefficient = _extended_gcd(c_p, p)
    # p prime and c_p nonzero
    assert gcd == 1
    return coefficient % p
