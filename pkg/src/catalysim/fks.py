"""Prime-hash machinery: streaming modular reduction, Hamming-ball
enumeration, prime streams, and smallest-good-prime search.

A prime ``p`` is *good* for a ball when ``u -> int(u) mod p`` is
injective on it. Such a prime always exists among the first
``m * K**2 + 1`` primes (K the ball size): a prime is bad only when it
divides some pairwise difference of ball elements, and the product of
all those differences has fewer than ``m * K**2`` prime factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Iterator

from .bits import check_bits, int_of_bits
from .errors import IndexOutOfRange, NoGoodPrimeBelowCap

__all__ = [
    "GoodPrime",
    "flip_set",
    "flip",
    "mod_bits",
    "enumerate_ball",
    "ball_size",
    "is_prime",
    "primes_ascending",
    "fks_prime_cap",
    "find_good_prime",
]


@dataclass(frozen=True)
class GoodPrime:
    """A prime certified injective on ``ball(center, radius)``."""

    p: int
    center: str
    radius: int
    certified: bool = True


def mod_bits(w: str, p: int) -> int:
    """Residue of the integer value of ``w`` (MSB first) modulo ``p``.

    Streams left to right with the recurrence ``r <- (2r + bit) mod p``,
    keeping only the residue as working storage.
    """
    if p < 2:
        raise ValueError(f"modulus must be >= 2, got {p}")
    check_bits(w, "bit string")
    r = 0
    for ch in w:
        r = (2 * r + (ch == "1")) % p
    return r


def flip_set(t: Iterable[int]) -> frozenset[int]:
    """Distinct nonzero entries of an index tuple (0 is the no-flip sentinel)."""
    return frozenset(i for i in t if i != 0)


def flip(w: str, t: Iterable[int]) -> str:
    """Flip the bits of ``w`` at each position in ``flip_set(t)``.

    Positions are 1-based; duplicates and sentinel zeros contribute
    nothing, so the result is at Hamming distance ``len(flip_set(t))``
    from ``w``.
    """
    out = list(w)
    for i in flip_set(t):
        if not 1 <= i <= len(w):
            raise IndexOutOfRange(f"flip index {i} outside [1, {len(w)}]")
        out[i - 1] = "1" if out[i - 1] == "0" else "0"
    return "".join(out)


def enumerate_ball(w: str, radius: int) -> Iterator[str]:
    """Yield every string within Hamming distance ``radius`` of ``w``.

    The order is part of the contract: the center first, then flip sets
    of increasing size, lexicographic within each size. Each string
    appears exactly once.
    """
    m = len(w)
    if radius < 0 or radius > m:
        raise ValueError(f"radius must be in [0, {m}], got {radius}")
    for size in range(radius + 1):
        for combo in combinations(range(1, m + 1), size):
            yield flip(w, combo)


def ball_size(m: int, radius: int) -> int:
    """Number of strings within Hamming distance ``radius`` of an m-bit string."""
    return sum(math.comb(m, i) for i in range(radius + 1))


# Smallest composite for which the witness set fails, paired with the
# witnesses that are exact below it. The final tier is exact for all
# 64-bit values.
_MR_TIERS: tuple[tuple[int, tuple[int, ...]], ...] = (
    (2047, (2,)),
    (1373653, (2, 3)),
    (9080191, (31, 73)),
    (25326001, (2, 3, 5)),
    (3215031751, (2, 3, 5, 7)),
    (3474749660383, (2, 3, 5, 7, 11, 13)),
    (341550071728321, (2, 3, 5, 7, 11, 13, 17)),
    (1 << 64, (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)),
)

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for all ``n < 2**64``."""
    if n >= 1 << 64:
        raise ValueError("primality test is only exact below 2**64")
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for limit, witnesses in _MR_TIERS:
        if n < limit:
            break
    for a in witnesses:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def primes_ascending(start_after: int = 0) -> Iterator[int]:
    """Yield primes strictly greater than ``start_after``, ascending."""
    if start_after < 2:
        yield 2
        n = 3
    else:
        n = start_after + 1
        if n % 2 == 0:
            n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def fks_prime_cap(m: int, ball: int) -> int:
    """Default search cap: an upper bound on the ``(m * K**2 + 1)``-th prime.

    At most ``m * K**2`` primes can be bad for a ball of ``K`` m-bit
    strings, so the search must succeed within the first
    ``N = m * K**2 + 1`` primes; ``N (ln N + ln ln N)`` bounds the N-th
    prime from above for N >= 6.
    """
    n_th = m * ball * ball + 1
    if n_th < 6:
        return 13
    return math.ceil(n_th * (math.log(n_th) + math.log(math.log(n_th))))


@lru_cache(maxsize=4096)
def _find_good_prime(w: str, radius: int, prime_cap: int | None) -> GoodPrime:
    ball_ints = [int_of_bits(u) for u in enumerate_ball(w, radius)]
    m = len(w)
    cap = prime_cap if prime_cap is not None else fks_prime_cap(m, len(ball_ints))
    last_prime: int | None = None
    last_collision: tuple[str, str] | None = None
    for p in primes_ascending(0):
        if p > cap:
            raise NoGoodPrimeBelowCap(
                f"no good prime <= {cap} for ball(center={w!r}, radius={radius}); "
                f"largest prime tried was {last_prime} with collision {last_collision}",
                cap=cap, last_prime=last_prime, collision=last_collision)
        seen: dict[int, int] = {}
        collision: tuple[int, int] | None = None
        for v in ball_ints:
            r = v % p
            if r in seen:
                collision = (seen[r], v)
                break
            seen[r] = v
        if collision is None:
            return GoodPrime(p=p, center=w, radius=radius)
        last_prime = p
        last_collision = (format(collision[0], f"0{m}b"), format(collision[1], f"0{m}b"))


def find_good_prime(w: str, radius: int, prime_cap: int | None = None) -> GoodPrime:
    """Smallest prime whose residues are injective on ``ball(w, radius)``.

    Primes are tried in ascending order; injectivity is established by
    checking all pairs of distinct ball elements, so the returned
    certificate needs no trust in the search. Raises
    :class:`NoGoodPrimeBelowCap` if the cap (default: the constructive
    bound from :func:`fks_prime_cap`) is exhausted, which per the
    existence bound means the cap was set too low.
    """
    check_bits(w, "ball center")
    if radius < 0 or radius > len(w):
        raise ValueError(f"radius must be in [0, {len(w)}], got {radius}")
    return _find_good_prime(w, radius, prime_cap)
