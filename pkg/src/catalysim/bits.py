"""Bit-string utilities shared across the package.

A bit string is a plain ``str`` over ``{'0', '1'}``. Position 1 is the
leftmost character and, under integer interpretation, the most
significant bit.
"""

from __future__ import annotations

import random

from .errors import LengthMismatch

__all__ = ["check_bits", "hamdist", "int_of_bits", "bits_of_int", "random_bits"]


def check_bits(s: str, label: str = "bit string") -> str:
    """Validate that ``s`` consists only of '0' and '1'; return it unchanged."""
    if not isinstance(s, str) or any(ch not in "01" for ch in s):
        raise ValueError(f"{label} must be a string over {{0,1}}, got {s!r}")
    return s


def hamdist(x: str, y: str) -> int:
    """Number of positions at which two equal-length bit strings differ."""
    if len(x) != len(y):
        raise LengthMismatch(
            f"hamdist requires equal lengths, got {len(x)} and {len(y)}")
    return sum(a != b for a, b in zip(x, y))


def int_of_bits(w: str) -> int:
    """Integer value of a bit string, most significant bit first."""
    return int(w, 2) if w else 0


def bits_of_int(v: int, m: int) -> str:
    """Render ``v`` as an ``m``-bit string, most significant bit first."""
    if v < 0 or v >= (1 << m):
        raise ValueError(f"value {v} does not fit in {m} bits")
    return format(v, f"0{m}b")


def random_bits(m: int, seed: int) -> str:
    """Reproducible random bit string of length ``m``."""
    if m < 1:
        raise ValueError("length must be >= 1")
    rng = random.Random(seed)
    return "".join(rng.choice("01") for _ in range(m))
