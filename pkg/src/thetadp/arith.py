"""Exact integer kernel: pinned-pair counts on a path and integer m-th roots."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache


def exact_div(num: int, den: int) -> int:
    q, rem = divmod(num, den)
    if rem:
        raise ArithmeticError(f"{num} is not divisible by {den}")
    return q


@dataclass(frozen=True)
class PairCount:
    """Colorings of one ``u,w``-path with both ends pinned.

    ``aligned`` counts the case where the pinned pair is joined through the
    cover's cross-edges, ``split`` every other case.  They differ by exactly
    one: ``aligned = split + 1`` for even lengths, ``split - 1`` for odd.
    """

    length: int
    fold: int
    aligned: int
    split: int

    @property
    def low(self) -> int:
        return min(self.aligned, self.split)


@lru_cache(maxsize=4096)
def pair_counts(length: int, m: int) -> PairCount:
    if m < 2:
        raise ValueError(f"fold must be at least 2, got {m}")
    if length < 1:
        raise ValueError(f"path length must be positive, got {length}")
    sign = -1 if length % 2 else 1
    p = (m - 1) ** length
    aligned = exact_div(p + sign * (m - 1), m)
    split = exact_div(p - sign, m)
    return PairCount(length, m, aligned, split)


def iroot_floor(v: int, m: int) -> int:
    """Largest integer ``C`` with ``C**m <= v``."""
    if v < 0:
        raise ValueError("radicand must be nonnegative")
    if v < 2 or m == 1:
        return v
    # Newton from an overestimate; monotone decreasing once above the root.
    x = 1 << -(-v.bit_length() // m)
    while True:
        y = ((m - 1) * x + v // x ** (m - 1)) // m
        if y >= x:
            break
        x = y
    while x ** m > v:
        x -= 1
    while (x + 1) ** m <= v:
        x += 1
    return x


def ceil_mth_root(m: int, v: int) -> int:
    """Least integer ``C`` with ``C**m >= v``, in pure integer arithmetic."""
    if m < 1:
        raise ValueError(f"root order must be positive, got {m}")
    if v < 0:
        raise ValueError("radicand must be nonnegative")
    c = iroot_floor(v, m)
    return c if c ** m == v else c + 1
