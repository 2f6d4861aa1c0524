"""Pure-Python signature search kernel (arbitrary-precision fallback).

The search space is indexed in mixed radix: the first digit picks ``τ_2``
from ``tau2`` and each later digit picks ``τ_3, ..., τ_n`` from ``perms``;
``τ_1`` is fixed to the identity.  Index order is lexicographic signature
order whenever ``tau2`` and ``perms`` are lexicographically sorted.

Partial products over the first paths are kept per level, so moving to the
next index only recomputes the levels whose digit changed.  The last path is
folded in with O(m) work::

    value = split_n * sum(Q) + (aligned_n - split_n) * sum_i Q[i, τ_n(i)]
"""

from __future__ import annotations

from typing import Sequence

Perm = Sequence[int]


def _apply(prev: list, m: int, a: int, o: int, tau: Perm) -> list:
    out = [x * o for x in prev]
    for i in range(m):
        k = i * m + tau[i]
        out[k] = prev[k] * a
    return out


def search_block(
    aligned: Sequence[int],
    split: Sequence[int],
    m: int,
    perms: Sequence[Perm],
    tau2: Sequence[Perm],
    start: int,
    stop: int,
    maximize: bool,
) -> tuple[int, int]:
    """Best value over indices ``[start, stop)`` and the first index attaining it."""
    n = len(aligned)
    if n < 2:
        raise ValueError("need at least two paths")
    if stop <= start:
        raise ValueError("empty block")
    radix = [len(tau2)] + [len(perms)] * (n - 2)
    tables = [tau2] + [perms] * (n - 2)
    ndig = n - 1

    digits = [0] * ndig
    rem = start
    for p in range(ndig - 1, -1, -1):
        rem, digits[p] = divmod(rem, radix[p])

    level0 = [aligned[0] if i == j else split[0] for i in range(m) for j in range(m)]
    # levels[p] = product over paths 0..p
    levels: list = [level0] + [None] * (ndig - 1)
    for p in range(1, ndig):
        levels[p] = _apply(levels[p - 1], m, aligned[p], split[p], tables[p - 1][digits[p - 1]])
    last_a, last_o = aligned[n - 1], split[n - 1]
    diff = last_a - last_o
    leaf_table = tables[ndig - 1]
    q = levels[ndig - 1]
    qsum = sum(q)

    best = None
    where = start
    idx = start
    while True:
        tau = leaf_table[digits[ndig - 1]]
        diag = 0
        for i in range(m):
            diag += q[i * m + tau[i]]
        value = last_o * qsum + diff * diag
        if best is None or (value > best if maximize else value < best):
            best = value
            where = idx
        idx += 1
        if idx >= stop:
            break
        p = ndig - 1
        while True:
            digits[p] += 1
            if digits[p] < radix[p]:
                break
            digits[p] = 0
            p -= 1
        if p < ndig - 1:
            # digit p feeds level p + 1
            for lv in range(p + 1, ndig):
                levels[lv] = _apply(levels[lv - 1], m, aligned[lv], split[lv], tables[lv - 1][digits[lv - 1]])
            q = levels[ndig - 1]
            qsum = sum(q)
    return best, where
