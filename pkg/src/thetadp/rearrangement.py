"""Rearrangement-inequality machinery for two-level step vectors.

A step vector of fold ``m`` is a nondecreasing vector of length ``m*m`` that
takes the value ``n`` on its first ``m`` coordinates, ``n + 1`` on its last
``m`` coordinates, and one of the two on the middle block.  It is *odd* when
exactly ``m`` coordinates equal ``n`` and *even* when exactly ``m`` equal
``n + 1``.  Seen as ``m`` blocks of ``m`` coordinates, an odd vector is low
only on block 0 and an even vector is high only on block ``m - 1``, so sums
of products of such vectors reduce to sums over blocks.

All positions and permutations here are 0-based.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations, product
from math import prod
from typing import Literal, Optional, Sequence

from thetadp.arith import pair_counts

Parity = Literal["odd", "even"]
Perm = Sequence[int]


@dataclass(frozen=True)
class StepVector:
    fold: int
    base: int
    parity: Parity

    def __post_init__(self) -> None:
        if self.fold < 2:
            raise ValueError(f"fold must be at least 2, got {self.fold}")
        if self.base < 0:
            raise ValueError(f"base must be nonnegative, got {self.base}")
        if self.parity not in ("odd", "even"):
            raise ValueError(f"parity must be 'odd' or 'even', got {self.parity!r}")

    @property
    def size(self) -> int:
        return self.fold * self.fold

    @property
    def s(self) -> int:
        """The value taken on exactly ``m`` coordinates."""
        return self.base if self.parity == "odd" else self.base + 1

    @property
    def o(self) -> int:
        """The value taken on the other ``m*(m-1)`` coordinates."""
        return self.base + 1 if self.parity == "odd" else self.base

    def block_values(self) -> list[int]:
        m, n = self.fold, self.base
        if self.parity == "odd":
            return [n] + [n + 1] * (m - 1)
        return [n] * (m - 1) + [n + 1]

    def expand(self) -> list[int]:
        return [v for v in self.block_values() for _ in range(self.fold)]


def step_vector_for_path(length: int, m: int) -> StepVector:
    """The sorted pinned counts of one path, as a step vector.

    Even paths give even vectors and odd paths give odd vectors.
    """
    c = pair_counts(length, m)
    return StepVector(m, c.low, "even" if length % 2 == 0 else "odd")


def _check_sorted(row: Sequence[int]) -> None:
    if any(x < 0 for x in row):
        raise ValueError(f"row has negative entries: {tuple(row)}")
    if any(a > b for a, b in zip(row, row[1:])):
        raise ValueError(f"row is not nondecreasing: {tuple(row)}")


def paired_sum(rows: Sequence[Sequence[int]], perms: Sequence[Perm]) -> int:
    """``sum_j prod_i rows[i][perms[i][j]]``."""
    n = len(rows[0])
    return sum(prod(row[p[j]] for row, p in zip(rows, perms)) for j in range(n))


@dataclass(frozen=True)
class Verdict:
    holds: bool
    values: dict

    def __bool__(self) -> bool:
        return self.holds


def check_rearrangement(rows: Sequence[Sequence[int]], perms: Sequence[Perm]) -> Verdict:
    """Check that permuting sorted rows never beats pairing them in order.

    With two rows the reversed pairing is additionally checked to be no
    larger than the permuted one.
    """
    if len(rows) != len(perms):
        raise ValueError("need one permutation per row")
    for row in rows:
        _check_sorted(row)
    n = len(rows[0])
    if any(len(r) != n for r in rows) or any(sorted(p) != list(range(n)) for p in perms):
        raise ValueError("rows and permutations must share one length")
    ident = list(range(n))
    permuted = paired_sum(rows, perms)
    aligned = paired_sum(rows, [ident] * len(rows))
    values = {"permuted": permuted, "aligned": aligned}
    holds = permuted <= aligned
    if len(rows) == 2:
        reversed_ = paired_sum(rows, [ident[::-1], ident])
        values["reversed"] = reversed_
        holds = holds and reversed_ <= permuted
    return Verdict(holds, values)


# --- three step vectors -------------------------------------------------------


def reversal_and_shift(m: int, low_count: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """The pairing permutations ``(f, g)`` of ``range(m*m)``.

    ``f`` reverses; ``g`` rotates by ``low_count`` (the number of coordinates
    of the first vector at its lower value).
    """
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if low_count not in (m, m * (m - 1)):
        raise ValueError(f"low_count must be m or m*(m-1), got {low_count}")
    mm = m * m
    f = tuple(mm - 1 - j for j in range(mm))
    g = tuple(mm + j - low_count if j < low_count else j - low_count for j in range(mm))
    return f, g


def _low_count(x: StepVector) -> int:
    return x.fold if x.parity == "odd" else x.fold * (x.fold - 1)


def _check_triple(x1: StepVector, x2: StepVector, x3: StepVector) -> int:
    m = x1.fold
    if x2.fold != m or x3.fold != m:
        raise ValueError("step vectors must share one fold")
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if x1.base > x2.base or x1.base > x3.base:
        raise ValueError("first vector's base must not exceed the others'")
    return m


def min_triple_pairing_sum(x1: StepVector, x2: StepVector, x3: StepVector) -> int:
    """Sum of ``x1[j] * x2[f(j)] * x3[g(j)]``, the least over all pairings.

    Evaluated blockwise: ``f`` maps block ``b`` to ``m - 1 - b`` and ``g``
    maps it to ``b - low_count/m`` mod ``m``.
    """
    m = _check_triple(x1, x2, x3)
    b1, b2, b3 = x1.block_values(), x2.block_values(), x3.block_values()
    shift = _low_count(x1) // m
    return m * sum(b1[b] * b2[m - 1 - b] * b3[(b - shift) % m] for b in range(m))


def min_triple_pairing_sum_expanded(x1: StepVector, x2: StepVector, x3: StepVector) -> int:
    """Same value as :func:`min_triple_pairing_sum`, computed coordinatewise."""
    m = _check_triple(x1, x2, x3)
    f, g = reversal_and_shift(m, _low_count(x1))
    return paired_sum([x1.expand(), x2.expand(), x3.expand()], [range(m * m), f, g])


def exhaustive_min_pairing(x1: StepVector, x2: StepVector, x3: StepVector) -> int:
    """Least ``sum_j x1[j] * x2[σ1(j)] * x3[σ2(j)]`` by enumerating placements.

    The sum only depends on which positions receive the high value of ``x2``
    and of ``x3``, so every pair of placements is tried.  Exponential; meant
    for ``m = 3``.
    """
    m = x1.fold
    mm = m * m
    v1 = x1.expand()
    hi2 = x2.expand().count(x2.base + 1)
    hi3 = x3.expand().count(x3.base + 1)
    best = None
    for a2 in combinations(range(mm), hi2):
        col2 = [x2.base] * mm
        for j in a2:
            col2[j] += 1
        partial = [v1[j] * col2[j] for j in range(mm)]
        for a3 in combinations(range(mm), hi3):
            total = x3.base * sum(partial) + sum(partial[j] for j in a3)
            if best is None or total < best:
                best = total
    return best


def staggered_blocks(parities: Sequence[Parity], m: int) -> tuple[range, range, range]:
    """Index ranges where each of three vectors is arranged to hold its ``s`` value.

    Opposite parity to the first vector shares block 0; same parity moves
    to its own later block: ``(0, 0, 0)`` when both others differ, a single
    block-1 placement when exactly one matches, and ``(0, 1, 2)`` when all
    three agree.
    """
    if m < 3:
        raise ValueError(f"m must be at least 3, got {m}")
    if len(parities) != 3:
        raise ValueError("need three parities")
    p1, p2, p3 = parities
    if p2 != p1 and p3 != p1:
        blocks = (0, 0, 0)
    elif p2 != p1:
        blocks = (0, 0, 1)
    elif p3 != p1:
        blocks = (0, 1, 0)
    else:
        blocks = (0, 1, 2)
    return tuple(range(b * m, (b + 1) * m) for b in blocks)


def staggered_sum(x1: StepVector, x2: StepVector, x3: StepVector) -> int:
    """The pairing that puts each ``s`` value on its staggered block."""
    m = _check_triple(x1, x2, x3)
    xs = (x1, x2, x3)
    where = [r.start // m for r in staggered_blocks([x.parity for x in xs], m)]
    return m * sum(prod(x.s if b == w else x.o for x, w in zip(xs, where)) for b in range(m))


def staggered_permutations(x1: StepVector, x2: StepVector, x3: StepVector) -> list[tuple[int, ...]]:
    """Explicit permutations ``h_k`` realizing :func:`staggered_blocks`."""
    m = _check_triple(x1, x2, x3)
    out = []
    for x, rng in zip((x1, x2, x3), staggered_blocks([x.parity for x in (x1, x2, x3)], m)):
        v = x.expand()
        s_pos = [j for j, val in enumerate(v) if val == x.s]
        o_pos = [j for j, val in enumerate(v) if val != x.s]
        h = [0] * (m * m)
        for j in range(m * m):
            h[j] = s_pos.pop(0) if j in rng else o_pos.pop(0)
        out.append(tuple(h))
    return out


def check_staggered_equals_min(x1: StepVector, x2: StepVector, x3: StepVector) -> Verdict:
    staggered = staggered_sum(x1, x2, x3)
    hs = staggered_permutations(x1, x2, x3)
    expanded = paired_sum([x1.expand(), x2.expand(), x3.expand()], hs)
    least = min_triple_pairing_sum(x1, x2, x3)
    values = {"staggered": staggered, "staggered_expanded": expanded, "min_pairing": least}
    return Verdict(staggered == expanded == least, values)


def check_aligned_maximal(xs: Sequence[StepVector], perms: Sequence[Perm]) -> Verdict:
    """Permuting any number of step vectors never beats the aligned pairing."""
    if len(xs) < 2:
        raise ValueError("need at least two vectors")
    m = xs[0].fold
    if any(x.fold != m for x in xs):
        raise ValueError("step vectors must share one fold")
    rows = [x.expand() for x in xs]
    permuted = paired_sum(rows, perms)
    aligned = paired_sum(rows, [range(m * m)] * len(rows))
    return Verdict(permuted <= aligned, {"permuted": permuted, "aligned": aligned})


# --- three rows: the reversed pairing is not minimal -------------------------


@dataclass(frozen=True)
class ReversalFailure:
    rows: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]
    perms: tuple[tuple[int, ...], tuple[int, ...]]
    permuted: int
    reversed: int


def reversal_failure(
    x1: Sequence[int], x2: Sequence[int], x3: Sequence[int]
) -> Optional[ReversalFailure]:
    """First ``(σ1, σ2)`` beating the reversed pairing of rows 2 and 3, if any.

    The reference pairing is ``sum_j x1[j] * x2[n-1-j] * x3[n-1-j]``.
    """
    rows = (tuple(x1), tuple(x2), tuple(x3))
    for row in rows:
        _check_sorted(row)
    n = len(rows[0])
    rev = tuple(range(n - 1, -1, -1))
    reference = paired_sum(rows, [range(n), rev, rev])
    for s1, s2 in product(permutations(range(n)), repeat=2):
        value = paired_sum(rows, [range(n), s1, s2])
        if value < reference:
            return ReversalFailure(rows, (s1, s2), value, reference)
    return None


def search_k3_reversal_failure(bound: int, n: int) -> Optional[ReversalFailure]:
    """First sorted triple of rows on which :func:`reversal_failure` succeeds.

    Rows range over nondecreasing tuples with entries in ``0..bound``, in
    lexicographic order of ``(x1, x2, x3)``.
    """
    if n < 1 or bound < 0:
        raise ValueError("need n >= 1 and bound >= 0")
    rows = list(combinations_with_replacement(range(bound + 1), n))
    for x1, x2, x3 in product(rows, repeat=3):
        found = reversal_failure(x1, x2, x3)
        if found is not None:
            return found
    return None


def random_step_vector(rng: random.Random, m: int, max_base: int, min_base: int = 0) -> StepVector:
    return StepVector(m, rng.randint(min_base, max_base), rng.choice(("odd", "even")))


def random_perm(rng: random.Random, n: int) -> tuple[int, ...]:
    p = list(range(n))
    rng.shuffle(p)
    return tuple(p)


PARITY_PATTERNS: tuple[tuple[Parity, Parity, Parity], ...] = tuple(product(("odd", "even"), repeat=3))


@dataclass
class SuiteReport:
    instances: int
    checked: dict
    violations: list
    pattern_hits: dict

    @property
    def ok(self) -> bool:
        return not self.violations


def random_suite(instances: int = 1000, seed: int = 0, pairings: int = 200, max_m: int = 6,
                 max_base: int = 10) -> SuiteReport:
    """Random instances of every inequality check; collects any violation.

    Parity patterns of the triple checks are cycled rather than sampled so
    every pattern is hit ``instances / 8`` times.
    """
    rng = random.Random(seed)
    checked = {"rearrangement": 0, "min_pairing": 0, "staggered": 0, "aligned_maximal": 0}
    hits = {p: 0 for p in PARITY_PATTERNS}
    bad: list = []
    for it in range(instances):
        # sorted rows, k <= 4
        k, n = rng.randint(1, 4), rng.randint(1, 6)
        rows = [sorted(rng.randint(0, max_base) for _ in range(n)) for _ in range(k)]
        perms = [random_perm(rng, n) for _ in range(k)]
        checked["rearrangement"] += 1
        v = check_rearrangement(rows, perms)
        if not v:
            bad.append(("rearrangement", rows, perms, v.values))

        # three step vectors, first base smallest
        m = rng.randint(3, max_m)
        pattern = PARITY_PATTERNS[it % len(PARITY_PATTERNS)]
        bases = sorted(rng.randint(0, max_base) for _ in range(3))
        if rng.random() < 0.5:
            bases[1], bases[2] = bases[2], bases[1]
        xs = [StepVector(m, b, p) for b, p in zip(bases, pattern)]
        hits[pattern] += 1
        least = min_triple_pairing_sum(*xs)
        rows3 = [x.expand() for x in xs]
        ident = range(m * m)
        checked["min_pairing"] += 1
        for _ in range(pairings):
            s1, s2 = random_perm(rng, m * m), random_perm(rng, m * m)
            if paired_sum(rows3, [ident, s1, s2]) < least:
                bad.append(("min_pairing", xs, (s1, s2)))
                break
        checked["staggered"] += 1
        v = check_staggered_equals_min(*xs)
        if not v:
            bad.append(("staggered", xs, v.values))

        # n <= 5 step vectors under random permutations
        nv = rng.randint(2, 5)
        m2 = rng.randint(2, max_m)
        vecs = [random_step_vector(rng, m2, max_base) for _ in range(nv)]
        rowsn = [x.expand() for x in vecs]
        aligned = paired_sum(rowsn, [range(m2 * m2)] * nv)
        checked["aligned_maximal"] += 1
        for _ in range(pairings):
            ps = [random_perm(rng, m2 * m2) for _ in range(nv)]
            if paired_sum(rowsn, ps) > aligned:
                bad.append(("aligned_maximal", vecs, ps))
                break
    return SuiteReport(instances, checked, bad, hits)
