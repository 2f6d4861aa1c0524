"""Exhaustive minimization and maximization over full-cover signatures.

The search space is every signature with ``τ_1 = id``.  With symmetry
reduction on, ``τ_2`` only ranges over one representative per cycle type:
conjugating all permutations by the same ``π`` relabels both end vertices
and leaves the coloring count unchanged.

Work is cut into contiguous index blocks.  Each block reports its optimum and
the first index attaining it; blocks merge by taking the better value, or the
smaller index on a tie.  The merge is associative and commutative, so the
answer does not depend on the worker count or completion order.

Index order is lexicographic signature order, so the witness is the least
optimal signature.  Under symmetry reduction this is still the global least
optimal signature: the least member of a conjugation orbit has the least
conjugate of ``τ_2``, which is exactly its cycle-type representative, so that
signature is inside the reduced space and is its own orbit minimum.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from math import factorial
from typing import Iterable, Optional

from thetadp import kernels
from thetadp.arith import pair_counts
from thetadp.closed_forms import chromatic_poly_theta
from thetadp.signatures import (
    Signature,
    all_perms,
    class_representatives,
    identity,
)
from thetadp.theta import ThetaSpec

log = logging.getLogger(__name__)

DEFAULT_BUDGET = 10**9
DEFAULT_BLOCK = 1 << 16


class BudgetExceeded(RuntimeError):
    def __init__(self, required: int, budget: int):
        super().__init__(f"search needs {required} evaluations, budget is {budget}")
        self.required = required
        self.budget = budget


@dataclass(frozen=True)
class SearchOptions:
    budget: int = DEFAULT_BUDGET
    workers: int = 1
    symmetry: bool = True
    block_size: int = DEFAULT_BLOCK
    backend: Optional[str] = None


@dataclass(frozen=True)
class SearchResult:
    optimum: int
    witness: Signature
    explored: int
    reduced: bool


def search_size(n: int, m: int, symmetry: bool = True) -> int:
    first = len(class_representatives(m)) if symmetry else factorial(m)
    return first * factorial(m) ** (n - 2)


def _decode(index: int, n: int, m: int, perms, tau2) -> Signature:
    digits = []
    for _ in range(n - 2):
        index, d = divmod(index, len(perms))
        digits.append(d)
    digits.reverse()
    return Signature(m, (identity(m), tau2[index], *(perms[d] for d in digits)))


def _run_block(args) -> tuple[int, int]:
    aligned, split, m, perms, tau2, start, stop, maximize, backend = args
    return kernels.search_block(aligned, split, m, perms, tau2, start, stop, maximize, backend)


def _merge(acc: Optional[tuple[int, int]], part: tuple[int, int], maximize: bool):
    if acc is None:
        return part
    if part[0] == acc[0]:
        return acc[0], min(acc[1], part[1])
    better = part[0] > acc[0] if maximize else part[0] < acc[0]
    return part if better else acc


def _search(spec: ThetaSpec, m: int, opts: SearchOptions, maximize: bool) -> SearchResult:
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    n = spec.n
    perms = all_perms(m)
    tau2 = class_representatives(m) if opts.symmetry else perms
    total = len(tau2) * len(perms) ** (n - 2)
    if total > opts.budget:
        raise BudgetExceeded(total, opts.budget)
    counts = [pair_counts(l, m) for l in spec.lengths]
    aligned = [c.aligned for c in counts]
    split = [c.split for c in counts]
    blocks = [
        (aligned, split, m, perms, tau2, lo, min(lo + opts.block_size, total), maximize, opts.backend)
        for lo in range(0, total, opts.block_size)
    ]
    acc = None
    if opts.workers > 1 and len(blocks) > 1:
        with ProcessPoolExecutor(max_workers=opts.workers) as pool:
            for part in pool.map(_run_block, blocks):
                acc = _merge(acc, part, maximize)
    else:
        for blk in blocks:
            acc = _merge(acc, _run_block(blk), maximize)
    best, where = acc
    witness = _decode(where, n, m, perms, tau2)
    log.debug("%s m=%d: %s %d over %d signatures", spec, m, "max" if maximize else "min", best, total)
    return SearchResult(best, witness, total, opts.symmetry)


def minimize(spec: ThetaSpec, m: int, opts: SearchOptions = SearchOptions()) -> SearchResult:
    """Exact minimum coloring count over full ``m``-fold covers."""
    return _search(spec, m, opts, maximize=False)


def maximize(spec: ThetaSpec, m: int, opts: SearchOptions = SearchOptions()) -> SearchResult:
    """Exact maximum coloring count over full ``m``-fold covers."""
    return _search(spec, m, opts, maximize=True)


@dataclass(frozen=True)
class ScanRow:
    m: int
    chromatic: int
    minimum: Optional[int]
    witness: Optional[Signature]
    error: Optional[str] = None

    @property
    def equal(self) -> Optional[bool]:
        return None if self.minimum is None else self.minimum == self.chromatic


def adherence_scan(spec: ThetaSpec, ms: Iterable[int], opts: SearchOptions = SearchOptions()) -> list[ScanRow]:
    """Compare ``P(G, m)`` with the exhaustive minimum for each ``m``.

    A row whose search exceeds the budget records the refusal and the scan
    moves on.
    """
    rows = []
    for m in ms:
        p = chromatic_poly_theta(spec, m)
        try:
            res = minimize(spec, m, opts)
        except BudgetExceeded as exc:
            rows.append(ScanRow(m, p, None, None, str(exc)))
            continue
        rows.append(ScanRow(m, p, res.optimum, res.witness))
    return rows
