"""Full covers of theta graphs up to relabeling, encoded as permutation tuples.

In a full cover every path composes its matchings into a permutation ``τ_k``
of the fold, taking colors at ``u`` to colors at ``w``.  A pinned pair
``(i, j)`` is *aligned* on path ``k`` exactly when ``j = τ_k(i)``, and the
number of colorings of the whole graph only depends on these alignments.
Permutations are stored 0-based; the text form is 1-based one-line notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from thetadp.arith import pair_counts
from thetadp.theta import ThetaSpec

Perm = tuple[int, ...]


def identity(m: int) -> Perm:
    return tuple(range(m))


def shift(m: int, power: int = 1) -> Perm:
    """The cyclic shift ``j -> j + power (mod m)``."""
    return tuple((j + power) % m for j in range(m))


def compose(p: Perm, q: Perm) -> Perm:
    """``p ∘ q``."""
    return tuple(p[x] for x in q)


def inverse(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def all_perms(m: int) -> list[Perm]:
    """Permutations of ``range(m)`` in lexicographic one-line order."""
    return list(permutations(range(m)))


def cycle_type(p: Perm) -> tuple[int, ...]:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        n, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def class_representatives(m: int) -> list[Perm]:
    """Lexicographically least permutation of each cycle type, in lex order."""
    reps: dict[tuple[int, ...], Perm] = {}
    for p in all_perms(m):
        reps.setdefault(cycle_type(p), p)
    return sorted(reps.values())


@dataclass(frozen=True)
class Signature:
    fold: int
    perms: tuple[Perm, ...]

    def __post_init__(self) -> None:
        perms = tuple(tuple(int(x) for x in p) for p in self.perms)
        object.__setattr__(self, "perms", perms)
        for p in perms:
            if sorted(p) != list(range(self.fold)):
                raise ValueError(f"{p} is not a permutation of range({self.fold})")

    @property
    def normalized(self) -> bool:
        return self.perms[0] == identity(self.fold)

    def normalize(self) -> "Signature":
        """Relabel the colors at ``w`` so that the first permutation is the identity."""
        inv = inverse(self.perms[0])
        return Signature(self.fold, tuple(compose(inv, p) for p in self.perms))

    def conjugate(self, pi: Perm) -> "Signature":
        """Relabel colors at both ends by ``pi``; the coloring count is unchanged."""
        pinv = inverse(pi)
        return Signature(self.fold, tuple(compose(pi, compose(p, pinv)) for p in self.perms))

    def orbit_min(self) -> "Signature":
        """Lexicographically least signature reachable by simultaneous conjugation."""
        return min((self.conjugate(pi) for pi in all_perms(self.fold)), key=lambda s: s.perms)

    def aligned(self, k: int, i: int, j: int) -> bool:
        return self.perms[k][i] == j

    def __str__(self) -> str:
        return format_signature(self)


def format_signature(sig: Signature) -> str:
    return ";".join(",".join(str(x + 1) for x in p) for p in sig.perms)


def parse_signature(text: str) -> Signature:
    """Parse ``"1,2,3;2,3,1"`` (1-based one-line permutations)."""
    blocks = [b for b in text.strip().split(";") if b.strip()]
    if not blocks:
        raise ValueError("empty signature")
    perms = [tuple(int(x) - 1 for x in b.split(",")) for b in blocks]
    folds = {len(p) for p in perms}
    if len(folds) != 1:
        raise ValueError(f"permutations of different sizes in {text!r}")
    return Signature(folds.pop(), tuple(perms))


def identity_signature(n: int, m: int) -> Signature:
    return Signature(m, (identity(m),) * n)


def evaluate_signature(spec: ThetaSpec, m: int, sig: Signature) -> int:
    """Number of colorings of the full cover encoded by ``sig``.

    Sums, over every pinned pair of end colors, the product of the per-path
    pinned counts; no cover graph is built.
    """
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    if sig.fold != m or len(sig.perms) != spec.n:
        raise ValueError(f"signature shape {sig.fold}x{len(sig.perms)} does not match {spec}, m={m}")
    counts = [pair_counts(l, m) for l in spec.lengths]
    total = 0
    for i in range(m):
        for j in range(m):
            term = 1
            for c, p in zip(counts, sig.perms):
                term *= c.aligned if p[i] == j else c.split
                if not term:
                    break
            total += term
    return total


def extremal_signature_min_theta3(spec: ThetaSpec, m: int) -> Signature:
    """Cover attaining the DP color function of a theta graph (three paths)."""
    if spec.n != 3:
        raise ValueError(f"needs exactly 3 paths, got {spec.n}")
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    p1, p2, p3 = (x % 2 for x in spec.lengths)
    e, s = identity(m), shift(m)
    if p1 == p2 == p3:
        return Signature(m, (e, s, shift(m, 2)))
    if p2 != p1 and p3 != p1:
        return Signature(m, (e, e, e))
    return Signature(m, (e, e, s))


def extremal_signature_max(spec: ThetaSpec, m: int) -> Signature:
    """Full cover attaining the dual DP color function: shift paths ``2..t``."""
    if m < 2:
        raise ValueError(f"m must be at least 2, got {m}")
    t = spec.t
    e, s = identity(m), shift(m)
    return Signature(m, tuple(s if 2 <= k <= t else e for k in range(1, spec.n + 1)))


def from_sequence(m: int, perms: Sequence[Sequence[int]]) -> Signature:
    return Signature(m, tuple(tuple(p) for p in perms))
