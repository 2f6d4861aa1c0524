"""Explicit covers and the brute-force coloring counter.

A :class:`Cover` lists a base graph, one part of cover vertices per base
vertex, and the cross-edges between parts.  Parts are implicitly complete, so
a coloring (an independent transversal) picks one cover vertex from every
part with no cross-edge inside the selection.

This module is the slow, literal oracle for :mod:`thetadp.signatures`; it
never uses the pinned-count formulas.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple, Optional, Sequence

from thetadp.signatures import Signature
from thetadp.theta import ThetaSpec, vertex_layout

FORMAT_HEADER = "# thetadp-cover v1"


def cv(vertex: str, color: int) -> str:
    """Cover vertex id for ``color`` (1-based) in the part of ``vertex``."""
    return f"{vertex}:{color}"


@dataclass(frozen=True)
class Cover:
    fold: int
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    parts: Mapping[str, tuple[str, ...]]
    cross: tuple[tuple[str, str], ...] = ()
    _owner: dict = field(default=None, init=False, repr=False, compare=False)
    _edges: frozenset = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        object.__setattr__(self, "parts", {v: tuple(p) for v, p in self.parts.items()})
        object.__setattr__(self, "cross", tuple(tuple(e) for e in self.cross))
        owner: dict[str, str] = {}
        for v, part in self.parts.items():
            for x in part:
                owner.setdefault(x, v)
        object.__setattr__(self, "_owner", owner)
        object.__setattr__(self, "_edges", frozenset(frozenset(e) for e in self.edges))

    def owner(self, x: str) -> Optional[str]:
        return self._owner.get(x)

    def adjacent(self, a: str, b: str) -> bool:
        return frozenset((a, b)) in self._edges

    def matching(self, a: str, b: str) -> list[tuple[str, str]]:
        """Cross-edges between the parts of base vertices ``a`` and ``b``."""
        out = []
        for x, y in self.cross:
            ox, oy = self.owner(x), self.owner(y)
            if (ox, oy) == (a, b):
                out.append((x, y))
            elif (ox, oy) == (b, a):
                out.append((y, x))
        return out

    def is_full(self) -> bool:
        return all(len(set(self.matching(a, b))) == self.fold for a, b in self.edges) and not validate_cover(self)

    def without_cross(self, drop: Iterable[tuple[str, str]]) -> "Cover":
        gone = {frozenset(e) for e in drop}
        return Cover(
            self.fold, self.vertices, self.edges, self.parts,
            tuple(e for e in self.cross if frozenset(e) not in gone),
        )


class Violation(NamedTuple):
    axiom: str  # "1", "3", "4" or "fold"
    message: str

    def __str__(self) -> str:
        return f"axiom ({self.axiom}): {self.message}" if self.axiom != "fold" else f"fold: {self.message}"


def validate_cover(c: Cover) -> list[Violation]:
    """Every violation of the cover axioms; an empty list means valid.

    Completeness of each part is implicit in the representation.  The checks
    cover the partition into parts, cross-edges only along base edges, each
    base edge carrying a matching, and the ``m``-fold size of every part.
    """
    out: list[Violation] = []
    vset = set(c.vertices)
    for v in c.vertices:
        if v not in c.parts:
            out.append(Violation("1", f"base vertex {v} has no part"))
        elif not c.parts[v]:
            out.append(Violation("1", f"part of {v} is empty"))
        elif len(c.parts[v]) != c.fold:
            out.append(Violation("fold", f"part of {v} has {len(c.parts[v])} vertices, expected {c.fold}"))
    for v in c.parts:
        if v not in vset:
            out.append(Violation("1", f"part given for unknown base vertex {v}"))
    seen: dict[str, str] = {}
    for v, part in c.parts.items():
        if len(set(part)) != len(part):
            out.append(Violation("1", f"part of {v} repeats a cover vertex"))
        for x in part:
            if x in seen and seen[x] != v:
                out.append(Violation("1", f"cover vertex {x} lies in the parts of both {seen[x]} and {v}"))
            seen.setdefault(x, v)
    for a, b in c.edges:
        if a not in vset or b not in vset:
            out.append(Violation("1", f"base edge {a}-{b} uses an unknown vertex"))
    used: dict[tuple[str, str], dict[str, str]] = defaultdict(dict)
    for x, y in c.cross:
        ox, oy = c.owner(x), c.owner(y)
        if ox is None or oy is None:
            missing = x if ox is None else y
            out.append(Violation("1", f"cross-edge {x}-{y}: {missing} is in no part"))
            continue
        if ox == oy:
            continue  # edge inside a part, already implied
        if not c.adjacent(ox, oy):
            out.append(Violation("3", f"cross-edge {x}-{y} joins parts of non-adjacent {ox} and {oy}"))
            continue
        key = tuple(sorted((ox, oy)))
        partners = used[key]
        for p, q in ((x, y), (y, x)):
            if p in partners and partners[p] != q:
                out.append(Violation(
                    "4", f"cross-edges between {key[0]} and {key[1]} share endpoint {p} ({partners[p]}, {q})"
                ))
            partners.setdefault(p, q)
    return out


def _count(c: Cover, restrict: Mapping[str, tuple[str, ...]], order: Optional[Sequence[str]]) -> int:
    seq = list(c.vertices if order is None else order)
    pos = {v: i for i, v in enumerate(seq)}
    nbrs: dict[str, set[str]] = defaultdict(set)
    for x, y in c.cross:
        ox, oy = c.owner(x), c.owner(y)
        if ox is None or oy is None or ox == oy:
            continue
        nbrs[x].add(y)
        nbrs[y].add(x)
    # only conflicts with already placed vertices matter
    back = {
        x: frozenset(y for y in nbrs[x] if pos[c.owner(y)] < pos[c.owner(x)])
        for x in nbrs
    }
    candidates = [restrict.get(v, c.parts[v]) for v in seq]
    chosen: set[str] = set()

    def walk(depth: int) -> int:
        if depth == len(seq):
            return 1
        total = 0
        for x in candidates[depth]:
            if back.get(x, frozenset()).isdisjoint(chosen):
                chosen.add(x)
                total += walk(depth + 1)
                chosen.discard(x)
        return total

    return walk(0)


def count_transversals(c: Cover, order: Optional[Sequence[str]] = None) -> int:
    """Exact number of ``c``-colorings by backtracking over the parts.

    Parts are visited in ``order`` (default: ``c.vertices``, which for theta
    covers is ``u``, ``w`` and then each path in turn), checking each choice
    only against earlier choices.
    """
    return _count(c, {}, order)


class PinnedCount(NamedTuple):
    count: int
    conflict: bool  # two pins fell in the same part; count is then 0


def count_pinned(c: Cover, pins: Iterable[str], order: Optional[Sequence[str]] = None) -> PinnedCount:
    """Number of colorings containing every vertex of ``pins``."""
    restrict: dict[str, tuple[str, ...]] = {}
    for x in pins:
        v = c.owner(x)
        if v is None:
            raise ValueError(f"pin {x} is not a cover vertex")
        if v in restrict and restrict[v] != (x,):
            return PinnedCount(0, True)
        restrict[v] = (x,)
    return PinnedCount(_count(c, restrict, order), False)


def canonical_cover(
    vertices: Sequence[str], edges: Sequence[tuple[str, str]], m: int
) -> Cover:
    """Cover matching color ``j`` to color ``j`` across every edge."""
    parts = {v: tuple(cv(v, j) for j in range(1, m + 1)) for v in vertices}
    cross = [(cv(a, j), cv(b, j)) for a, b in edges for j in range(1, m + 1)]
    return Cover(m, tuple(vertices), tuple(edges), parts, tuple(cross))


def build_cover(spec: ThetaSpec, m: int, sig: Signature) -> Cover:
    """The full cover encoded by ``sig``.

    Every matching is the identity except the last one on each path (the edge
    into ``w``), which sends color ``i`` to ``τ_k(i)``.
    """
    if sig.fold != m or len(sig.perms) != spec.n:
        raise ValueError("signature does not match spec/fold")
    layout = vertex_layout(spec)
    parts = {v: tuple(cv(v, j) for j in range(1, m + 1)) for v in layout.vertices}
    cross: list[tuple[str, str]] = []
    for path, tau in zip(layout.paths, sig.perms):
        for a, b in zip(path, path[1:]):
            if b == "w":
                cross.extend((cv(a, i + 1), cv(b, tau[i] + 1)) for i in range(m))
            else:
                cross.extend((cv(a, j), cv(b, j)) for j in range(1, m + 1))
    return Cover(m, layout.vertices, layout.edges, parts, tuple(cross))


def path_cover(c: Cover, spec: ThetaSpec, k: int) -> Cover:
    """The cover restricted to path ``k`` (1-based) of a theta-graph cover.

    When ``l_1 = 1`` the direct ``u,w`` matching belongs to path 1 only and
    is removed from every other path's restriction.
    """
    layout = vertex_layout(spec)
    path = layout.paths[k - 1]
    keep = set(path)
    edges = tuple(zip(path, path[1:]))
    edge_keys = {frozenset(e) for e in edges}
    cross = tuple(
        (x, y) for x, y in c.cross
        if c.owner(x) in keep and c.owner(y) in keep
        and frozenset((c.owner(x), c.owner(y))) in edge_keys
    )
    parts = {v: c.parts[v] for v in path}
    return Cover(c.fold, path, edges, parts, cross)


# --- text serialization -----------------------------------------------------


def dump_cover(c: Cover) -> str:
    lines = [FORMAT_HEADER, f"fold {c.fold}"]
    lines += [f"vertex {v}" for v in c.vertices]
    lines += [f"edge {a} {b}" for a, b in c.edges]
    lines += [f"part {v} " + " ".join(c.parts[v]) for v in c.vertices if v in c.parts]
    lines += [f"cross {x} {y}" for x, y in c.cross]
    return "\n".join(lines) + "\n"


def load_cover(text: str) -> Cover:
    """Parse the line format written by :func:`dump_cover`.

    Blank lines and ``#`` comments (whole-line or trailing) after the header
    are ignored.  A missing
    ``part`` line for a vertex means the default part ``v:1 .. v:m``.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    if not lines or lines[0] != FORMAT_HEADER:
        raise ValueError(f"missing header {FORMAT_HEADER!r}")
    fold = None
    vertices: list[str] = []
    edges: list[tuple[str, str]] = []
    parts: dict[str, tuple[str, ...]] = {}
    cross: list[tuple[str, str]] = []
    for lineno, ln in enumerate(lines[1:], start=2):
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        key, *rest = ln.split()
        if key == "fold" and len(rest) == 1:
            fold = int(rest[0])
        elif key == "vertex" and len(rest) == 1:
            vertices.append(rest[0])
        elif key == "edge" and len(rest) == 2:
            edges.append((rest[0], rest[1]))
        elif key == "part" and len(rest) >= 1:
            parts[rest[0]] = tuple(rest[1:])
        elif key == "cross" and len(rest) == 2:
            cross.append((rest[0], rest[1]))
        else:
            raise ValueError(f"line {lineno}: cannot parse {ln!r}")
    if fold is None:
        raise ValueError("missing 'fold' line")
    for v in vertices:
        parts.setdefault(v, tuple(cv(v, j) for j in range(1, fold + 1)))
    return Cover(fold, tuple(vertices), tuple(edges), parts, tuple(cross))
