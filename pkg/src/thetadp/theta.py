"""Generalized theta graphs and their path-ordering conventions.

A generalized theta graph ``Θ(l_1, ..., l_n)`` joins two end vertices ``u``
and ``w`` by ``n`` internally disjoint paths of the given lengths.  Every
other module assumes the ordering enforced here:

* ``l_1`` is the minimum length, and only ``l_1`` may equal 1;
* if the lengths do not all share a parity, ``l_2, ..., l_r`` have the parity
  opposite to ``l_1`` and ``l_{r+1}, ..., l_n`` share the parity of ``l_1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


@dataclass(frozen=True)
class ThetaSpec:
    """Canonically ordered path lengths of a generalized theta graph.

    Construct through :func:`canonicalize` unless the lengths are already in
    canonical order; the constructor validates but never reorders.
    """

    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        lengths = tuple(int(x) for x in self.lengths)
        object.__setattr__(self, "lengths", lengths)
        if len(lengths) < 2:
            raise ValueError(f"need at least two paths, got {len(lengths)}")
        if any(x < 1 for x in lengths):
            raise ValueError(f"path lengths must be positive: {lengths}")
        if sum(1 for x in lengths if x == 1) > 1:
            raise ValueError(f"more than one path of length 1 gives a multigraph: {lengths}")
        if lengths[0] != min(lengths):
            raise ValueError(f"first length must be the minimum: {lengths}")
        p1 = lengths[0] % 2
        seen_same = False
        for x in lengths[1:]:
            if x % 2 == p1:
                seen_same = True
            elif seen_same:
                raise ValueError(
                    f"lengths of the opposite parity to l_1 must come directly after l_1: {lengths}"
                )

    @property
    def n(self) -> int:
        return len(self.lengths)

    @property
    def r(self) -> Optional[int]:
        """1-based index of the last path whose parity differs from ``l_1``, or None."""
        p1 = self.lengths[0] % 2
        r = None
        for i, x in enumerate(self.lengths, start=1):
            if x % 2 != p1:
                r = i
        return r

    @property
    def t(self) -> int:
        r = self.r
        return 1 if r is None else r

    @property
    def same_parity(self) -> bool:
        return self.r is None

    @property
    def num_vertices(self) -> int:
        return 2 + sum(x - 1 for x in self.lengths)

    @property
    def num_edges(self) -> int:
        return sum(self.lengths)

    def __str__(self) -> str:
        return "Θ(" + ",".join(map(str, self.lengths)) + ")"


def canonicalize(lengths: Iterable[int]) -> ThetaSpec:
    """Reorder ``lengths`` into canonical form.

    The minimum goes first, then the lengths of the opposite parity, then the
    remaining lengths of the same parity as the minimum; each block is sorted
    ascending so the result is unique.

    >>> canonicalize((3, 2, 3, 2, 3)).lengths
    (2, 3, 3, 3, 2)
    """
    xs = [int(x) for x in lengths]
    if not xs:
        raise ValueError("empty length sequence")
    if len(xs) < 2:
        raise ValueError(f"need at least two paths, got {len(xs)}")
    if any(x < 1 for x in xs):
        raise ValueError(f"path lengths must be positive: {tuple(xs)}")
    if xs.count(1) > 1:
        raise ValueError(f"more than one path of length 1 gives a multigraph: {tuple(xs)}")
    xs.sort()
    first, rest = xs[0], xs[1:]
    other = [x for x in rest if x % 2 != first % 2]
    same = [x for x in rest if x % 2 == first % 2]
    return ThetaSpec((first, *other, *same))


def parse_spec(text: str) -> ThetaSpec:
    """Parse ``"2,3,3,3,2"`` and canonicalize it."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    try:
        values = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"cannot parse theta spec {text!r}") from exc
    return canonicalize(values)


def vertex_name(k: int, step: int) -> str:
    """Name of the ``step``-th interior vertex (1-based) of path ``k`` (1-based)."""
    return f"v{k}.{step}"


@dataclass(frozen=True)
class Layout:
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    paths: tuple[tuple[str, ...], ...]  # each path listed u, interior..., w


def vertex_layout(spec: ThetaSpec) -> Layout:
    """Vertices and edges of the theta graph, ``u`` and ``w`` first.

    Interior vertices are named ``v{k}.{s}``; edges run along each path from
    ``u`` to ``w``.
    """
    vertices = ["u", "w"]
    edges: list[tuple[str, str]] = []
    paths = []
    for k, length in enumerate(spec.lengths, start=1):
        interior = [vertex_name(k, s) for s in range(1, length)]
        vertices.extend(interior)
        path = ("u", *interior, "w")
        paths.append(path)
        edges.extend(zip(path, path[1:]))
    return Layout(tuple(vertices), tuple(edges), tuple(paths))
