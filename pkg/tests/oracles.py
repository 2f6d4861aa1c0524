"""Brute-force oracles that share no code with the package.

Everything here enumerates colorings directly, so it is only usable on tiny
graphs; tests use it to pin down the fast implementations.
"""

from itertools import permutations, product


def theta_graph(lengths):
    """Vertices and edges of a theta graph; vertex 0 and 1 are the ends."""
    edges = []
    last_edges = []
    nxt = 2
    for l in lengths:
        prev = 0
        for _ in range(l - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, 1))
        last_edges.append(len(edges) - 1)
    return nxt, edges, last_edges


def proper_colorings(num_vertices, edges, m):
    return sum(
        all(c[a] != c[b] for a, b in edges)
        for c in product(range(m), repeat=num_vertices)
    )


def cycle_colorings(n, m):
    return proper_colorings(n, [(i, (i + 1) % n) for i in range(n)], m)


def signature_colorings(lengths, m, perms):
    """Transversals of the cover where every edge carries the identity
    matching except the last edge of path ``k``, which joins color ``i`` of
    its inner end to color ``perms[k][i]`` of the far end vertex."""
    nv, edges, last = theta_graph(lengths)
    twist = {e: perms[k] for k, e in enumerate(last)}
    total = 0
    for c in product(range(m), repeat=nv):
        ok = True
        for idx, (a, b) in enumerate(edges):
            tau = twist.get(idx)
            if tau is None:
                if c[a] == c[b]:
                    ok = False
                    break
            elif tau[c[a]] == c[b]:
                ok = False
                break
        total += ok
    return total


def path_pinned(length, m, i, j):
    """Colorings of a path of ``length`` edges with ends fixed to ``i`` and ``j``."""
    inner = length - 1
    count = 0
    for mid in product(range(m), repeat=inner):
        seq = (i, *mid, j)
        count += all(seq[t] != seq[t + 1] for t in range(length))
    return count


def all_signatures(n, m):
    ident = tuple(range(m))
    for rest in product(permutations(range(m)), repeat=n - 1):
        yield (ident, *rest)
