"""Independent reference implementations used only by the tests.

Nothing here imports the package: each oracle works from plain edge lists
or networkx graphs so that a bug in the library cannot hide itself.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

import networkx as nx


def to_nx(g) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def brute_chi(n: int, edges) -> int:
    """Chromatic number by dynamic programming over vertex subsets."""
    if n == 0:
        return 0
    nbr = [0] * n
    for u, v in edges:
        nbr[u] |= 1 << v
        nbr[v] |= 1 << u
    full = (1 << n) - 1
    independent = [True] * (1 << n)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        rest = s & ~(1 << low)
        independent[s] = independent[rest] and not (nbr[low] & rest)
    best = [0] + [n + 1] * full
    for s in range(1, 1 << n):
        low = s & -s
        rest = s ^ low
        # every colouring of s puts the lowest vertex in some independent set t
        t = rest
        while True:
            cand = t | low
            if independent[cand]:
                val = best[s ^ cand] + 1
                if val < best[s]:
                    best[s] = val
            if t == 0:
                break
            t = (t - 1) & rest
    return best[full]


def brute_clique(n: int, edges) -> int:
    adj = {frozenset(e) for e in edges}
    for k in range(n, 0, -1):
        for sub in itertools.combinations(range(n), k):
            if all(frozenset(p) in adj for p in itertools.combinations(sub, 2)):
                return k
    return 0


def perm_canonical(n: int, edges) -> tuple:
    """Smallest sorted edge tuple over all n! relabellings."""
    best = None
    for p in itertools.permutations(range(n)):
        key = tuple(sorted(tuple(sorted((p[u], p[v]))) for u, v in edges))
        if best is None or key < best:
            best = key
    return best


@lru_cache(maxsize=None)
def brute_regular_classes(n: int, r: int) -> tuple[nx.Graph, ...]:
    """Isomorphism classes of r-regular graphs on n vertices, by brute force.

    Every labelled r-regular edge set is produced by choosing n*r/2 of the
    possible edges; classes are separated with networkx isomorphism tests.
    """
    if n * r % 2 or r >= n:
        return ()
    pairs = list(itertools.combinations(range(n), 2))
    reps: list[nx.Graph] = []
    for chosen in itertools.combinations(pairs, n * r // 2):
        deg = [0] * n
        for u, v in chosen:
            deg[u] += 1
            deg[v] += 1
        if any(d != r for d in deg):
            continue
        h = nx.Graph()
        h.add_nodes_from(range(n))
        h.add_edges_from(chosen)
        if not any(nx.is_isomorphic(h, k) for k in reps):
            reps.append(h)
    return tuple(reps)


def atlas_regular_counts(max_n: int = 7) -> dict[tuple[int, int], int]:
    """(n, r) -> number of r-regular graphs from the networkx graph atlas."""
    counts: dict[tuple[int, int], int] = {}
    for g in nx.graph_atlas_g():
        n = g.number_of_nodes()
        if n == 0 or n > max_n:
            continue
        degs = {d for _, d in g.degree()}
        if len(degs) == 1:
            key = (n, degs.pop())
            counts[key] = counts.get(key, 0) + 1
    return counts


def nx_graph6(g) -> str:
    return nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
