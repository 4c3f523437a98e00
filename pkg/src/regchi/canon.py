"""Canonical labelling, isomorphism and vertex-transitivity.

The labelling is computed by individualisation-refinement: equitable
partition refinement, then a depth-first search tree over individualised
vertices.  The canonical form is the smallest relabelled adjacency tuple
among the leaves.  Subtrees are skipped when a known automorphism maps
them onto an explored subtree, which keeps highly symmetric inputs such
as complete multipartite graphs cheap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, iter_bits

DEFAULT_TRANSITIVITY_LIMIT = 16


class SizeLimitError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Label-invariant key; equal iff the (coloured) graphs are isomorphic."""

    n: int
    colour_sizes: tuple[int, ...]
    rows: tuple[int, ...]


def _refine(adj: Sequence[int], cells: list[list[int]], splitters: list[int]) -> list[list[int]]:
    n = len(adj)
    qi = 0
    while qi < len(splitters) and len(cells) < n:
        s = splitters[qi]
        qi += 1
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v in cell:
                groups.setdefault((adj[v] & s).bit_count(), []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for key in sorted(groups):
                part = groups[key]
                out.append(part)
                m = 0
                for v in part:
                    m |= 1 << v
                splitters.append(m)
        cells = out
    return cells


def _initial_cells(n: int, colours: Sequence | None) -> list[list[int]]:
    if colours is None:
        return [list(range(n))] if n else []
    classes: dict = {}
    for v, c in enumerate(colours):
        classes.setdefault(c, []).append(v)
    return [classes[c] for c in sorted(classes)]


class _Orbits:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        p = self.parent
        while p[v] != v:
            p[v] = p[p[v]]
            v = p[v]
        return v

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class _Search:
    adj: tuple[int, ...]
    best_rows: tuple[int, ...] | None = None
    best_order: list[int] | None = None
    best_path: list[int] = field(default_factory=list)
    first_rows: tuple[int, ...] | None = None
    first_order: list[int] | None = None
    first_path: list[int] = field(default_factory=list)
    automorphisms: list[tuple[int, ...]] = field(default_factory=list)

    def _certificate(self, order: list[int]) -> tuple[int, ...]:
        pos = [0] * len(order)
        for i, v in enumerate(order):
            pos[v] = i
        adj = self.adj
        rows = []
        for v in order:
            m = 0
            for u in iter_bits(adj[v]):
                m |= 1 << pos[u]
            rows.append(m)
        return tuple(rows)

    def _record(self, src: list[int], dst: list[int]) -> None:
        gamma = [0] * len(src)
        for a, b in zip(src, dst):
            gamma[a] = b
        t = tuple(gamma)
        if any(gamma[v] != v for v in range(len(gamma))) and t not in self.automorphisms:
            self.automorphisms.append(t)

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        for x, y in zip(a, b):
            if x != y:
                break
            k += 1
        return k

    def leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        order = [c[0] for c in cells]
        rows = self._certificate(order)
        if self.first_rows is None:
            self.first_rows = self.best_rows = rows
            self.first_order = self.best_order = order
            self.first_path = self.best_path = list(path)
            return None
        if rows == self.first_rows:
            self._record(self.first_order, order)
            return self._common(self.first_path, path)
        if rows < self.best_rows:
            self.best_rows, self.best_order, self.best_path = rows, order, list(path)
            return None
        if rows == self.best_rows:
            self._record(self.best_order, order)
            return self._common(self.best_path, path)
        return None

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        if len(cells) == len(self.adj):
            return self.leaf(cells, path)
        depth = len(path)
        target_i = min(
            (i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: (len(cells[i]), i)
        )
        target = cells[target_i]
        explored: list[int] = []
        for v in sorted(target):
            if explored and self._equivalent(v, explored, path):
                continue
            explored.append(v)
            child = cells[:target_i] + [[v], [w for w in target if w != v]] + cells[target_i + 1:]
            child = _refine(self.adj, child, [1 << v])
            jump = self.run(child, path + [v])
            if jump is not None and jump < depth:
                return jump
        return None

    def _equivalent(self, v: int, explored: list[int], path: list[int]) -> bool:
        gens = [g for g in self.automorphisms if all(g[p] == p for p in path)]
        if not gens:
            return False
        orb = _Orbits(len(self.adj))
        for g in gens:
            for a, b in enumerate(g):
                orb.union(a, b)
        rv = orb.find(v)
        return any(orb.find(u) == rv for u in explored)


def _vertex_invariant(g: Graph, colours: Sequence[int] | None) -> list[tuple]:
    # Sorted common-neighbour counts: cheap, isomorphism-invariant, and it
    # separates vertices of regular graphs that plain refinement cannot.
    adj = g.adj
    out = []
    for v in range(g.n):
        prof = tuple(sorted((adj[v] & adj[u]).bit_count() for u in range(g.n) if u != v))
        out.append((0 if colours is None else colours[v], prof))
    return out


def _search(g: Graph, colours: Sequence[int] | None) -> _Search:
    st = _Search(g.adj)
    if g.n:
        cells = _initial_cells(g.n, _vertex_invariant(g, colours))
        splitters = []
        for c in cells:
            m = 0
            for v in c:
                m |= 1 << v
            splitters.append(m)
        st.run(_refine(g.adj, cells, splitters), [])
    return st


def canonical_labeling(g: Graph, colours: Sequence[int] | None = None) -> list[int]:
    """Return ``perm`` with ``perm[v]`` the canonical position of vertex ``v``."""
    st = _search(g, colours)
    perm = [0] * g.n
    for i, v in enumerate(st.best_order or []):
        perm[v] = i
    return perm


def canonical_form(g: Graph, colours: Sequence[int] | None = None) -> CanonicalForm:
    st = _search(g, colours)
    sizes: tuple[int, ...] = ()
    if colours is not None:
        sizes = tuple(len(c) for c in _initial_cells(g.n, colours))
    return CanonicalForm(g.n, sizes, st.best_rows or ())


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_labeling(g))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    if sorted(r.bit_count() for r in g.adj) != sorted(r.bit_count() for r in h.adj):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphism_generators(g: Graph) -> list[tuple[int, ...]]:
    """Automorphisms met during the canonical search (not necessarily a full generating set)."""
    return list(_search(g, None).automorphisms)


def is_vertex_transitive(g: Graph, limit: int = DEFAULT_TRANSITIVITY_LIMIT) -> bool:
    if g.n > limit:
        raise SizeLimitError(f"order {g.n} exceeds the transitivity limit {limit}")
    if g.n <= 1:
        return True
    if len({r.bit_count() for r in g.adj}) > 1:
        return False
    orb = _Orbits(g.n)
    for gamma in _search(g, None).automorphisms:
        for a, b in enumerate(gamma):
            orb.union(a, b)

    def rooted(v: int) -> CanonicalForm:
        colours = [1] * g.n
        colours[v] = 0
        return canonical_form(g, colours)

    base = rooted(0)
    for v in range(1, g.n):
        if orb.find(v) == orb.find(0):
            continue
        if rooted(v) != base:
            return False
        orb.union(0, v)
    return True
