"""Exact chromatic, clique and independence numbers with certificates."""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Sequence

from .constructions import CycleUnionSpec
from .graph import Graph, complement, is_clique, is_independent, is_regular, iter_bits


class Unresolved(RuntimeError):
    """Raised when a solve exceeds its deadline; the result is never approximated."""


@dataclass(frozen=True)
class Coloring:
    colors: tuple[int, ...]

    @property
    def k(self) -> int:
        return max(self.colors, default=-1) + 1

    @classmethod
    def normalized(cls, colors: Sequence[int]) -> Coloring:
        """Renumber colours ``0..k-1`` in order of first appearance."""
        remap: dict[int, int] = {}
        return cls(tuple(remap.setdefault(c, len(remap)) for c in colors))

    def classes(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.colors):
            out[c].append(v)
        return out

    def is_proper(self, g: Graph) -> bool:
        if len(self.colors) != g.n:
            return False
        if set(self.colors) != set(range(self.k)):
            return False
        return all(self.colors[u] != self.colors[v] for u, v in g.edges())


def greedy_dsatur(g: Graph) -> Coloring:
    """DSATUR: highest saturation, then highest degree, then lowest index."""
    n = g.n
    adj = g.adj
    colors = [-1] * n
    seen = [0] * n  # bitmask of neighbour colours
    deg = [row.bit_count() for row in adj]
    for _ in range(n):
        v = max(
            (u for u in range(n) if colors[u] < 0),
            key=lambda u: (seen[u].bit_count(), deg[u], -u),
        )
        c = 0
        while seen[v] >> c & 1:
            c += 1
        colors[v] = c
        for u in iter_bits(adj[v]):
            seen[u] |= 1 << c
    return Coloring.normalized(colors)


def max_clique(g: Graph) -> list[int]:
    """Maximum clique by branch and bound with a greedy-colouring bound."""
    adj = g.adj
    best: list[int] = []

    def colour_sort(p: int) -> list[tuple[int, int]]:
        out = []
        k = 0
        rest = p
        while rest:
            k += 1
            q = rest
            while q:
                low = q & -q
                v = low.bit_length() - 1
                q &= ~adj[v] & ~low
                rest &= ~low
                out.append((v, k))
        return out

    def expand(r: list[int], p: int) -> None:
        nonlocal best
        for v, bound in reversed(colour_sort(p)):
            if len(r) + bound <= len(best):
                return
            r.append(v)
            np_ = p & adj[v]
            if np_:
                expand(r, np_)
            elif len(r) > len(best):
                best = list(r)
            r.pop()
            p &= ~(1 << v)

    if g.n:
        expand([], (1 << g.n) - 1)
    return sorted(best)


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def max_independent_set(g: Graph) -> list[int]:
    return max_clique(complement(g))


def independence_number(g: Graph) -> int:
    return len(max_independent_set(g))


@dataclass
class _ColorSearch:
    adj: tuple[int, ...]
    k: int
    deadline: float | None = None
    nodes: int = 0
    colors: list[int] = field(default_factory=list)

    def run(self, seed: Sequence[int]) -> bool:
        n = len(self.adj)
        self.colors = [-1] * n
        classes = [0] * self.k
        for c, v in enumerate(seed):
            self.colors[v] = c
            classes[c] |= 1 << v
        uncolored = ((1 << n) - 1) & ~sum(1 << v for v in seed)
        return self._dfs(classes, uncolored, len(seed))

    def _dfs(self, classes: list[int], uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        self.nodes += 1
        if self.deadline is not None and self.nodes & 1023 == 0 and time.monotonic() > self.deadline:
            raise Unresolved("k-colourability search exceeded its time limit")
        adj = self.adj
        best_v = -1
        best_key = (-1, -1)
        best_free = 0
        for v in iter_bits(uncolored):
            row = adj[v]
            free = 0
            sat = 0
            for c in range(used):
                if row & classes[c]:
                    sat += 1
                else:
                    free |= 1 << c
            if used < self.k:
                free |= 1 << used
            if not free:
                return False
            key = (sat, (row & uncolored).bit_count())
            if key > best_key:
                best_key, best_v, best_free = key, v, free
        v = best_v
        bit = 1 << v
        rest = uncolored & ~bit
        for c in iter_bits(best_free):
            classes_c = classes[c] if c < used else 0
            if c < used:
                classes[c] = classes_c | bit
                ok = self._dfs(classes, rest, used)
                classes[c] = classes_c
            else:
                classes[c] = bit
                ok = self._dfs(classes, rest, used + 1)
                classes[c] = 0
            if ok:
                self.colors[v] = c
                return True
        return False


def _solve_k(g: Graph, k: int, clique: Sequence[int], deadline: float | None) -> tuple[Coloring | None, int]:
    if g.n == 0:
        return Coloring(()), 0
    if len(clique) > k:
        return None, 0
    search = _ColorSearch(g.adj, k, deadline)
    if not search.run(clique):
        return None, search.nodes
    return Coloring.normalized(search.colors), search.nodes


def is_k_colorable(g: Graph, k: int, timeout: float | None = None) -> Coloring | None:
    """Exact k-colourability; returns a proper colouring with at most k colours or None."""
    deadline = None if timeout is None else time.monotonic() + timeout
    coloring, _ = _solve_k(g, k, max_clique(g), deadline)
    return coloring


@dataclass(frozen=True)
class ChromaticResult:
    """``chi`` with its certificates.

    ``clique`` is a maximum clique.  When it is smaller than ``chi`` the
    lower bound rests on the exhaustive refutation of ``refuted_k``-colourings,
    whose search size is ``refutation_nodes``.
    """

    chi: int
    coloring: Coloring
    clique: tuple[int, ...]
    refuted_k: int | None
    refutation_nodes: int

    @property
    def lower_bound_witness(self) -> str:
        if len(self.clique) == self.chi:
            return "clique"
        return "refutation"


def chromatic_number(g: Graph, timeout: float | None = None) -> ChromaticResult:
    """Descend from the DSATUR bound, seeding every probe with a maximum clique."""
    deadline = None if timeout is None else time.monotonic() + timeout
    if g.n == 0:
        return ChromaticResult(0, Coloring(()), (), None, 0)
    clique = max_clique(g)
    best = greedy_dsatur(g)
    nodes = 0
    refuted = None
    k = best.k - 1
    while k >= len(clique):
        found, used = _solve_k(g, k, clique, deadline)
        nodes = used
        if found is None:
            refuted = k
            break
        best = found
        k = best.k - 1
    if refuted is None and best.k > 1:
        refuted = best.k - 1
        nodes = 0
    return ChromaticResult(best.k, best, tuple(clique), refuted, nodes)


def chi(g: Graph) -> int:
    return chromatic_number(g).chi


def predicted_chi_cycle_union(spec: CycleUnionSpec | Sequence[int]) -> int:
    """Chromatic number of the complement of a union of cycles.

    A triangle contributes one colour; a longer cycle of length m contributes
    ceil(m/2), its minimum cover by edges.
    """
    lengths = spec.lengths if isinstance(spec, CycleUnionSpec) else tuple(spec)
    CycleUnionSpec(lengths)
    mult = Counter(lengths)
    return mult[3] + sum(cnt * ((m + 1) // 2) for m, cnt in mult.items() if m >= 4)


def reed_value(g: Graph) -> int:
    omega = clique_number(g)
    return -(-(omega + 1 + g.max_degree) // 2)


@dataclass(frozen=True)
class InvariantReport:
    n: int
    chi: int
    coloring: tuple[int, ...]
    omega: int
    clique: tuple[int, ...]
    alpha: int
    independent_set: tuple[int, ...]
    delta_max: int
    reed_value: int
    regular: int | None

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "chi": self.chi,
            "coloring": list(self.coloring),
            "omega": self.omega,
            "clique": list(self.clique),
            "alpha": self.alpha,
            "independent_set": list(self.independent_set),
            "delta_max": self.delta_max,
            "reed_value": self.reed_value,
            "regular": self.regular,
        }


def invariants(g: Graph, timeout: float | None = None) -> InvariantReport:
    res = chromatic_number(g, timeout)
    indep = max_independent_set(g)
    omega = len(res.clique)
    delta = g.max_degree
    report = InvariantReport(
        n=g.n,
        chi=res.chi,
        coloring=res.coloring.colors,
        omega=omega,
        clique=res.clique,
        alpha=len(indep),
        independent_set=tuple(indep),
        delta_max=delta,
        reed_value=-(-(omega + 1 + delta) // 2),
        regular=is_regular(g),
    )
    if not (res.coloring.is_proper(g) and is_clique(g, res.clique) and is_independent(g, indep)):
        raise AssertionError("certificate failed verification")
    return report
