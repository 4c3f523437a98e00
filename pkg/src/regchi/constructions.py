"""Named graph families: Turán graphs, antiholes, cycle-union complements,
the doubled Turán graph, T*, G_{a,c,t}, T**_{16,3} and the product
witness ``T_{a chi, chi} x K_{b+1}``.

Labelling conventions are fixed so that matchings and removed edges are
reproducible; every function documents its layout.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import (
    Graph,
    GraphError,
    cartesian_product,
    complement,
    complete,
    cycle,
    disjoint_union,
)


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class TuranSpec:
    n: int
    k: int

    def __post_init__(self) -> None:
        if not 1 <= self.k <= self.n:
            raise ConstructionError(f"Turán graph needs 1 <= k <= n, got n={self.n}, k={self.k}")

    @property
    def a(self) -> int:
        return self.n // self.k

    @property
    def b(self) -> int:
        return self.n % self.k

    def part_sizes(self) -> list[int]:
        """Larger parts first: ``b`` parts of size ``a+1`` then ``k-b`` of size ``a``."""
        return [self.a + 1] * self.b + [self.a] * (self.k - self.b)


@dataclass(frozen=True)
class CycleUnionSpec:
    lengths: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.lengths:
            raise ConstructionError("cycle union needs at least one cycle")
        bad = [m for m in self.lengths if m < 3]
        if bad:
            raise ConstructionError(f"cycle lengths must be >= 3, got {bad}")

    @property
    def order(self) -> int:
        return sum(self.lengths)


def parts_layout(sizes: Sequence[int]) -> list[list[int]]:
    """Contiguous vertex blocks for the given part sizes."""
    parts = []
    start = 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    return parts


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    label = []
    for i, s in enumerate(sizes):
        label.extend([i] * s)
    n = len(label)
    return Graph.from_edges(
        n, ((u, v) for u in range(n) for v in range(u + 1, n) if label[u] != label[v])
    )


def turan(n: int, k: int) -> Graph:
    """Complete k-partite graph with near-equal parts, the larger parts first."""
    return complete_multipartite(TuranSpec(n, k).part_sizes())


def turan_edge_count(n: int, k: int) -> int:
    """Exact size of ``T_{n,k}``, from its part sizes."""
    sizes = TuranSpec(n, k).part_sizes()
    return (n * n - sum(s * s for s in sizes)) // 2


def turan_size_bound(n: int, k: int) -> int:
    """``floor((k-1) n^2 / 2k)``: an upper bound on the size of ``T_{n,k}``.

    Equality holds for k <= 7 but can fail beyond (``T_{12,8}`` has 62 edges,
    the bound gives 63).
    """
    return (k - 1) * n * n // (2 * k)


def antihole(n: int) -> Graph:
    if n < 4:
        raise ConstructionError(f"antihole needs n >= 4, got {n}")
    return complement(cycle(n))


def cycle_union(spec: CycleUnionSpec | Sequence[int]) -> Graph:
    if not isinstance(spec, CycleUnionSpec):
        spec = CycleUnionSpec(tuple(spec))
    return disjoint_union([cycle(m) for m in spec.lengths])


def cycle_union_complement(spec: CycleUnionSpec | Sequence[int]) -> Graph:
    """Complement of the disjoint union of cycles, cycles laid out in the given order."""
    return complement(cycle_union(spec))


def doubled_turan(n: int, chi: int) -> Graph:
    """Two copies of ``T_{n,chi}`` joined by a matching on their deficient vertices.

    Copy 1 occupies ``0..n-1``, copy 2 ``n..2n-1``; the ``i``-th vertex of the
    larger parts in copy 1 is matched to the ``i``-th in copy 2.
    """
    spec = TuranSpec(n, chi)
    if spec.b == 0:
        raise ConstructionError(f"T_{{{n},{chi}}} is regular (b = 0); nothing to match")
    t = turan(n, chi)
    deficient = spec.b * (spec.a + 1)
    edges = list(t.edges())
    edges += [(u + n, v + n) for u, v in t.edges()]
    edges += [(i, i + n) for i in range(deficient)]
    return Graph.from_edges(2 * n, edges)


def t_star_parts(n: int, chi: int) -> list[list[int]]:
    """Parts of ``T*_{n,chi}``: the ``chi-b`` parts of size ``a`` first, then size ``a+1``."""
    a, b = divmod(n, chi)
    return parts_layout([a] * (chi - b) + [a + 1] * b)


def t_star_removed_edges(n: int, chi: int) -> list[tuple[int, int]]:
    if chi < 3:
        raise ConstructionError(f"T* needs chi >= 3, got {chi}")
    a, b = divmod(n, chi)
    if a < 2:
        raise ConstructionError(f"T* needs parts of size a >= 2, got a={a}")
    parts = t_star_parts(n, chi)
    small = chi - b
    removed: list[tuple[int, int]] = []
    if small % 2 == 0:
        pairs = range(0, small, 2)
    else:
        if small < 3 or a % 2:
            raise ConstructionError(
                f"T*_{{{n},{chi}}}: chi-b={small} is odd, which needs chi-b >= 3 and a even"
            )
        pairs = range(3, small, 2)
        h = a // 2
        for i in range(3):
            first = parts[i][:h]
            second = parts[(i + 1) % 3][h:]
            removed.extend(zip(first, second))
    for i in pairs:
        removed.extend(zip(parts[i], parts[i + 1]))
    return removed


def t_star(n: int, chi: int) -> Graph:
    """Complete multipartite graph minus the matchings that make it regular.

    Even ``chi-b``: drop the index-matching between parts (1,2), (3,4), ...
    Odd ``chi-b``: drop index-matchings between parts (4,5), (6,7), ... and
    the three half-part matchings first-half(V_i) -> second-half(V_{i+1})
    cyclically over i = 1, 2, 3.
    """
    a, b = divmod(n, chi)
    full = complete_multipartite([a] * (chi - b) + [a + 1] * b)
    removed = {frozenset(e) for e in t_star_removed_edges(n, chi)}
    return Graph.from_edges(n, (e for e in full.edges() if frozenset(e) not in removed))


def g_act_vertices(a: int, c: int, t: int) -> tuple[list[int], list[int]]:
    """The ``u`` (first ``c`` of part 1) and ``v`` (first ``c`` of part 2) vertices."""
    return list(range(c)), list(range(a, a + c))


def g_act(a: int, c: int, t: int) -> Graph:
    """``T_{at,t}`` with the u-v edges off the index matching replaced by two c-cliques."""
    if t < 2 or a < 2 or not 1 <= c < a:
        raise ConstructionError(f"G_{{a,c,t}} needs t >= 2, a >= 2, 1 <= c < a; got {a},{c},{t}")
    base = turan(a * t, t)
    us, vs = g_act_vertices(a, c, t)
    drop = {frozenset((us[i], vs[j])) for i in range(c) for j in range(c) if i != j}
    edges = [e for e in base.edges() if frozenset(e) not in drop]
    edges += [(us[i], us[j]) for i in range(c) for j in range(i + 1, c)]
    edges += [(vs[i], vs[j]) for i in range(c) for j in range(i + 1, c)]
    return Graph.from_edges(a * t, edges)


# U = u1..u5 -> 0..4, V = v1..v5 -> 5..9, W = w1..w6 -> 10..15
_T16_REMOVED = (
    "w1v1", "v1u1", "u1w4", "w2v2", "v2u2", "u2w5", "w3v3",
    "v3u3", "u3w6", "u4v4", "v4u5", "u5v5", "v5u4",
)


def _t16_vertex(name: str) -> int:
    base = {"u": 0, "v": 5, "w": 10}[name[0]]
    return base + int(name[1:]) - 1


def t_double_star_16_3_removed() -> list[tuple[int, int]]:
    out = []
    for pair in _T16_REMOVED:
        x, y = pair[:2], pair[2:]
        out.append((_t16_vertex(x), _t16_vertex(y)))
    return out


def t_double_star_16_3() -> Graph:
    """``T_{16,3}`` with parts U, V (size 5) and W (size 6) minus 13 fixed edges."""
    full = complete_multipartite([5, 5, 6])
    removed = {frozenset(e) for e in t_double_star_16_3_removed()}
    return Graph.from_edges(16, (e for e in full.edges() if frozenset(e) not in removed))


def decompose(r: int, chi: int) -> tuple[int, int]:
    """Return ``(a, b)`` with ``r = a(chi-1) + b``, taking ``b = r mod (chi-1)``."""
    if not 2 <= chi <= r + 1:
        raise ConstructionError(f"need 2 <= chi <= r+1, got r={r}, chi={chi}")
    return divmod(r, chi - 1)


def theorem1_graph(r: int, chi: int) -> Graph:
    """The product ``T_{a chi, chi} x K_{b+1}``: r-regular with chromatic number chi."""
    a, b = decompose(r, chi)
    return cartesian_product(turan(a * chi, chi), complete(b + 1))


def prism(k: int) -> Graph:
    """``K_k x K_2``; the copy of vertex ``i`` in layer ``j`` is ``2i + j``."""
    if k < 1:
        raise GraphError("prism needs k >= 1")
    return cartesian_product(complete(k), complete(2))
