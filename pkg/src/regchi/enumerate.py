"""Generation of r-regular graphs up to isomorphism.

Adjacency rows are filled in vertex order.  Two prunes keep the labelled
search small: the residual degree sequence must stay graphical
(Erdős–Gallai), and every pair of rows ``h < j`` must satisfy
``A[h] \\ {h,j} >= A[j] \\ {h,j}`` lexicographically, which the row-major
lexicographically largest relabelling of any graph satisfies.  Survivors
are deduplicated by canonical form.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from typing import Iterator

from .canon import canonical_labeling
from .formats import encode_graph6
from .graph import Graph, complement, cycle, disjoint_union


class EnumerationError(ValueError):
    pass


def graphical(seq: list[int]) -> bool:
    """Erdős–Gallai test for a degree sequence on a simple graph."""
    d = sorted((x for x in seq if x), reverse=True)
    if any(x < 0 for x in seq):
        return False
    total = sum(d)
    if total % 2:
        return False
    n = len(d)
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        rhs = k * (k - 1) + sum(min(x, k) for x in d[k:])
        if prefix > rhs:
            return False
    return True


_SPLIT_DEPTH = 2


def _search(
    n: int, d: int, stop_after: int | None = None, start: tuple[int, ...] | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield surviving adjacency rows; ``stop_after``/``start`` split the tree for workers."""
    rows = [0] * n
    deg = [0] * n
    first = 0
    if start is not None:
        rows = list(start)
        deg = [r.bit_count() for r in rows]
        first = _SPLIT_DEPTH

    def pairs_ok(i: int) -> bool:
        # Rows 0..i are complete; every other row is known on columns 0..i.
        ri = rows[i]
        for h in range(i):
            x = (rows[h] ^ ri) & ~((1 << h) | (1 << i))
            if x and ri & (x & -x):
                return False
        prefix = (1 << (i + 1)) - 1
        for h in range(n - 1):
            rh = rows[h]
            mask = prefix & ~(1 << h)
            for j in range(max(h + 1, i + 1), n):
                x = (rh ^ rows[j]) & mask
                if x and rows[j] & (x & -x):
                    return False
        return True

    def rec(i: int) -> Iterator[tuple[int, ...]]:
        if stop_after is not None and i == stop_after:
            yield tuple(rows)
            return
        if i == n:
            yield tuple(rows)
            return
        need = d - deg[i]
        cand = [j for j in range(i + 1, n) if deg[j] < d]
        if need > len(cand):
            return
        for combo in itertools.combinations(cand, need):
            bits = 0
            for j in combo:
                bits |= 1 << j
                rows[j] |= 1 << i
                deg[j] += 1
            rows[i] |= bits
            deg[i] = d
            if pairs_ok(i) and graphical([d - deg[j] for j in range(i + 1, n)]):
                yield from rec(i + 1)
            rows[i] &= ~bits
            deg[i] = d - need
            for j in combo:
                rows[j] &= ~(1 << i)
                deg[j] -= 1

    if start is None and not graphical([d] * n):
        return
    yield from rec(first)


def _canon_key(rows: tuple[int, ...]) -> tuple[str, tuple[int, ...]]:
    g = Graph(len(rows), rows)
    c = g.relabel(canonical_labeling(g))
    return encode_graph6(c), c.adj


def _collect(n: int, d: int, start: tuple[int, ...] | None) -> dict[str, tuple[int, ...]]:
    out: dict[str, tuple[int, ...]] = {}
    for rows in _search(n, d, start=start):
        key, adj = _canon_key(rows)
        out.setdefault(key, adj)
    return out


def _low_degree(n: int, d: int) -> list[Graph] | None:
    if d == 0:
        return [Graph.empty(n)]
    if d == 1:
        return [Graph.from_edges(n, ((2 * i, 2 * i + 1) for i in range(n // 2)))]
    if d == 2:
        return [disjoint_union([cycle(m) for m in parts]) for parts in cycle_partitions(n)]
    return None


def cycle_partitions(n: int, smallest: int = 3) -> Iterator[tuple[int, ...]]:
    """Multisets of cycle lengths >= 3 summing to n, as non-decreasing tuples."""
    if n == 0:
        yield ()
        return
    for m in range(smallest, n + 1):
        if n - m == 0 or n - m >= m:
            for rest in cycle_partitions(n - m, m):
                yield (m,) + rest


def generate_regular_labeled(n: int, d: int) -> Iterator[Graph]:
    """All row-ordered labelled d-regular graphs that survive the prunes (with repeats)."""
    for rows in _search(n, d):
        yield Graph(n, rows)


def _direct(n: int, d: int, jobs: int = 1, use_shortcuts: bool = True) -> list[Graph]:
    shortcut = _low_degree(n, d) if use_shortcuts else None
    found: dict[str, tuple[int, ...]] = {}
    if shortcut is not None:
        for g in shortcut:
            key, adj = _canon_key(g.adj)
            found.setdefault(key, adj)
    elif jobs > 1:
        starts = list(_search(n, d, stop_after=_SPLIT_DEPTH))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_collect, [n] * len(starts), [d] * len(starts), starts)
            for part in parts:
                for key, adj in part.items():
                    found.setdefault(key, adj)
    else:
        found = _collect(n, d, None)
    return [Graph(n, found[k]) for k in sorted(found)]


def enumerate_regular(n: int, r: int, jobs: int = 1, use_shortcuts: bool = True) -> list[Graph]:
    """One representative per isomorphism class of r-regular graphs on n vertices.

    Dense cells are generated through their sparse complements.  The result is
    sorted by the graph6 string of each canonical representative, so the order
    is reproducible.
    """
    if n < 1 or not 0 <= r < n:
        raise EnumerationError(f"need 0 <= r < n, got n={n}, r={r}")
    if n * r % 2:
        raise EnumerationError(f"no such graphs (parity): n={n}, r={r}")
    d = n - 1 - r
    if r > d:
        return [complement(g) for g in _direct(n, d, jobs, use_shortcuts)]
    return _direct(n, r, jobs, use_shortcuts)


def count_regular(n: int, r: int, jobs: int = 1) -> int:
    return len(enumerate_regular(n, r, jobs))
