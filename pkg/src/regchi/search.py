"""Exhaustive search for the smallest r-regular graphs of a given chromatic number."""

from __future__ import annotations

import hashlib
import json
import logging
import time
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

from .bounds import InfeasibleError, feasible, lower_bound, upper_bound_thm3
from .chromatic import chromatic_number, clique_number, independence_number, is_k_colorable, max_clique
from .constructions import prism
from .enumerate import enumerate_regular
from .formats import decode_graph6, encode_graph6, read_graph6_stream, write_graph6_stream
from .graph import Graph, complement, is_regular

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class EnumerationBudget:
    """Largest order enumerated for each degree of the sparser of G and its complement."""

    max_order: dict[int, int] = field(
        default_factory=lambda: {0: 10**6, 1: 10**6, 2: 10**6, 3: 14, 4: 12}
    )

    def allows(self, n: int, r: int) -> bool:
        d = min(r, n - 1 - r)
        return n <= self.max_order.get(d, -1)

    @classmethod
    def unlimited(cls) -> EnumerationBudget:
        return cls({d: 10**6 for d in range(64)})


DEFAULT_BUDGET = EnumerationBudget()


class CensusError(ValueError):
    pass


@dataclass(frozen=True)
class CensusEntry:
    n: int
    r: int
    count: int
    chi_histogram: dict[int, int]

    def payload(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "count": self.count,
            "chi_histogram": {str(k): v for k, v in sorted(self.chi_histogram.items())},
        }

    def checksum(self) -> str:
        blob = json.dumps(self.payload(), sort_keys=True).encode()
        return hashlib.sha256(blob).hexdigest()


class Census:
    """Append-only store of enumerated (n, r) cells.

    ``path`` is a JSON-lines file; the graphs of each cell are kept as
    graph6 streams, one file per chromatic number, in ``<path>.graphs/``.
    """

    def __init__(self, path: Path | str | None = None) -> None:
        self.path = Path(path) if path is not None else None
        self.entries: dict[tuple[int, int], CensusEntry] = {}

    @property
    def graph_dir(self) -> Path | None:
        return None if self.path is None else self.path.with_name(self.path.name + ".graphs")

    def _graph_file(self, n: int, r: int, chi: int) -> Path:
        assert self.graph_dir is not None
        return self.graph_dir / f"n{n}_r{r}_chi{chi}.g6"

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self.entries

    def get(self, n: int, r: int) -> CensusEntry | None:
        return self.entries.get((n, r))

    def add(self, entry: CensusEntry, graphs_by_chi: dict[int, list[Graph]] | None = None) -> None:
        key = (entry.n, entry.r)
        if key in self.entries:
            return
        self.entries[key] = entry
        if self.path is None:
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        if graphs_by_chi:
            self.graph_dir.mkdir(parents=True, exist_ok=True)
            for chi, graphs in sorted(graphs_by_chi.items()):
                with open(self._graph_file(entry.n, entry.r, chi), "w") as fh:
                    write_graph6_stream(graphs, fh)
        row = dict(entry.payload(), checksum=entry.checksum())
        with open(self.path, "a") as fh:
            fh.write(json.dumps(row, sort_keys=True) + "\n")

    def graphs(self, n: int, r: int, chi: int) -> list[Graph]:
        entry = self.entries.get((n, r))
        if entry is None or self.path is None or not entry.chi_histogram.get(chi):
            return []
        path = self._graph_file(n, r, chi)
        if not path.exists():
            raise CensusError(f"census lists {entry.chi_histogram[chi]} graphs with chi={chi} "
                              f"at n={n}, r={r} but {path} is missing")
        with open(path) as fh:
            out = list(read_graph6_stream(fh))
        if len(out) != entry.chi_histogram[chi]:
            raise CensusError(f"{path}: expected {entry.chi_histogram[chi]} graphs, found {len(out)}")
        return out


def census_load(path: Path | str) -> Census:
    census = Census(path)
    p = Path(path)
    if not p.exists():
        return census
    with open(p) as fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                row = json.loads(line)
                entry = CensusEntry(
                    n=int(row["n"]),
                    r=int(row["r"]),
                    count=int(row["count"]),
                    chi_histogram={int(k): int(v) for k, v in row["chi_histogram"].items()},
                )
                stored = row["checksum"]
            except (ValueError, KeyError, TypeError, AttributeError) as exc:
                raise CensusError(f"{p}: row {lineno} is malformed: {exc}") from exc
            if sum(entry.chi_histogram.values()) != entry.count:
                raise CensusError(f"{p}: row {lineno}: chi histogram does not sum to count {entry.count}")
            if stored != entry.checksum():
                raise CensusError(f"{p}: row {lineno}: checksum mismatch")
            prev = census.entries.get((entry.n, entry.r))
            if prev is not None and prev != entry:
                raise CensusError(f"{p}: row {lineno} contradicts an earlier row for n={entry.n}, r={entry.r}")
            census.entries[(entry.n, entry.r)] = entry
    return census


def census_store(path: Path | str, entry: CensusEntry, graphs_by_chi: dict[int, list[Graph]] | None = None) -> Census:
    census = census_load(path)
    census.add(entry, graphs_by_chi)
    return census


# In-process memo of classified cells: (n, r) -> {chi: graphs}
_CELL_CACHE: dict[tuple[int, int], dict[int, list[Graph]]] = {}


def classify_cell(n: int, r: int, jobs: int = 1, census: Census | None = None) -> dict[int, list[Graph]]:
    """All r-regular graphs on n vertices grouped by exact chromatic number."""
    key = (n, r)
    if key in _CELL_CACHE:
        return _CELL_CACHE[key]
    if census is not None and key in census and census.path is not None:
        entry = census.get(n, r)
        groups = {chi: census.graphs(n, r, chi) for chi in entry.chi_histogram}
        _CELL_CACHE[key] = groups
        return groups
    groups: dict[int, list[Graph]] = {}
    for g in enumerate_regular(n, r, jobs):
        groups.setdefault(chromatic_number(g).chi, []).append(g)
    _CELL_CACHE[key] = groups
    if census is not None:
        hist = {chi: len(gs) for chi, gs in groups.items()}
        census.add(CensusEntry(n, r, sum(hist.values()), hist), groups)
    return groups


def clear_cache() -> None:
    _CELL_CACHE.clear()


def has_chromatic_number(g: Graph, chi: int) -> bool:
    """Exact test chi(g) == chi: clique reject, then chi- and (chi-1)-colourability."""
    if clique_number(g) > chi:
        return False
    if is_k_colorable(g, chi) is None:
        return False
    return chi == 0 or is_k_colorable(g, chi - 1) is None


@dataclass
class SearchCertificate:
    r: int
    chi: int
    minimal_order: int | None
    witnesses: list[str]
    exhausted: list[dict]
    seconds: float = 0.0
    open_above: int | None = None
    note: str = ""

    def to_dict(self, with_time: bool = True) -> dict:
        out = {
            "r": self.r,
            "chi": self.chi,
            "minimal_order": self.minimal_order,
            "witnesses": list(self.witnesses),
            "exhausted": [dict(e) for e in self.exhausted],
            "open_above": self.open_above,
            "note": self.note,
        }
        if with_time:
            out["seconds"] = round(self.seconds, 3)
        return out


def search_orders(r: int, chi: int, max_order: int) -> list[int]:
    start = lower_bound(r, chi)
    step = 2 if r % 2 else 1
    return list(range(start, max_order + 1, step))


def extremal_search(
    r: int,
    chi: int,
    max_order: int | None = None,
    *,
    jobs: int = 1,
    census: Census | None = None,
    budget: EnumerationBudget = DEFAULT_BUDGET,
) -> SearchCertificate:
    """Ascend from the lower bound until an order holds an r-regular graph with this chi."""
    if not feasible(r, chi):
        raise InfeasibleError(f"no r-regular graph with r={r} has chromatic number {chi}")
    if max_order is None:
        max_order = upper_bound_thm3(r, chi)
    if max_order < lower_bound(r, chi):
        raise ValueError(f"max_order {max_order} is below the lower bound {lower_bound(r, chi)}")
    t0 = time.monotonic()
    exhausted: list[dict] = []
    if chi == 1:
        return SearchCertificate(r, chi, 1, [encode_graph6(Graph.empty(1))], [], time.monotonic() - t0)
    for n in search_orders(r, chi, max_order):
        if not budget.allows(n, r):
            return SearchCertificate(
                r, chi, None, [], exhausted, time.monotonic() - t0,
                open_above=n - 1 if not exhausted else exhausted[-1]["n"],
                note=f"order {n} is outside the enumeration budget",
            )
        log.info("enumerating %d-regular graphs on %d vertices", r, n)
        groups = classify_cell(n, r, jobs, census)
        hist = {c: len(gs) for c, gs in sorted(groups.items())}
        exhausted.append({"n": n, "count": sum(hist.values()), "chi_histogram": {str(k): v for k, v in hist.items()}})
        hits = groups.get(chi, [])
        if hits:
            witnesses = sorted(encode_graph6(g) for g in hits)
            return SearchCertificate(r, chi, n, witnesses, exhausted, time.monotonic() - t0)
    return SearchCertificate(
        r, chi, None, [], exhausted, time.monotonic() - t0, open_above=max_order,
        note=f"no witness up to order {max_order}",
    )


def verify_witness(text: str, r: int, chi: int) -> bool:
    """Re-check a stored witness from its graph6 string alone."""
    g = decode_graph6(text)
    return is_regular(g) == r and has_chromatic_number(g, chi)


def verify_certificate(cert: SearchCertificate) -> bool:
    """Witness re-verification plus the ordering invariants of a certificate."""
    if any(not verify_witness(w, cert.r, cert.chi) for w in cert.witnesses):
        return False
    orders = [e["n"] for e in cert.exhausted]
    if cert.minimal_order is not None:
        if not cert.witnesses or (orders and orders[-1] > cert.minimal_order):
            return False
        # A witness above the enumerated range (a construction) needs every
        # enumerated order to be empty; otherwise the last order holds it.
        below = cert.exhausted if orders and orders[-1] < cert.minimal_order else cert.exhausted[:-1]
        for e in below:
            if e["chi_histogram"].get(str(cert.chi), 0):
                return False
        if any(decode_graph6(w).n != cert.minimal_order for w in cert.witnesses):
            return False
    return orders == search_orders(cert.r, cert.chi, orders[-1]) if orders else True


def structure_report(g: Graph, k: int) -> dict:
    """Post-hoc structural quantities for a (k|k)-graph on 2k-1 vertices.

    Reports the clique number, the number of edges in the complement of G
    minus a maximum clique, and the independence number.
    """
    clique = max_clique(g)
    rest = [v for v in range(g.n) if v not in set(clique)]
    rest_complement_edges = complement(g.induced(rest)).num_edges if rest else 0
    return {
        "omega": len(clique),
        "omega_is_k_minus_1": len(clique) == k - 1,
        "complement_edges_outside_clique": rest_complement_edges,
        "expected_complement_edges": k // 2 - 1,
        "alpha": independence_number(g),
        "alpha_range": [k / 4, k / 2 + 1],
    }


def resolve_kk(k: int, *, jobs: int = 1, census: Census | None = None,
               budget: EnumerationBudget = DEFAULT_BUDGET) -> tuple[SearchCertificate, list[dict]]:
    """Decide n(k|k) between 2k-1 and 2k by enumerating order 2k-1 and below."""
    if k < 2:
        raise ValueError(f"resolve_kk needs k >= 2, got {k}")
    if lower_bound(k, k) > 2 * k - 1:
        # Parity (k odd) or the counting bound (k = 2) already excludes 2k-1.
        return SearchCertificate(k, k, 2 * k, [encode_graph6(prism(k))], [],
                                 note=f"order {2 * k - 1} is below the lower bound; K_{k} x K_2 attains {2 * k}"), []
    cert = extremal_search(k, k, 2 * k - 1, jobs=jobs, census=census, budget=budget)
    if cert.minimal_order is None and cert.open_above == 2 * k - 1:
        witness = prism(k)
        cert.minimal_order = 2 * k
        cert.witnesses = [encode_graph6(witness)]
        cert.note = f"no ({k}|{k})-graph below order {2 * k}; K_{k} x K_2 attains {2 * k}"
        return cert, []
    reports = [structure_report(decode_graph6(w), k) for w in cert.witnesses]
    return cert, reports


def resolve_66(*, jobs: int = 1, census: Census | None = None) -> tuple[SearchCertificate, list[dict]]:
    return resolve_kk(6, jobs=jobs, census=census, budget=EnumerationBudget.unlimited())


def chi_counts(graphs: Iterable[Graph]) -> Counter[int]:
    return Counter(chromatic_number(g).chi for g in graphs)
