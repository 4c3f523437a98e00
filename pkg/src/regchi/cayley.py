"""Cayley graphs over direct products of cyclic groups."""

from __future__ import annotations

import itertools
import warnings
from dataclasses import dataclass
from typing import Iterable

from .canon import is_isomorphic
from .constructions import turan
from .graph import Graph, is_connected

DEFAULT_ISOMORPHISM_LIMIT = 20

Element = tuple[int, ...]


class CayleyError(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    """``Z_{m1} x ... x Z_{mk}``; elements are tuples in lexicographic order."""

    moduli: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.moduli or any(m < 1 for m in self.moduli):
            raise CayleyError(f"moduli must be positive, got {self.moduli}")

    @property
    def order(self) -> int:
        out = 1
        for m in self.moduli:
            out *= m
        return out

    @property
    def identity(self) -> Element:
        return (0,) * len(self.moduli)

    def elements(self) -> list[Element]:
        return list(itertools.product(*(range(m) for m in self.moduli)))

    def reduce(self, x: Iterable[int] | int) -> Element:
        if isinstance(x, int):
            x = (x,)
        x = tuple(x)
        if len(x) != len(self.moduli):
            raise CayleyError(f"element {x} does not match moduli {self.moduli}")
        return tuple(v % m for v, m in zip(x, self.moduli))

    def add(self, x: Element, y: Element) -> Element:
        return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

    def inverse(self, x: Element) -> Element:
        return tuple(-a % m for a, m in zip(x, self.moduli))

    def index(self, x: Element) -> int:
        i = 0
        for v, m in zip(x, self.moduli):
            i = i * m + v
        return i


@dataclass(frozen=True)
class ConnectionSet:
    group: GroupSpec
    elements: frozenset[Element]

    @classmethod
    def of(cls, group: GroupSpec, elements: Iterable[Iterable[int] | int]) -> ConnectionSet:
        return cls(group, frozenset(group.reduce(x) for x in elements))

    def validate(self) -> None:
        if self.group.identity in self.elements:
            raise CayleyError("connection set contains the identity")
        missing = sorted(
            x for x in self.elements if self.group.inverse(x) not in self.elements
        )
        if missing:
            raise CayleyError(f"connection set is not closed under inverses: {missing}")


def cayley_graph(group: GroupSpec, x: ConnectionSet, require_generating: bool = False) -> Graph:
    if x.group != group:
        raise CayleyError("connection set belongs to a different group")
    x.validate()
    elems = group.elements()
    rows = []
    for g in elems:
        m = 0
        for s in x.elements:
            m |= 1 << group.index(group.add(g, s))
        rows.append(m)
    out = Graph(group.order, tuple(rows))
    if not is_connected(out):
        if require_generating:
            raise CayleyError("connection set does not generate the group")
        warnings.warn("connection set does not generate the group; graph is disconnected", stacklevel=2)
    return out


def lemma1_connection_set(a: int, k: int) -> ConnectionSet:
    """``{(i, j) : 0 <= i < a, 0 < j < k}`` inside ``Z_a x Z_k``."""
    if a < 1 or k < 2:
        raise CayleyError(f"need a >= 1 and k >= 2, got a={a}, k={k}")
    group = GroupSpec((a, k))
    return ConnectionSet(group, frozenset((i, j) for i in range(a) for j in range(1, k)))


def verify_lemma1(a: int, k: int, limit: int = DEFAULT_ISOMORPHISM_LIMIT) -> bool:
    """Check ``Cay(Z_a x Z_k, X) ~= T_{ak,k}`` by canonical forms."""
    if a * k > limit:
        raise CayleyError(f"order {a * k} exceeds the isomorphism limit {limit}")
    x = lemma1_connection_set(a, k)
    return is_isomorphic(cayley_graph(x.group, x), turan(a * k, k))


def parse_connection_set(group: GroupSpec, text: str) -> ConnectionSet:
    """Parse ``"1,4"`` (one modulus) or ``"(0,1);(1,2)"`` / ``"0 1; 1 2"`` tuples."""
    items = []
    if len(group.moduli) == 1 and "(" not in text and ";" not in text:
        items = [int(t) for t in text.replace(" ", ",").split(",") if t]
    else:
        for chunk in text.replace(")(", ");(").split(";"):
            chunk = chunk.strip().strip("()")
            if chunk:
                items.append(tuple(int(t) for t in chunk.replace(",", " ").split()))
    return ConnectionSet.of(group, items)
