"""Hopf quivers Q(G, R) of abelian groups and their paths.

Arrows are virtual: an arrow is determined by its source vertex ``x``, its
weight ``g`` (an element of the ramification support) and a copy index
``1 <= c <= R_g``; its target is ``g x``.  A path stores its source and the
step list ``((w_1, c_1), ..., (w_l, c_l))`` in traversal order, so the first
step is the arrow leaving the source.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import InfiniteGroup, ParseError
from .groups import AbelianGroup, GroupElement


class Arrow(NamedTuple):
    source: GroupElement
    weight: GroupElement
    copy: int


class Path(NamedTuple):
    source: GroupElement
    steps: tuple[tuple[GroupElement, int], ...] = ()

    @property
    def length(self) -> int:
        return len(self.steps)

    def is_vertex(self) -> bool:
        return not self.steps


def path_sort_key(p: Path):
    return (len(p.steps), p.source, p.steps)


@dataclass(frozen=True)
class RamificationDatum:
    support: tuple[tuple[GroupElement, int], ...]

    def __post_init__(self):
        items = tuple(sorted((tuple(g), int(m)) for g, m in self.support))
        if any(m < 1 for _, m in items):
            raise ValueError("multiplicities must be positive")
        if len({g for g, _ in items}) != len(items):
            raise ValueError("repeated support element")
        object.__setattr__(self, "support", items)

    @classmethod
    def from_mapping(cls, mapping: Mapping[GroupElement, int]) -> "RamificationDatum":
        return cls(tuple((g, m) for g, m in mapping.items() if m))

    def multiplicity(self, g: GroupElement) -> int:
        for h, m in self.support:
            if h == g:
                return m
        return 0

    def elements(self) -> list[GroupElement]:
        return [g for g, _ in self.support]

    def total(self) -> int:
        return sum(m for _, m in self.support)


def parse_ram(G: AbelianGroup, text: str) -> RamificationDatum:
    """Parse "g^1:1", "g:2", "g:1,h:1" or "g+h" (multiplicity defaults to 1)."""
    mult: dict[GroupElement, int] = {}
    for entry in re.split(r"[,+]", text):
        entry = entry.strip()
        if not entry:
            continue
        elem, _, k = entry.partition(":")
        try:
            k = int(k) if k.strip() else 1
        except ValueError as exc:
            raise ParseError(f"bad multiplicity in {entry!r}") from exc
        g = G.parse_element(elem)
        mult[g] = mult.get(g, 0) + k
    return RamificationDatum.from_mapping(mult)


@dataclass(frozen=True)
class HopfQuiver:
    group: AbelianGroup
    ram: RamificationDatum

    def target(self, p: Path) -> GroupElement:
        x = p.source
        for w, _ in p.steps:
            x = self.group.mul(w, x)
        return x

    def arrows_from(self, x: GroupElement) -> list[Arrow]:
        return [Arrow(x, g, c) for g, m in self.ram.support for c in range(1, m + 1)]

    def arrow_target(self, a: Arrow) -> GroupElement:
        return self.group.mul(a.weight, a.source)

    def out_degree(self, x: GroupElement | None = None) -> int:
        return self.ram.total()

    def vertices(self) -> list[GroupElement]:
        return self.group.elements()

    def contains(self, p: Path) -> bool:
        G = self.group
        if G.element(p.source) != p.source:
            return False
        return all(1 <= c <= self.ram.multiplicity(w) for w, c in p.steps)

    def vertex(self, g: GroupElement) -> Path:
        return Path(self.group.element(g))

    def arrow_path(self, a: Arrow) -> Path:
        return Path(a.source, ((a.weight, a.copy),))

    # combinatorics -----------------------------------------------------------
    def is_connected(self) -> bool:
        return self.group.generates(self.ram.elements())

    def connected_components(self) -> list[list[GroupElement]]:
        if not self.group.is_finite():
            raise InfiniteGroup("components of a quiver over an infinite group")
        H = self.group.subgroup(self.ram.elements())
        seen: set[GroupElement] = set()
        comps = []
        for x in self.group.elements():
            if x in seen:
                continue
            coset = sorted(self.group.mul(x, h) for h in H)
            seen.update(coset)
            comps.append(coset)
        return comps

    def enumerate_paths(self, source: GroupElement | None = None, max_len: int = 0) -> list[Path]:
        """All paths of length <= max_len, from one source or (source=None) from every vertex."""
        if source is None:
            if not self.group.is_finite():
                raise InfiniteGroup("path enumeration from all vertices of an infinite quiver")
            sources = self.group.elements()
        else:
            sources = [self.group.element(source)]
        labels = [(g, c) for g, m in self.ram.support for c in range(1, m + 1)]
        out = []
        for length in range(max_len + 1):
            for x in sources:
                for steps in itertools.product(labels, repeat=length):
                    out.append(Path(x, steps))
        return out

    # literals ------------------------------------------------------------------
    def format_path(self, p: Path) -> str:
        G = self.group
        base = f"v({G.format_element(p.source)})"
        if not p.steps:
            return base
        return base + "[" + ",".join(f"{G.format_element(w)}.{c}" for w, c in p.steps) + "]"

    def parse_path(self, text: str) -> Path:
        """Parse "v(g^1)", "v(e)[g.1,g.2]" or the cyclic shorthand "p(i,l)"."""
        text = text.strip()
        G = self.group
        m = re.fullmatch(r"p\(\s*(-?\d+)\s*,\s*(\d+)\s*\)", text)
        if m:
            if G.rank != 1 or len(self.ram.support) != 1 or self.ram.support[0][1] != 1:
                raise ParseError("p(i,l) needs a one-generator group with a single arrow per vertex")
            w = self.ram.support[0][0]
            return Path(G.element([int(m.group(1))]), ((w, 1),) * int(m.group(2)))
        m = re.fullmatch(r"v\(([^)]*)\)(?:\[(.*)\])?", text)
        if not m:
            raise ParseError(f"bad path literal {text!r}")
        src = G.parse_element(m.group(1))
        steps = []
        if m.group(2):
            for tok in m.group(2).split(","):
                tok = tok.strip()
                if "." not in tok:
                    raise ParseError(f"bad step {tok!r}, expected weight.copy")
                w, c = tok.rsplit(".", 1)
                steps.append((G.parse_element(w), int(c)))
        p = Path(src, tuple(steps))
        if not self.contains(p):
            raise ParseError(f"path {text!r} is not in the quiver")
        return p


def build_quiver(G: AbelianGroup, R: RamificationDatum | Mapping | Iterable) -> HopfQuiver:
    if not isinstance(R, RamificationDatum):
        R = RamificationDatum.from_mapping(dict(R))
    R = RamificationDatum(tuple((G.element(g), m) for g, m in R.support))
    return HopfQuiver(G, R)


def is_connected(Q: HopfQuiver) -> bool:
    return Q.is_connected()


def connected_components(Q: HopfQuiver) -> list[list[GroupElement]]:
    return Q.connected_components()


def enumerate_paths(Q: HopfQuiver, source: GroupElement | None, max_len: int) -> list[Path]:
    return Q.enumerate_paths(source, max_len)
