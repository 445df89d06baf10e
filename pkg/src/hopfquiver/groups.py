"""Finitely generated abelian groups Z^r x Z_{n_1} x ... x Z_{n_s}.

Elements are plain integer tuples (free coordinates first, then torsion
coordinates reduced into ``[0, n_i)``).
"""

from __future__ import annotations

import itertools
import math
import re
from dataclasses import dataclass
from functools import reduce

from .errors import InfiniteGroup, ParseError

GroupElement = tuple[int, ...]

INFINITE = math.inf


@dataclass(frozen=True)
class AbelianGroup:
    free_rank: int = 0
    torsion_orders: tuple[int, ...] = ()

    def __post_init__(self):
        if self.free_rank < 0 or any(n < 2 for n in self.torsion_orders):
            raise ValueError(f"bad group {self.free_rank}, {self.torsion_orders}")
        object.__setattr__(self, "torsion_orders", tuple(self.torsion_orders))

    @property
    def rank(self) -> int:
        """Number of cyclic factors (length of an element tuple)."""
        return self.free_rank + len(self.torsion_orders)

    @property
    def factor_orders(self) -> tuple[int, ...]:
        """Order of each cyclic factor, 0 standing for an infinite factor."""
        return (0,) * self.free_rank + self.torsion_orders

    def is_finite(self) -> bool:
        return self.free_rank == 0

    def order(self) -> int | float:
        return math.prod(self.torsion_orders) if self.is_finite() else INFINITE

    def is_trivial(self) -> bool:
        return self.free_rank == 0 and not self.torsion_orders

    # element operations ----------------------------------------------------
    def element(self, exps) -> GroupElement:
        exps = tuple(int(e) for e in exps)
        if len(exps) != self.rank:
            raise ValueError(f"element {exps} has wrong length for {self}")
        r = self.free_rank
        return exps[:r] + tuple(e % n for e, n in zip(exps[r:], self.torsion_orders))

    def unit(self) -> GroupElement:
        return (0,) * self.rank

    def generator(self, u: int) -> GroupElement:
        return tuple(1 if k == u else 0 for k in range(self.rank))

    def generators(self) -> list[GroupElement]:
        return [self.generator(u) for u in range(self.rank)]

    def mul(self, a: GroupElement, b: GroupElement) -> GroupElement:
        r = self.free_rank
        free = tuple(x + y for x, y in zip(a[:r], b[:r]))
        tors = tuple((x + y) % n for x, y, n in zip(a[r:], b[r:], self.torsion_orders))
        return free + tors

    def inv(self, a: GroupElement) -> GroupElement:
        r = self.free_rank
        return tuple(-x for x in a[:r]) + tuple((-x) % n for x, n in zip(a[r:], self.torsion_orders))

    def power(self, a: GroupElement, k: int) -> GroupElement:
        return self.element(x * k for x in a)

    def prod(self, elems) -> GroupElement:
        return reduce(self.mul, elems, self.unit())

    def element_order(self, a: GroupElement) -> int | float:
        r = self.free_rank
        if any(a[:r]):
            return INFINITE
        return reduce(math.lcm, (n // math.gcd(x, n) for x, n in zip(a[r:], self.torsion_orders)), 1)

    def elements(self) -> list[GroupElement]:
        if not self.is_finite():
            raise InfiniteGroup(f"{self} is infinite")
        return [tuple(e) for e in itertools.product(*(range(n) for n in self.torsion_orders))]

    def generates(self, gens) -> bool:
        gens = [self.element(g) for g in gens]
        if self.is_finite():
            return len(self.subgroup(gens)) == self.order()
        return _lattice_is_full(gens, self)

    def subgroup(self, gens) -> list[GroupElement]:
        """Orbit closure of the unit under multiplication by gens (finite groups)."""
        if not self.is_finite():
            raise InfiniteGroup(f"{self} is infinite")
        seen = {self.unit()}
        frontier = [self.unit()]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(g, x)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return sorted(seen)

    def __str__(self):
        parts = ["Z"] * self.free_rank + [f"Z{n}" for n in self.torsion_orders]
        return "x".join(parts) if parts else "Z1"

    # naming ------------------------------------------------------------------
    def generator_names(self) -> list[str]:
        k = self.rank
        if k == 1:
            return ["g"]
        if k == 2:
            return ["g", "h"]
        return [f"g{u + 1}" for u in range(k)]

    def format_element(self, a: GroupElement) -> str:
        names = self.generator_names()
        parts = [f"{names[u]}^{x}" for u, x in enumerate(a) if x]
        return "*".join(parts) if parts else "e"

    def parse_element(self, text: str) -> GroupElement:
        text = text.strip()
        if text in ("e", "1", ""):
            return self.unit()
        if text[0] in "([":
            try:
                vals = [int(t) for t in text.strip("()[]").split(",") if t.strip()]
            except ValueError as exc:
                raise ParseError(f"bad element literal {text!r}") from exc
            return self.element(vals)
        lookup = {name: u for u, name in enumerate(self.generator_names())}
        lookup.update({f"g{u + 1}": u for u in range(self.rank)})
        exps = [0] * self.rank
        for tok in re.split(r"[*\s]+", text):
            if not tok or tok == "e":
                continue
            m = re.fullmatch(r"([a-z][0-9]*)(?:\^(-?\d+))?", tok)
            if not m or m.group(1) not in lookup:
                raise ParseError(f"bad element literal {text!r} for group {self}")
            exps[lookup[m.group(1)]] += int(m.group(2) or 1)
        return self.element(exps)


def parse_group(text: str) -> AbelianGroup:
    """Parse "Z", "Z4", "Z2xZ4", "ZxZ3" (free factors are moved to the front)."""
    text = text.strip()
    if text in ("", "Z1", "1", "e"):
        return AbelianGroup()
    free = 0
    tors = []
    for part in text.split("x"):
        m = re.fullmatch(r"Z(\d*)", part.strip())
        if not m:
            raise ParseError(f"bad group {text!r}")
        if m.group(1) == "":
            free += 1
        else:
            n = int(m.group(1))
            if n == 1:
                continue
            if n < 1:
                raise ParseError(f"bad cyclic order in {text!r}")
            tors.append(n)
    return AbelianGroup(free, tuple(tors))


def _lattice_is_full(gens, G: AbelianGroup) -> bool:
    """Does gens together with the torsion relations span Z^rank?"""
    k = G.rank
    rows = [list(g) for g in gens]
    for i, n in enumerate(G.torsion_orders):
        row = [0] * k
        row[G.free_rank + i] = n
        rows.append(row)
    pivot_row = 0
    for col in range(k):
        # gcd-reduce the column below pivot_row
        while True:
            nz = [i for i in range(pivot_row, len(rows)) if rows[i][col]]
            if not nz:
                return False
            i_min = min(nz, key=lambda i: abs(rows[i][col]))
            rows[pivot_row], rows[i_min] = rows[i_min], rows[pivot_row]
            p = rows[pivot_row][col]
            done = True
            for i in range(pivot_row + 1, len(rows)):
                q = rows[i][col] // p
                if q:
                    rows[i] = [a - q * b for a, b in zip(rows[i], rows[pivot_row])]
                if rows[i][col]:
                    done = False
            if done:
                break
        if abs(rows[pivot_row][col]) != 1:
            return False
        pivot_row += 1
    return True


# module-level spellings of the operations


def gp_mul(G: AbelianGroup, a: GroupElement, b: GroupElement) -> GroupElement:
    return G.mul(a, b)


def gp_inv(G: AbelianGroup, a: GroupElement) -> GroupElement:
    return G.inv(a)


def gp_unit(G: AbelianGroup) -> GroupElement:
    return G.unit()


def element_order(G: AbelianGroup, a: GroupElement) -> int | float:
    return G.element_order(a)


def enumerate_elements(G: AbelianGroup) -> list[GroupElement]:
    return G.elements()


def generates(G: AbelianGroup, S) -> bool:
    return G.generates(S)
