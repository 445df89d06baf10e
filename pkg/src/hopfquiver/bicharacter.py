"""Root-of-unity valued bicharacters of abelian groups.

A bicharacter is recorded by an exponent matrix ``e`` on the cyclic
generators: ``R(gen_u, gen_v) = zeta_N ** e[u][v]``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import reduce

from .errors import InfiniteGroup
from .groups import AbelianGroup, GroupElement, parse_group
from .scalar import CycScalar, root_of_unity


@dataclass(frozen=True)
class Bicharacter:
    group: AbelianGroup
    conductor: int
    exp_matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        N = self.conductor
        k = self.group.rank
        mat = tuple(tuple(int(x) % N for x in row) for row in self.exp_matrix)
        if len(mat) != k or any(len(row) != k for row in mat):
            raise ValueError(f"exponent matrix must be {k}x{k}")
        object.__setattr__(self, "exp_matrix", mat)
        orders = self.group.factor_orders
        for u in range(k):
            for v in range(k):
                e = mat[u][v]
                if orders[u] and (orders[u] * e) % N:
                    raise ValueError(f"not well defined: order {orders[u]} of generator {u} vs entry {e}")
                if orders[v] and (orders[v] * e) % N:
                    raise ValueError(f"not well defined: order {orders[v]} of generator {v} vs entry {e}")

    def exponent(self, a: GroupElement, b: GroupElement) -> int:
        """The k with R(a, b) = zeta_N ** k, reduced mod N."""
        mat = self.exp_matrix
        total = 0
        for u, x in enumerate(a):
            if x:
                row = mat[u]
                for v, y in enumerate(b):
                    if y:
                        total += x * row[v] * y
        return total % self.conductor

    def __call__(self, a: GroupElement, b: GroupElement) -> CycScalar:
        return root_of_unity(self.conductor, self.exponent(a, b))

    def is_skew_symmetric(self) -> bool:
        N = self.conductor
        k = self.group.rank
        e = self.exp_matrix
        return all((e[u][v] + e[v][u]) % N == 0 for u in range(k) for v in range(k))

    def is_trivial(self) -> bool:
        return not any(any(row) for row in self.exp_matrix)

    def with_conductor(self, n: int) -> "Bicharacter":
        """Re-express the same bicharacter over a conductor divisible by ours."""
        if n % self.conductor:
            raise ValueError(f"{n} is not a multiple of {self.conductor}")
        f = n // self.conductor
        return Bicharacter(self.group, n, tuple(tuple(x * f for x in row) for row in self.exp_matrix))

    def to_json(self) -> dict:
        return {
            "group": str(self.group),
            "conductor": self.conductor,
            "exp_matrix": [list(row) for row in self.exp_matrix],
        }

    @classmethod
    def from_json(cls, data) -> "Bicharacter":
        return cls(parse_group(data["group"]), int(data["conductor"]),
                   tuple(tuple(row) for row in data["exp_matrix"]))


def default_conductor(G: AbelianGroup) -> int:
    """lcm of the torsion orders (and 2 when the group has free factors)."""
    n = reduce(math.lcm, G.torsion_orders, 1)
    if G.free_rank:
        n = math.lcm(n, 2)
    return n


def trivial_bicharacter(G: AbelianGroup, conductor: int | None = None) -> Bicharacter:
    N = conductor or default_conductor(G)
    return Bicharacter(G, N, tuple((0,) * G.rank for _ in range(G.rank)))


def cyclic_bicharacter(G: AbelianGroup, lam: int) -> Bicharacter:
    """The bicharacter of a one-generator group with R(g, g) = lam (lam = +1 or -1)."""
    if G.rank != 1:
        raise ValueError("cyclic_bicharacter needs a one-generator group")
    if lam not in (1, -1):
        raise ValueError("only lambda = +1 or -1 are supported here")
    N = default_conductor(G)
    if lam == -1 and N % 2:
        raise ValueError(f"R(g,g) = -1 is not well defined on {G}")
    return Bicharacter(G, N, ((0 if lam == 1 else N // 2,),))


def enumerate_skew_bicharacters(G: AbelianGroup, conductor: int | None = None) -> list[Bicharacter]:
    """All skew-symmetric bicharacters with values in the N-th roots of unity.

    For finite groups the default conductor lcm(n_i) already contains every
    value a skew bicharacter can take.  Groups with free factors need an
    explicit conductor.
    """
    if conductor is None:
        if not G.is_finite():
            raise InfiniteGroup(f"{G} has free factors; pass a conductor")
        conductor = default_conductor(G)
    N = conductor
    k = G.rank
    orders = G.factor_orders

    def ok(e: int, u: int, v: int) -> bool:
        return all(not n or (n * e) % N == 0 for n in (orders[u], orders[v]))

    diag_options = [[e for e in {0, N // 2 if N % 2 == 0 else 0} if ok(e, u, u)] for u in range(k)]
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    off_options = [[e for e in range(N) if ok(e, u, v)] for u, v in pairs]
    out = []
    for diag in itertools.product(*(sorted(opts) for opts in diag_options)):
        for off in itertools.product(*off_options):
            mat = [[0] * k for _ in range(k)]
            for u in range(k):
                mat[u][u] = diag[u]
            for (u, v), e in zip(pairs, off):
                mat[u][v] = e
                mat[v][u] = (-e) % N
            out.append(Bicharacter(G, N, tuple(tuple(r) for r in mat)))
    out.sort(key=lambda b: b.exp_matrix)
    return out


def bichar_eval(B: Bicharacter, a: GroupElement, b: GroupElement) -> CycScalar:
    return B(a, b)


def is_skew_symmetric(B: Bicharacter) -> bool:
    return B.is_skew_symmetric()


def enumerate_bicharacters(G: AbelianGroup, conductor: int | None = None) -> list[Bicharacter]:
    """All bicharacters with values in the N-th roots of unity (no symmetry imposed)."""
    if conductor is None:
        if not G.is_finite():
            raise InfiniteGroup(f"{G} has free factors; pass a conductor")
        conductor = default_conductor(G)
    N = conductor
    k = G.rank
    orders = G.factor_orders
    options = [[e for e in range(N) if all(not n or (n * e) % N == 0 for n in (orders[u], orders[v]))]
               for u in range(k) for v in range(k)]
    out = []
    for flat in itertools.product(*options):
        out.append(Bicharacter(G, N, tuple(tuple(flat[u * k:(u + 1) * k]) for u in range(k))))
    out.sort(key=lambda b: b.exp_matrix)
    return out
