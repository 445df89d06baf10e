"""The graded Hopf algebra kQ on the path coalgebra of a Hopf quiver.

The coalgebra is the path coalgebra (splitting coproduct, counit supported on
vertices).  The product is the quantum shuffle product built from the Hopf
bimodule on arrows induced by a bicharacter B:

* left action is translation, ``g . a = (g x -> g w x)``;
* right action carries the scalar, ``a . g = B(g, w) (x g -> w x g)``,

for an arrow ``a: x -> w x``.  With ``B(g, g) = -1`` on ``Z_n`` this gives
``g a_i = a_{i+1}`` and ``a_i g = -a_{i+1}``.
"""

from __future__ import annotations

import itertools
from typing import Iterable

from .bicharacter import Bicharacter
from .errors import BadArity, IncompatibleQuiver, InfiniteGroup
from .groups import GroupElement
from .linear import LinComb, add_term, bilinear, tensor_mul
from .quiver import Arrow, HopfQuiver, Path, path_sort_key
from .report import Report
from .scalar import one, root_of_unity

PathVector = LinComb


def thin_splits(l: int, n: int) -> list[tuple[int, ...]]:
    """All 0/1 masks of length n with exactly l ones, in lexicographic order."""
    if l < 0 or n < 0 or l > n:
        raise BadArity(f"no thin splits with {l} ones in {n} slots")
    out = []
    for ones in itertools.combinations(range(n), l):
        mask = [0] * n
        for i in ones:
            mask[i] = 1
        out.append(tuple(mask))
    out.sort()
    return out


def complement(mask: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(1 - b for b in mask)


class PathHopfAlgebra:
    """kQ with the bicharacter-induced shuffle product.

    Paths are basis keys; degree is path length.  Products of basis paths are
    memoized, as is the antipode.
    """

    def __init__(self, quiver: HopfQuiver, bichar: Bicharacter):
        if bichar.group != quiver.group:
            raise IncompatibleQuiver("bicharacter and quiver live on different groups")
        self.quiver = quiver
        self.group = quiver.group
        self.bichar = bichar
        self.conductor = bichar.conductor
        self.one = one(self.conductor)
        self._products: dict[tuple[Path, Path], dict] = {}
        self._antipode: dict[Path, LinComb] = {}

    # basis-level structure -----------------------------------------------------
    def vertex(self, g: GroupElement) -> PathVector:
        return LinComb.basis(Path(self.group.element(g)), self.one)

    def unit_key(self) -> Path:
        return Path(self.group.unit())

    def vec(self, p: Path, c=None) -> PathVector:
        return LinComb.basis(p, self.one if c is None else c)

    def degree(self, p: Path) -> int:
        return len(p.steps)

    def group_part(self, p: Path) -> GroupElement | None:
        return None if p.steps else p.source

    def basis_elements(self, max_degree: int) -> list[Path]:
        return self.quiver.enumerate_paths(None, max_degree)

    def format_key(self, p: Path) -> str:
        return self.quiver.format_path(p)

    def sort_key(self, p: Path):
        return path_sort_key(p)

    def check_path(self, p: Path) -> None:
        if not self.quiver.contains(p):
            raise IncompatibleQuiver(f"{p} is not a path of the quiver")

    def basis_product(self, a: Path, b: Path) -> dict:
        key = (a, b)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        res = self._shuffle(a, b)
        self._products[key] = res
        return res

    def _shuffle(self, a: Path, b: Path) -> dict:
        G, B, N = self.group, self.bichar, self.conductor
        m, n = len(a.steps), len(b.steps)
        src = G.mul(a.source, b.source)
        if m == 0:
            return {Path(src, b.steps): self.one}
        # vertex of b after k of its arrows
        yb = [b.source]
        for w, _ in b.steps:
            yb.append(G.mul(w, yb[-1]))
        # exponent picked up by the j-th arrow of a when k arrows of b precede it
        E = [[B.exponent(yb[k], w) for k in range(n + 1)] for w, _ in a.steps]
        out: dict[Path, object] = {}
        for pos in itertools.combinations(range(m + n), m):
            steps = []
            exp = 0
            j = k = 0
            pos_set = pos
            pi = 0
            for slot in range(m + n):
                if pi < m and pos_set[pi] == slot:
                    exp += E[j][k]
                    steps.append(a.steps[j])
                    j += 1
                    pi += 1
                else:
                    steps.append(b.steps[k])
                    k += 1
            add_term(out, Path(src, tuple(steps)), root_of_unity(N, exp))
        return out

    def basis_coproduct(self, p: Path) -> dict:
        G = self.group
        out: dict[tuple[Path, Path], object] = {}
        x = p.source
        n = len(p.steps)
        for i in range(n + 1):
            add_term(out, (Path(x, p.steps[i:]), Path(p.source, p.steps[:i])), self.one)
            if i < n:
                x = G.mul(p.steps[i][0], x)
        return out

    def basis_counit(self, p: Path):
        return self.one if not p.steps else 0

    # linear extensions -----------------------------------------------------------
    def mul(self, u: dict, v: dict) -> PathVector:
        return bilinear(u, v, self.basis_product)

    def coproduct(self, u: dict) -> LinComb:
        out = LinComb()
        for p, c in u.items():
            for k, d in self.basis_coproduct(p).items():
                add_term(out, k, c * d)
        return out

    def counit(self, u: dict):
        total = 0
        for p, c in u.items():
            if not p.steps:
                total = total + c
        return total

    def tensor_mul(self, s: dict, t: dict) -> LinComb:
        return tensor_mul(s, t, self.basis_product)

    def power(self, u: dict, k: int) -> PathVector:
        out = LinComb.basis(self.unit_key(), self.one)
        for _ in range(k):
            out = self.mul(out, u)
        return out

    # bimodule ------------------------------------------------------------------
    def left_action(self, g: GroupElement, a: Arrow) -> PathVector:
        x = self.group.mul(g, a.source)
        return LinComb.basis(Path(x, ((a.weight, a.copy),)), self.one)

    def right_action(self, a: Arrow, g: GroupElement) -> PathVector:
        x = self.group.mul(a.source, g)
        return LinComb.basis(Path(x, ((a.weight, a.copy),)), self.bichar(g, a.weight))

    # antipode ------------------------------------------------------------------
    def antipode_path(self, p: Path) -> PathVector:
        hit = self._antipode.get(p)
        if hit is not None:
            return hit
        G = self.group
        if not p.steps:
            res = self.vertex(G.inv(p.source))
        else:
            # S(p) s(p) + sum_{0<i<n} S(upper_i) lower_i + S(t(p)) p = 0
            acc = LinComb()
            n = len(p.steps)
            x = p.source
            for i in range(1, n):
                x = G.mul(p.steps[i - 1][0], x)
                upper = Path(x, p.steps[i:])
                lower = Path(p.source, p.steps[:i])
                acc = acc + self.mul(self.antipode_path(upper), self.vec(lower))
            t = self.quiver.target(p)
            acc = acc + self.mul(self.vertex(G.inv(t)), self.vec(p))
            res = -self.mul(acc, self.vertex(G.inv(p.source)))
        self._antipode[p] = res
        return res

    def antipode(self, u: dict) -> PathVector:
        out = LinComb()
        for p, c in u.items():
            for k, d in self.antipode_path(p).items():
                add_term(out, k, c * d)
        return out

    def format_vector(self, u: dict) -> list[dict]:
        from .scalar import scalar_to_json

        return [{"path": self.format_key(p), "coeff": scalar_to_json(c)}
                for p, c in sorted(u.items(), key=lambda kc: path_sort_key(kc[0]))]


# module-level operations --------------------------------------------------------


def counit(u: dict):
    total = 0
    for p, c in u.items():
        if not p.steps:
            total = total + c
    return total


def coproduct(u: dict, Q: HopfQuiver) -> LinComb:
    out = LinComb()
    G = Q.group
    for p, c in u.items():
        x = p.source
        n = len(p.steps)
        for i in range(n + 1):
            add_term(out, (Path(x, p.steps[i:]), Path(p.source, p.steps[:i])), c)
            if i < n:
                x = G.mul(p.steps[i][0], x)
    return out


def bimodule_left(H: PathHopfAlgebra, g: GroupElement, a: Arrow) -> PathVector:
    return H.left_action(g, a)


def bimodule_right(H: PathHopfAlgebra, a: Arrow, g: GroupElement) -> PathVector:
    return H.right_action(a, g)


def shuffle_product(u: dict, v: dict, B: Bicharacter, Q: HopfQuiver) -> PathVector:
    H = PathHopfAlgebra(Q, B)
    for p in itertools.chain(u, v):
        H.check_path(p)
    return H.mul(u, v)


def antipode(u: dict, Q: HopfQuiver, B: Bicharacter) -> PathVector:
    return PathHopfAlgebra(Q, B).antipode(u)


# verification -----------------------------------------------------------------------


def _bounded_tuples(basis: list[Path], k: int, max_total: int) -> Iterable[tuple[Path, ...]]:
    by_len: dict[int, list[Path]] = {}
    for p in basis:
        by_len.setdefault(len(p.steps), []).append(p)
    lengths = sorted(by_len)
    for combo in itertools.product(lengths, repeat=k):
        if sum(combo) <= max_total:
            for tup in itertools.product(*(by_len[l] for l in combo)):
                yield tup


def verify_graded_bialgebra(Q: HopfQuiver, B: Bicharacter, max_len: int) -> Report:
    """Exhaustive Hopf-algebra checks on basis paths of bounded total length."""
    if not Q.group.is_finite():
        raise InfiniteGroup("exhaustive checks need a finite group")
    H = PathHopfAlgebra(Q, B)
    rep = Report("graded-bialgebra")
    if not B.is_skew_symmetric():
        rep.notes.append("bicharacter is not skew-symmetric")
    basis = H.basis_elements(max_len)
    fmt = H.format_key
    e = H.unit_key()
    unit = H.vec(e)

    def cop(p):
        return LinComb(H.basis_coproduct(p))

    for p in basis:
        u = H.vec(p)
        # grading of the coproduct
        for (p1, p2) in H.basis_coproduct(p):
            if len(p1.steps) + len(p2.steps) != len(p.steps):
                return rep.fail("coproduct grading", path=fmt(p))
        rep.tick("coproduct grading")
        if H.mul(unit, u) != u or H.mul(u, unit) != u:
            return rep.fail("unit", path=fmt(p))
        rep.tick("unit")
        d = cop(p)
        left = LinComb()
        right = LinComb()
        for (p1, p2), c in d.items():
            add_term(left, p2, c * H.basis_counit(p1))
            add_term(right, p1, c * H.basis_counit(p2))
        if left != u or right != u:
            return rep.fail("counit", path=fmt(p))
        rep.tick("counit")
        # coassociativity
        lhs = LinComb()
        rhs = LinComb()
        for (p1, p2), c in d.items():
            for (q1, q2), c2 in H.basis_coproduct(p1).items():
                add_term(lhs, (q1, q2, p2), c * c2)
            for (q1, q2), c2 in H.basis_coproduct(p2).items():
                add_term(rhs, (p1, q1, q2), c * c2)
        if lhs != rhs:
            return rep.fail("coassociativity", path=fmt(p))
        rep.tick("coassociativity")
        # antipode, both sides
        sl = LinComb()
        sr = LinComb()
        for (p1, p2), c in d.items():
            sl = sl + H.mul(H.antipode_path(p1), H.vec(p2)).scale(c)
            sr = sr + H.mul(H.vec(p1), H.antipode_path(p2)).scale(c)
        expect = unit.scale(H.basis_counit(p))
        if sl != expect or sr != expect:
            return rep.fail("antipode", path=fmt(p))
        rep.tick("antipode")

    for a, b in _bounded_tuples(basis, 2, max_len):
        prod = H.basis_product(a, b)
        if any(len(k.steps) != len(a.steps) + len(b.steps) for k in prod):
            return rep.fail("product grading", a=fmt(a), b=fmt(b))
        rep.tick("product grading")
        if H.counit(prod) != H.basis_counit(a) * H.basis_counit(b):
            return rep.fail("counit multiplicative", a=fmt(a), b=fmt(b))
        rep.tick("counit multiplicative")
        if H.coproduct(prod) != H.tensor_mul(H.basis_coproduct(a), H.basis_coproduct(b)):
            return rep.fail("coproduct multiplicative", a=fmt(a), b=fmt(b))
        rep.tick("coproduct multiplicative")

    for a, b, c in _bounded_tuples(basis, 3, max_len):
        ab_c = H.mul(H.basis_product(a, b), H.vec(c))
        a_bc = H.mul(H.vec(a), H.basis_product(b, c))
        if ab_c != a_bc:
            return rep.fail("associativity", a=fmt(a), b=fmt(b), c=fmt(c))
        rep.tick("associativity")
    return rep
