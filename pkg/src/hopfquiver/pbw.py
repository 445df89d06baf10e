"""Presented pointed Hopf algebras with PBW bases.

The algebra is generated by group letters and skew-primitive letters
``x[i,i']`` (one for each copy ``i'`` of each support element ``g_i``),
subject to

* the group relations;
* ``x[j,j'] g = R(g, g_j) g x[j,j']``;
* ``x[i,i']^2 = mu[i,i'] (1 - g_i^2)``;
* ``x[j,j'] x[i,i'] - R(g_i, g_j) x[i,i'] x[j,j'] = lambda (1 - g_i g_j)`` for
  ``(j,j') > (i,i')``.

Letters are tuples ``("g", element)`` and ``("x", k)`` where ``k`` indexes the
pairs ``(i, i')`` in lexicographic order.  Normal words are a single group
letter followed by strictly increasing x letters.
"""

from __future__ import annotations

import itertools
import re
from fractions import Fraction
from dataclasses import dataclass, field
from typing import NamedTuple

from .bicharacter import Bicharacter
from .errors import (HopfQuiverError, InfiniteDimensional, InfiniteGroup, NotConnected, ParseError,
                     UnknownLetter)
from .groups import AbelianGroup, GroupElement
from .linalg import rank
from .linear import LinComb, add_term
from .quiver import RamificationDatum, build_quiver
from .report import Report
from .scalar import ParamScalar, scalar_from_json, scalar_to_json

Letter = tuple


class NormalMonomial(NamedTuple):
    grouppart: GroupElement
    sigma: tuple[int, ...]


@dataclass(frozen=True)
class Presentation:
    group: AbelianGroup
    generators: tuple[tuple[GroupElement, int], ...]
    bichar: Bicharacter
    mu: dict = field(default_factory=dict, hash=False, compare=False)
    lam: dict = field(default_factory=dict, hash=False, compare=False)

    def __post_init__(self):
        gens = tuple((self.group.element(g), int(m)) for g, m in self.generators)
        object.__setattr__(self, "generators", gens)
        pairs = self.pairs()
        mu = {tuple(k): v for k, v in self.mu.items() if v != 0}
        lam = {}
        for (p, q), v in self.lam.items():
            p, q = tuple(p), tuple(q)
            if p == q:
                raise ValueError("lambda needs two distinct pairs")
            key = (p, q) if p < q else (q, p)
            if v != 0:
                lam[key] = v
        for k in list(mu) + [p for key in lam for p in key]:
            if k not in pairs:
                raise ValueError(f"no generator x{list(k)}")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "_pair_index", {p: k for k, p in enumerate(pairs)})

    # indexing ------------------------------------------------------------------
    def pairs(self) -> list[tuple[int, int]]:
        return [(i + 1, c) for i, (_, m) in enumerate(self.generators) for c in range(1, m + 1)]

    def num_x(self) -> int:
        return sum(m for _, m in self.generators)

    def pair(self, k: int) -> tuple[int, int]:
        return self.pairs()[k]

    def pair_index(self, pair) -> int:
        try:
            return self._pair_index[tuple(pair)]
        except KeyError:
            raise UnknownLetter(f"no generator x{list(pair)}") from None

    def x_weight(self, k: int) -> GroupElement:
        return self.generators[self.pair(k)[0] - 1][0]

    def x_index(self, k: int) -> str:
        i, c = self.pair(k)
        return f"[{i},{c}]"

    def support(self) -> list[GroupElement]:
        return [g for g, _ in self.generators]

    def mu_of(self, k: int):
        return self.mu.get(self.pair(k), 0)

    def lam_of(self, k: int, l: int):
        p, q = self.pair(k), self.pair(l)
        return self.lam.get((p, q) if p < q else (q, p), 0)

    def is_graded(self) -> bool:
        return not self.mu and not self.lam

    def group_word(self, g: GroupElement) -> tuple[Letter, ...]:
        """g as a word in the standard generators (non-negative exponents)."""
        out = []
        for u, e in enumerate(g):
            if e < 0:
                raise InfiniteGroup("group words need non-negative exponents")
            out.extend([("g", self.group.generator(u))] * e)
        return tuple(out)

    def basis(self) -> list[NormalMonomial]:
        if not self.group.is_finite():
            raise InfiniteGroup("PBW basis of an algebra over an infinite group")
        k = self.num_x()
        sigmas = sorted(itertools.product((0, 1), repeat=k), key=lambda s: (sum(s), tuple(-x for x in s)))
        return [NormalMonomial(g, s) for s in sigmas for g in self.group.elements()]

    def unit(self) -> NormalMonomial:
        return NormalMonomial(self.group.unit(), (0,) * self.num_x())

    # relations ------------------------------------------------------------------
    def labelled_relations(self) -> list[tuple[str, dict]]:
        """Defining relations as elements of the free algebra (word -> coefficient)."""
        G, B = self.group, self.bichar
        out = []
        gens = [("g", G.generator(u)) for u in range(G.rank)]
        names = G.generator_names()
        for u, n in enumerate(G.factor_orders):
            if n:
                out.append((f"{names[u]}^{n} = 1", {(gens[u],) * n: 1, (): -1}))
        for u in range(G.rank):
            for v in range(u + 1, G.rank):
                out.append((f"{names[u]}{names[v]} = {names[v]}{names[u]}",
                            {(gens[u], gens[v]): 1, (gens[v], gens[u]): -1}))
        for k in range(self.num_x()):
            x = ("x", k)
            gk = self.x_weight(k)
            for u in range(G.rank):
                out.append((f"x{self.x_index(k)}{names[u]} = R({names[u]},g_k){names[u]}x{self.x_index(k)}",
                            _combine({(x, gens[u]): 1, (gens[u], x): -B(gens[u][1], gk)})))
        for k in range(self.num_x()):
            x = ("x", k)
            gk = self.x_weight(k)
            mu = self.mu_of(k)
            rel = {(x, x): 1}
            if mu != 0:
                rel = _combine(rel, {(): -mu}, {self.group_word(G.mul(gk, gk)): mu})
            out.append((f"x{self.x_index(k)}^2 = mu(1 - g^2)", rel))
        for k in range(self.num_x()):
            for l in range(k + 1, self.num_x()):
                gk, gl = self.x_weight(k), self.x_weight(l)
                lam = self.lam_of(k, l)
                rel = _combine({(("x", l), ("x", k)): 1, (("x", k), ("x", l)): -B(gk, gl)})
                if lam != 0:
                    rel = _combine(rel, {(): -lam}, {self.group_word(G.mul(gk, gl)): lam})
                out.append((f"x{self.x_index(l)}x{self.x_index(k)} - R(g_i,g_j)x{self.x_index(k)}x{self.x_index(l)}"
                            f" = lambda(1 - g_ig_j)", rel))
        return out

    def free_relations(self) -> list[dict]:
        return [r for _, r in self.labelled_relations()]

    # serialization ----------------------------------------------------------------
    def to_json(self) -> dict:
        G = self.group
        return {
            "group": str(G),
            "generators": [{"element": list(g), "mult": m} for g, m in self.generators],
            "bichar": self.bichar.to_json(),
            "mu": [{"pair": list(p), "value": scalar_to_json(v)} for p, v in sorted(self.mu.items())],
            "lambda": [{"pairs": [list(p), list(q)], "value": scalar_to_json(v)}
                       for (p, q), v in sorted(self.lam.items())],
        }

    @classmethod
    def from_json(cls, data) -> "Presentation":
        B = Bicharacter.from_json(data["bichar"])
        G = B.group
        gens = tuple((G.element(e["element"]), int(e.get("mult", 1))) for e in data["generators"])
        N = B.conductor
        mu = {tuple(e["pair"]): scalar_from_json(e["value"], N) for e in data.get("mu", [])}
        lam = {(tuple(e["pairs"][0]), tuple(e["pairs"][1])): scalar_from_json(e["value"], N)
               for e in data.get("lambda", [])}
        return cls(G, gens, B, mu, lam)


def _combine(*parts: dict) -> dict:
    out: dict = {}
    for d in parts:
        for k, c in d.items():
            add_term(out, k, c)
    return out


# validity gates -------------------------------------------------------------------


def validity_violations(P: Presentation) -> list[dict]:
    out = []
    for g in P.support():
        if P.bichar(g, g) != -1:
            out.append({"generator": P.group.format_element(g), "reason": "R(g_i,g_i) != -1"})
        else:
            o = P.group.element_order(g)
            if o == float("inf") or o % 2:
                out.append({"generator": P.group.format_element(g), "reason": f"order {o} is not even"})
    return out


def normalization_violations(P: Presentation) -> list[dict]:
    G = P.group
    e = G.unit()
    out = []
    for p, v in P.mu.items():
        g = P.x_weight(P.pair_index(p))
        if G.mul(g, g) == e:
            out.append({"constant": f"mu{list(p)}", "reason": "g_i^2 = e"})
    for (p, q), v in P.lam.items():
        gi, gj = P.x_weight(P.pair_index(p)), P.x_weight(P.pair_index(q))
        if G.mul(gi, gj) == e:
            out.append({"constant": f"lambda{list(p)}{list(q)}", "reason": "g_ig_j = e"})
    return out


def lift(P: Presentation, mu: dict | None = None, lam: dict | None = None) -> Presentation:
    """A lifted presentation; constants multiplying an identically vanishing
    right-hand side are stored as 0."""
    G = P.group
    e = G.unit()
    mu = dict(mu or {})
    lam = dict(lam or {})
    tmp = Presentation(P.group, P.generators, P.bichar, mu, lam)
    mu2 = {}
    for p, v in tmp.mu.items():
        g = tmp.x_weight(tmp.pair_index(p))
        if G.mul(g, g) != e:
            mu2[p] = v
    lam2 = {}
    for (p, q), v in tmp.lam.items():
        gi, gj = tmp.x_weight(tmp.pair_index(p)), tmp.x_weight(tmp.pair_index(q))
        if G.mul(gi, gj) != e:
            lam2[(p, q)] = v
    return Presentation(P.group, P.generators, P.bichar, mu2, lam2)


def classify(G: AbelianGroup, R: RamificationDatum, B: Bicharacter) -> Presentation:
    """The graded presentation of the finite-dimensional algebra generated by
    vertices and arrows of kQ(G, R) with bicharacter B."""
    if B.group != G:
        raise HopfQuiverError("bicharacter lives on a different group")
    Q = build_quiver(G, R)
    if G.is_trivial():
        return Presentation(G, (), B)
    if not Q.is_connected():
        raise NotConnected(f"the support does not generate {G}")
    if not B.is_skew_symmetric():
        raise HopfQuiverError("the bicharacter is not skew-symmetric")
    P = Presentation(G, Q.ram.support, B)
    bad = validity_violations(P)
    if bad:
        raise InfiniteDimensional(f"generator {bad[0]['generator']}: {bad[0]['reason']}",
                                  generator=bad[0]["generator"])
    return P


def dimension(P: Presentation) -> int:
    if not P.group.is_finite():
        raise InfiniteGroup("the algebra has infinite dimension over an infinite group")
    return P.group.order() * 2 ** P.num_x()


# rewriting ------------------------------------------------------------------------


class Rewriter:
    """Oriented rewriting on words, with leftmost reduction to normal form."""

    def __init__(self, P: Presentation):
        self.P = P
        self.G = P.group
        self.e = P.group.unit()
        self.nx = P.num_x()
        self.weights = [P.x_weight(k) for k in range(self.nx)]
        self.memo: dict = {}

    def check_letter(self, l) -> None:
        if not isinstance(l, tuple) or len(l) != 2:
            raise UnknownLetter(f"bad letter {l!r}")
        if l[0] == "g":
            try:
                if self.G.element(l[1]) != tuple(l[1]):
                    raise UnknownLetter(f"group letter {l!r} is not reduced")
            except ValueError:
                raise UnknownLetter(f"group letter {l!r} is not in {self.G}") from None
        elif l[0] == "x":
            if not (isinstance(l[1], int) and 0 <= l[1] < self.nx):
                raise UnknownLetter(f"no generator with index {l[1]!r}")
        else:
            raise UnknownLetter(f"bad letter {l!r}")

    def step(self, w: tuple, pos: int):
        """Apply the rule at pos (single identity letter or the pair w[pos], w[pos+1]).

        Returns a list of (word, coeff) or None when nothing applies there."""
        a = w[pos]
        pre, B, G = w[:pos], self.P.bichar, self.G
        if a[0] == "g" and a[1] == self.e:
            return [(pre + w[pos + 1:], 1)]
        if pos + 1 >= len(w):
            return None
        b = w[pos + 1]
        post = w[pos + 2:]
        if a[0] == "g" and b[0] == "g":
            return [(pre + (("g", G.mul(a[1], b[1])),) + post, 1)]
        if a[0] == "x" and b[0] == "g":
            if b[1] == self.e:
                return None
            return [(pre + (b, a) + post, B(b[1], self.weights[a[1]]))]
        if a[0] == "x" and b[0] == "x":
            l, k = a[1], b[1]
            if l < k:
                return None
            gk, gl = self.weights[k], self.weights[l]
            if l == k:
                c = self.P.mu_of(k)
                if c == 0:
                    return []
                return [(pre + post, c), (pre + (("g", G.mul(gk, gk)),) + post, -c)]
            out = [(pre + (b, a) + post, B(gk, gl))]
            c = self.P.lam_of(k, l)
            if c != 0:
                out += [(pre + post, c), (pre + (("g", G.mul(gk, gl)),) + post, -c)]
            return out
        return None

    def redex(self, w: tuple) -> int | None:
        for pos in range(len(w)):
            if self.step_applies(w, pos):
                return pos
        return None

    def step_applies(self, w: tuple, pos: int) -> bool:
        a = w[pos]
        if a[0] == "g" and a[1] == self.e:
            return True
        if pos + 1 >= len(w):
            return False
        b = w[pos + 1]
        if b[0] == "g":
            return b[1] != self.e or a[0] == "g"
        return a[0] == "x" and a[1] >= b[1]

    def normal_form(self, w: tuple) -> LinComb:
        hit = self.memo.get(w)
        if hit is not None:
            return hit
        pos = self.redex(w)
        if pos is None:
            res = LinComb.basis(self.to_monomial(w), 1)
        else:
            res = LinComb()
            for w2, c in self.step(w, pos):
                for m, d in self.normal_form(w2).items():
                    add_term(res, m, c * d)
        self.memo[w] = res
        return res

    def to_monomial(self, w: tuple) -> NormalMonomial:
        g = self.e
        sigma = [0] * self.nx
        for l in w:
            if l[0] == "g":
                g = self.G.mul(g, l[1])
            else:
                sigma[l[1]] = 1
        return NormalMonomial(g, tuple(sigma))


_REWRITERS: dict[int, tuple[Presentation, Rewriter]] = {}


def rewriter(P: Presentation) -> Rewriter:
    hit = _REWRITERS.get(id(P))
    if hit is not None and hit[0] is P:
        return hit[1]
    rw = Rewriter(P)
    _REWRITERS[id(P)] = (P, rw)
    return rw


def normalize(P: Presentation, word) -> LinComb:
    """Reduce a word (sequence of letters) to a combination of normal monomials."""
    rw = rewriter(P)
    w = tuple((l[0], tuple(l[1]) if l[0] == "g" else l[1]) if isinstance(l, (tuple, list)) else l
              for l in word)
    for l in w:
        rw.check_letter(l)
    return rw.normal_form(w)


def word_of(P: Presentation, m: NormalMonomial, expand: bool = False) -> tuple:
    """The normal word of a monomial; expand=True spells the group part in standard generators."""
    if expand:
        head = P.group_word(m.grouppart)
    else:
        head = () if m.grouppart == P.group.unit() else (("g", m.grouppart),)
    return head + tuple(("x", k) for k, s in enumerate(m.sigma) if s)


def format_monomial(P: Presentation, m: NormalMonomial) -> str:
    parts = []
    if m.grouppart != P.group.unit() or not any(m.sigma):
        parts.append(P.group.format_element(m.grouppart))
    parts += [f"x{P.x_index(k)}" for k, s in enumerate(m.sigma) if s]
    return " ".join(parts)


def parse_word(P: Presentation, text: str) -> tuple:
    """Parse "x[2,1] x[1,1] g1^-1"; g<i> names the support element g_i."""
    G = P.group
    out = []
    for tok in text.split():
        m = re.fullmatch(r"x\[\s*(\d+)\s*,\s*(\d+)\s*\]", tok)
        if m:
            out.append(("x", P.pair_index((int(m.group(1)), int(m.group(2))))))
            continue
        m = re.fullmatch(r"g(\d+)(?:\^(-?\d+))?", tok)
        if m and 1 <= int(m.group(1)) <= len(P.generators):
            g = P.generators[int(m.group(1)) - 1][0]
            out.append(("g", G.power(g, int(m.group(2) or 1))))
            continue
        try:
            out.append(("g", G.parse_element(tok)))
        except ParseError:
            raise UnknownLetter(f"unknown letter {tok!r}") from None
    return tuple(out)


def closure_dimension(P: Presentation) -> int:
    """Number of normal monomials reached by multiplying generator words from 1."""
    rw = rewriter(P)
    letters = [("g", g) for g in P.group.generators()] + [("x", k) for k in range(P.num_x())]
    seen = {P.unit()}
    frontier = [P.unit()]
    while frontier:
        nxt = []
        for m in frontier:
            w = word_of(P, m)
            for l in letters:
                for m2 in rw.normal_form(w + (l,)):
                    if m2 not in seen:
                        seen.add(m2)
                        nxt.append(m2)
        frontier = nxt
    return len(seen)


# confluence -------------------------------------------------------------------------


def _overlap_letters(P: Presentation) -> list:
    G = P.group
    if G.is_finite():
        gs = [g for g in G.elements() if g != G.unit()]
    else:
        base = G.generators() + P.support()
        gs = set()
        for a in base:
            gs.add(a)
            gs.add(G.inv(a))
            for b in base:
                gs.add(G.mul(a, b))
        gs.discard(G.unit())
        gs = sorted(gs)
    return [("g", g) for g in gs] + [("x", k) for k in range(P.num_x())]


def check_confluence(P: Presentation) -> Report:
    """Resolve every overlap of two pair rules on three-letter words."""
    rep = Report("confluence")
    bad = normalization_violations(P)
    if bad:
        rep.notes.append("normalization gate failed before overlap resolution")
        return rep.fail("normalization", **bad[0])
    rw = rewriter(P)
    letters = _overlap_letters(P)
    fmt = lambda lc: {format_monomial(P, m): str(c) for m, c in sorted(lc.items())}
    for w in itertools.product(letters, repeat=3):
        if not (rw.step_applies(w, 0) and rw.step_applies(w, 1)):
            continue
        left = LinComb()
        for w2, c in rw.step(w, 0):
            left = left + rw.normal_form(w2).scale(c)
        right = LinComb()
        for w2, c in rw.step(w, 1):
            right = right + rw.normal_form(w2).scale(c)
        if left != right:
            return rep.fail("overlap", word=_format_word(P, w), left=fmt(left), right=fmt(right))
        rep.tick("overlap")
    return rep


def _format_word(P: Presentation, w) -> str:
    return " ".join(P.group.format_element(l[1]) if l[0] == "g" else f"x{P.x_index(l[1])}" for l in w)


# the Hopf structure -------------------------------------------------------------------


class PBWAlgebra:
    """Basis-level Hopf structure of a presented algebra, on normal monomials."""

    def __init__(self, P: Presentation):
        self.P = P
        self.group = P.group
        self.bichar = P.bichar
        self.rw = rewriter(P)
        self._basis = P.basis()
        self._prod: dict = {}
        self._cop: dict = {}
        self._antipode: dict = {}

    def unit_key(self) -> NormalMonomial:
        return self.P.unit()

    def degree(self, m: NormalMonomial) -> int:
        return sum(m.sigma)

    def group_part(self, m: NormalMonomial):
        return None if any(m.sigma) else m.grouppart

    def basis_elements(self, max_degree: int | None = None) -> list[NormalMonomial]:
        if max_degree is None:
            return list(self._basis)
        return [m for m in self._basis if sum(m.sigma) <= max_degree]

    def format_key(self, m: NormalMonomial) -> str:
        return format_monomial(self.P, m)

    def vec(self, m: NormalMonomial, c=1) -> LinComb:
        return LinComb.basis(m, c)

    def basis_product(self, a: NormalMonomial, b: NormalMonomial) -> dict:
        hit = self._prod.get((a, b))
        if hit is None:
            hit = self.rw.normal_form(word_of(self.P, a) + word_of(self.P, b))
            self._prod[(a, b)] = hit
        return hit

    def mul(self, u: dict, v: dict) -> LinComb:
        out = LinComb()
        for a, ca in u.items():
            for b, cb in v.items():
                for k, c in self.basis_product(a, b).items():
                    add_term(out, k, ca * cb * c)
        return out

    def word(self, w: tuple) -> LinComb:
        return self.rw.normal_form(w)

    def letter_coproduct(self, l) -> list:
        if l[0] == "g":
            return [((l,), (l,))]
        g = self.P.x_weight(l[1])
        return [((("g", g),), (l,)), ((l,), ())]

    def word_coproduct(self, w: tuple) -> LinComb:
        """Delta of a word, as the product of letter coproducts, normalized factorwise."""
        terms = {((), ()): 1}
        for l in w:
            nxt: dict = {}
            for (u, v), c in terms.items():
                for l1, l2 in self.letter_coproduct(l):
                    add_term(nxt, (u + l1, v + l2), c)
            terms = nxt
        out = LinComb()
        for (u, v), c in terms.items():
            for m1, c1 in self.rw.normal_form(u).items():
                for m2, c2 in self.rw.normal_form(v).items():
                    add_term(out, (m1, m2), c * c1 * c2)
        return out

    def basis_coproduct(self, m: NormalMonomial) -> dict:
        hit = self._cop.get(m)
        if hit is None:
            hit = self.word_coproduct(word_of(self.P, m))
            self._cop[m] = hit
        return hit

    def basis_counit(self, m: NormalMonomial):
        return 0 if any(m.sigma) else 1

    def coproduct(self, u: dict) -> LinComb:
        out = LinComb()
        for m, c in u.items():
            for k, d in self.basis_coproduct(m).items():
                add_term(out, k, c * d)
        return out

    def counit(self, u: dict):
        total = 0
        for m, c in u.items():
            if not any(m.sigma):
                total = total + c
        return total

    def tensor_mul(self, s: dict, t: dict) -> LinComb:
        from .linear import tensor_mul

        return tensor_mul(s, t, self.basis_product)

    def antipode_basis(self, m: NormalMonomial) -> LinComb:
        """S(m) from sum S(m1) m2 = eps(m) 1, solving for the term (m, h) with h group-like."""
        hit = self._antipode.get(m)
        if hit is not None:
            return hit
        G = self.group
        if not any(m.sigma):
            res = LinComb.basis(NormalMonomial(G.inv(m.grouppart), m.sigma), 1)
        else:
            lead = None
            rest = LinComb()
            for (m1, m2), c in self.basis_coproduct(m).items():
                if m1 == m:
                    if any(m2.sigma) or lead is not None:
                        raise HopfQuiverError(f"no triangular antipode recursion at {m}")
                    lead = (m2, c)
                else:
                    rest = rest + self.mul(self.antipode_basis(m1), self.vec(m2)).scale(c)
            if lead is None:
                raise HopfQuiverError(f"no leading term in the coproduct of {m}")
            h, c = lead
            hinv = NormalMonomial(G.inv(h.grouppart), h.sigma)
            inv_c = c.inverse() if hasattr(c, "inverse") else Fraction(1) / Fraction(c)
            res = self.mul(-rest, self.vec(hinv)).scale(inv_c)
        self._antipode[m] = res
        return res

    def antipode(self, u: dict) -> LinComb:
        out = LinComb()
        for m, c in u.items():
            for k, d in self.antipode_basis(m).items():
                add_term(out, k, c * d)
        return out


def coproduct_on_normal(P: Presentation, m: NormalMonomial) -> LinComb:
    return LinComb(PBWAlgebra(P).basis_coproduct(m))


def verify_hopf(P: Presentation, exhaustive_limit: int = 512, assoc_limit: int = 64) -> Report:
    """Hopf-algebra checks: relations respected by the counit and coproduct, then
    exhaustive basis checks (multiplicativity, coassociativity, counit, antipode)."""
    rep = Report("hopf")
    bad = validity_violations(P)
    if bad:
        return rep.fail("validity", **bad[0])
    A = PBWAlgebra(P)
    fmt = A.format_key
    for label, rel in P.labelled_relations():
        eps = 0
        d = LinComb()
        for w, c in rel.items():
            if all(l[0] == "g" for l in w):
                eps = eps + c
            d = d + A.word_coproduct(w).scale(c)
        if eps != 0:
            return rep.fail("counit on relation", relation=label)
        if d:
            return rep.fail("coproduct on relation", relation=label,
                            residual={f"{fmt(a)} (x) {fmt(b)}": str(c) for (a, b), c in sorted(d.items())})
        rep.tick("relations")
    basis = A.basis_elements()
    dim = len(basis)
    if dim > exhaustive_limit:
        rep.notes.append(f"dimension {dim} above {exhaustive_limit}: basis checks skipped")
        return rep
    unit = A.vec(A.unit_key())
    for m in basis:
        u = A.vec(m)
        if A.mul(unit, u) != u or A.mul(u, unit) != u:
            return rep.fail("unit", a=fmt(m))
        d = LinComb(A.basis_coproduct(m))
        left, right = LinComb(), LinComb()
        lhs, rhs = LinComb(), LinComb()
        for (m1, m2), c in d.items():
            add_term(left, m2, c * A.basis_counit(m1))
            add_term(right, m1, c * A.basis_counit(m2))
            for (q1, q2), c2 in A.basis_coproduct(m1).items():
                add_term(lhs, (q1, q2, m2), c * c2)
            for (q1, q2), c2 in A.basis_coproduct(m2).items():
                add_term(rhs, (m1, q1, q2), c * c2)
        if left != u or right != u:
            return rep.fail("counit", a=fmt(m))
        rep.tick("counit")
        if lhs != rhs:
            return rep.fail("coassociativity", a=fmt(m))
        rep.tick("coassociativity")
        try:
            A.antipode_basis(m)
        except HopfQuiverError as exc:
            return rep.fail("antipode recursion", a=fmt(m), reason=str(exc))
        sr = LinComb()
        for (m1, m2), c in d.items():
            sr = sr + A.mul(A.vec(m1), A.antipode_basis(m2)).scale(c)
        if sr != unit.scale(A.basis_counit(m)):
            return rep.fail("antipode", a=fmt(m))
        rep.tick("antipode")
    for a in basis:
        for b in basis:
            prod = A.basis_product(a, b)
            if A.counit(prod) != A.basis_counit(a) * A.basis_counit(b):
                return rep.fail("counit multiplicative", a=fmt(a), b=fmt(b))
            if A.coproduct(prod) != A.tensor_mul(A.basis_coproduct(a), A.basis_coproduct(b)):
                return rep.fail("coproduct multiplicative", a=fmt(a), b=fmt(b))
            rep.tick("multiplicativity")
    if dim <= assoc_limit:
        rep.tick("associativity", 0)
        for a in basis:
            for b in basis:
                ab = A.basis_product(a, b)
                for c in basis:
                    if A.mul(ab, A.vec(c)) != A.mul(A.vec(a), A.basis_product(b, c)):
                        return rep.fail("associativity", a=fmt(a), b=fmt(b), c=fmt(c))
                    rep.tick("associativity")
    else:
        rep.notes.append(f"dimension {dim} above {assoc_limit}: associativity skipped")
    return rep


def check_associativity(P: Presentation) -> Report:
    rep = Report("associativity")
    A = PBWAlgebra(P)
    basis = A.basis_elements()
    for a in basis:
        for b in basis:
            ab = A.basis_product(a, b)
            for c in basis:
                if A.mul(ab, A.vec(c)) != A.mul(A.vec(a), A.basis_product(b, c)):
                    return rep.fail("associativity", a=A.format_key(a), b=A.format_key(b), c=A.format_key(c))
                rep.tick("associativity")
    return rep


# embedding into the path algebra -------------------------------------------------------


def gr_embed_check(P: Presentation, max_len: int = 2) -> Report:
    """Map g to the vertex g and x[i,i'] to the arrow (e, g_i, i') of kQ; check that
    relations vanish, products agree and PBW images of degree <= max_len are independent."""
    from .path_hopf import PathHopfAlgebra

    rep = Report("gr-embed")
    if not P.is_graded():
        return rep.fail("graded input", reason="mu or lambda is nonzero")
    G = P.group
    R = RamificationDatum(P.generators)
    H = PathHopfAlgebra(build_quiver(G, R), P.bichar)
    e = G.unit()
    images: dict = {}

    def letter_image(l):
        if l[0] == "g":
            return H.vertex(l[1])
        i, c = P.pair(l[1])
        from .quiver import Path

        return LinComb.basis(Path(e, ((P.generators[i - 1][0], c),)), H.one)

    def word_image(w):
        hit = images.get(w)
        if hit is not None:
            return hit
        if not w:
            res = H.vertex(e)
        else:
            res = H.mul(word_image(w[:-1]), letter_image(w[-1]))
        images[w] = res
        return res

    for label, rel in P.labelled_relations():
        img = LinComb()
        for w, c in rel.items():
            img = img + word_image(w).scale(c)
        if img:
            return rep.fail("relation maps to zero", relation=label,
                            image={H.format_key(p): str(c) for p, c in sorted(img.items())})
        rep.tick("relations")
    A = PBWAlgebra(P)
    mons = A.basis_elements(max_len)
    vecs = [word_image(word_of(P, m)) for m in mons]
    r = rank(vecs)
    rep.tick("independence", len(vecs))
    if r != len(vecs):
        return rep.fail("linear independence", rank=r, count=len(vecs))

    def image_of(lc):
        out = LinComb()
        for m, c in lc.items():
            out = out + word_image(word_of(P, m)).scale(c)
        return out

    for a in mons:
        for b in mons:
            if A.degree(a) + A.degree(b) > max_len:
                continue
            lhs = H.mul(word_image(word_of(P, a)), word_image(word_of(P, b)))
            if lhs != image_of(A.basis_product(a, b)):
                return rep.fail("products agree", a=A.format_key(a), b=A.format_key(b))
            rep.tick("products")
    return rep


# standard families --------------------------------------------------------------------


def c2_presentation(n: int) -> Presentation:
    """C_2(n, -1): g^n = 1, x^2 = 0, gx = -xg."""
    from .bicharacter import cyclic_bicharacter
    from .groups import AbelianGroup as AG

    G = AG(0, (n,))
    return Presentation(G, (((1,), 1),), cyclic_bicharacter(G, -1))


def e_presentation(n: int, m: int) -> Presentation:
    """E(n, m): one group-like g of order n and m skew-primitives over it."""
    from .bicharacter import cyclic_bicharacter
    from .groups import AbelianGroup as AG

    G = AG(0, (n,))
    return Presentation(G, (((1,), m),), cyclic_bicharacter(G, -1))


def h_presentation(m: int, n: int, q_exp: int = 1, conductor: int | None = None) -> Presentation:
    """H(m, n, q) with q = zeta_N^q_exp = R(g, h) on Z_m x Z_n."""
    import math

    from .groups import AbelianGroup as AG

    G = AG(0, (m, n))
    N = conductor or math.lcm(m, n)
    if N % 2:
        raise InfiniteDimensional("R(g,g) = -1 needs an even conductor", generator="g")
    B = Bicharacter(G, N, ((N // 2, q_exp), (-q_exp, N // 2)))
    return Presentation(G, (((1, 0), 1), ((0, 1), 1)), B)


def sweedler_presentation(mu=None) -> Presentation:
    """Sweedler's algebra, optionally with the lifting x^2 = mu (1 - g^2) (canonically trivial)."""
    P = c2_presentation(2)
    if mu is None:
        return P
    return lift(P, mu={(1, 1): mu})


Sweedler = sweedler_presentation
