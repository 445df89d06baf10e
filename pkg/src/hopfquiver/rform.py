"""Universal R-forms on graded Hopf algebras given by a basis context.

A *context* is any object exposing the basis-level structure of a Hopf
algebra with a group-like degree-0 part:

``bichar``, ``unit_key()``, ``degree(k)``, ``group_part(k)``,
``basis_elements(max_degree)``, ``basis_product(a, b)``,
``basis_coproduct(k)``, ``basis_counit(k)`` and ``format_key(k)``.

``PathHopfAlgebra`` (truncated by path length) and ``PBWAlgebra`` (finite)
both qualify.  R-form values may be symbolic (``ParamScalar``); all checks are
then polynomial identities in the parameters.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable, Hashable, Iterable

from .bicharacter import Bicharacter
from .errors import ContextMismatch, NotInvertible, UnsolvedPattern
from .linear import LinComb, add_term
from .quiver import Path
from .report import Report
from .scalar import CycScalar, ParamScalar, scalar_to_json


def _is_path(k) -> bool:
    return isinstance(k, Path)


def key_group_part(k):
    """The group element of a degree-0 basis key, else None."""
    if isinstance(k, Path):
        return None if k.steps else k.source
    sigma = getattr(k, "sigma", None)
    if sigma is not None:
        return None if any(sigma) else k.grouppart
    raise ContextMismatch(f"unrecognized basis key {k!r}")


@dataclass
class RForm:
    """A bilinear form given by a bicharacter on group-likes plus a table of higher values."""

    degree0: Bicharacter
    higher: dict = field(default_factory=dict)
    concentrated: bool = True
    kind: str | None = None  # "path" or "pbw" once attached to a context

    def __post_init__(self):
        self.higher = {k: v for k, v in self.higher.items() if v != 0}
        if self.higher:
            self.concentrated = False
        elif self.concentrated is False and not self.higher:
            self.concentrated = True
        if self.kind is None and self.higher:
            self.kind = "path" if _is_path(next(iter(self.higher))[0]) else "pbw"

    def _check_kind(self, a) -> None:
        if self.kind is None:
            return
        if (self.kind == "path") != isinstance(a, Path):
            raise ContextMismatch(f"R-form lives on {self.kind} keys, got {a!r}")

    def value(self, a: Hashable, b: Hashable):
        """R on a pair of basis keys."""
        self._check_kind(a)
        self._check_kind(b)
        ga, gb = key_group_part(a), key_group_part(b)
        if ga is not None and gb is not None:
            return self.degree0(ga, gb)
        return self.higher.get((a, b), 0)

    __call__ = value

    def parameters(self) -> set[str]:
        out: set[str] = set()
        for v in self.higher.values():
            if isinstance(v, ParamScalar):
                out |= v.variables()
        return out

    def substitute(self, values: dict) -> "RForm":
        table = {}
        for k, v in self.higher.items():
            if isinstance(v, ParamScalar):
                v = v.substitute(values)
                if v.is_constant():
                    v = v.constant()
            table[k] = v
        return RForm(self.degree0, table, not any(x != 0 for x in table.values()), self.kind)

    def to_json(self, fmt: Callable[[Hashable], str] = str) -> dict:
        rows = []
        for (a, b), v in self.higher.items():
            rows.append({"a": fmt(a), "b": fmt(b), "value": scalar_to_json(v)})
        rows.sort(key=lambda r: (r["a"], r["b"]))
        return {"bichar": self.degree0.to_json(), "concentrated": self.concentrated, "higher": rows}


def trivial_extension(B: Bicharacter) -> RForm:
    """The R-form that is B on group-likes and vanishes in positive degree."""
    return RForm(B)


def rform_eval(R: RForm, u: dict, v: dict):
    total = 0
    for a, ca in u.items():
        for b, cb in v.items():
            r = R.value(a, b)
            if r != 0:
                total = total + ca * cb * r
    return total


def restrict_degree_zero(R: RForm) -> RForm:
    return RForm(R.degree0, {}, True, R.kind)


def inverse_bicharacter(B: Bicharacter) -> Bicharacter:
    return Bicharacter(B.group, B.conductor, tuple(tuple(-x for x in row) for row in B.exp_matrix))


# convolution inverse ----------------------------------------------------------------


def _as_constant(K):
    if isinstance(K, ParamScalar):
        if not K.is_constant():
            return None
        K = K.constant()
    if K == 0:
        return None
    return K


def _div(x, K):
    if isinstance(K, CycScalar):
        return x * K.inverse()
    from fractions import Fraction

    return x * (Fraction(1) / Fraction(K))


class InverseTable:
    """Lazy convolution inverse: Rbar with sum R(a1,b1) Rbar(a2,b2) = eps(a) eps(b).

    The terms with (a2, b2) = (a, b) have group-like first legs; their
    R-values sum to a constant K, and the remaining terms involve pairs of
    lower degree, so Rbar is solved degree by degree.
    """

    def __init__(self, ctx, R: RForm):
        self.ctx = ctx
        self.R = R
        self.memo: dict = {}
        self._active: set = set()
        self._cop: dict = {}

    def coproduct(self, k):
        hit = self._cop.get(k)
        if hit is None:
            hit = list(self.ctx.basis_coproduct(k).items())
            self._cop[k] = hit
        return hit

    def __call__(self, a, b):
        key = (a, b)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        ga, gb = key_group_part(a), key_group_part(b)
        if ga is not None and gb is not None:
            val = self.R.degree0(ga, gb).inverse()
            self.memo[key] = val
            return val
        if self.R.concentrated:
            self.memo[key] = 0
            return 0
        if key in self._active:
            raise NotInvertible("convolution system is not triangular", witness=key)
        self._active.add(key)
        ctx, R = self.ctx, self.R
        K = 0
        rest = 0
        for (a1, a2), ca in self.coproduct(a):
            for (b1, b2), cb in self.coproduct(b):
                r = R.value(a1, b1)
                if r == 0:
                    continue
                if a2 == a and b2 == b:
                    K = K + ca * cb * r
                else:
                    rest = rest + ca * cb * r * self(a2, b2)
        self._active.discard(key)
        Kc = _as_constant(K)
        if Kc is None:
            raise NotInvertible(f"leading coefficient {K} is not an invertible constant", witness=key)
        eps = ctx.basis_counit(a) * ctx.basis_counit(b)
        val = _div(eps - rest, Kc)
        if isinstance(val, ParamScalar) and val.is_constant():
            val = val.constant()
        self.memo[key] = val
        return val


def _pairs(basis: list, degree, max_total: int | None):
    for a in basis:
        da = degree(a)
        for b in basis:
            if max_total is None or da + degree(b) <= max_total:
                yield a, b


def _triples(basis: list, degree, max_total: int | None):
    for a in basis:
        da = degree(a)
        for b in basis:
            db = da + degree(b)
            if max_total is not None and db > max_total:
                continue
            for c in basis:
                if max_total is None or db + degree(c) <= max_total:
                    yield a, b, c


def _check_context(ctx, R: RForm) -> None:
    if R.degree0.group != ctx.bichar.group:
        raise ContextMismatch("R-form and algebra have different groups")
    if R.degree0.conductor != ctx.bichar.conductor:
        raise ContextMismatch("R-form and algebra use different conductors")
    kind = "path" if _is_path(ctx.unit_key()) else "pbw"
    if R.kind is not None and R.kind != kind:
        raise ContextMismatch(f"R-form lives on {R.kind} keys, algebra on {kind} keys")


def convolution_inverse(R: RForm, ctx=None, max_len: int | None = None) -> RForm:
    """The convolution inverse of R, tabulated on basis pairs of total degree <= max_len.

    Without a context only concentrated forms can be inverted (the inverse is
    the inverse bicharacter, again concentrated).
    """
    if ctx is None:
        if not R.concentrated:
            raise NotInvertible("a non-concentrated form needs an algebra context to invert")
        return RForm(inverse_bicharacter(R.degree0), {}, True, R.kind)
    _check_context(ctx, R)
    inv = InverseTable(ctx, R)
    basis = ctx.basis_elements(max_len)
    table = {}
    for a, b in _pairs(basis, ctx.degree, max_len):
        if key_group_part(a) is not None and key_group_part(b) is not None:
            continue
        v = inv(a, b)
        if v != 0:
            table[(a, b)] = v
    return RForm(inverse_bicharacter(R.degree0), table, not table,
                 "path" if _is_path(ctx.unit_key()) else "pbw")


def _fmt_pair(ctx, *keys) -> dict:
    names = "abc"
    return {names[i]: ctx.format_key(k) for i, k in enumerate(keys)}


def check_coquasi(ctx, R: RForm, max_len: int | None = None) -> Report:
    """Check (co)multiplicativity in each slot, convolution invertibility and the
    commutation rule ba = R(a1,b1) a2 b2 Rbar(a3,b3) on the truncated basis."""
    _check_context(ctx, R)
    rep = Report("coquasitriangular")
    basis = ctx.basis_elements(max_len)
    deg = ctx.degree
    inv = InverseTable(ctx, R)
    try:
        for a, b in _pairs(basis, deg, max_len):
            inv(a, b)
    except NotInvertible as exc:
        return rep.fail("convolution invertibility", **_fmt_pair(ctx, *exc.witness), reason=str(exc))
    cop = inv.coproduct
    prod_cache: dict = {}

    def prod(a, b):
        hit = prod_cache.get((a, b))
        if hit is None:
            hit = ctx.basis_product(a, b)
            prod_cache[(a, b)] = hit
        return hit

    # R * Rbar = eps (x) eps holds by construction; check Rbar * R as well
    for a, b in _pairs(basis, deg, max_len):
        s = 0
        for (a1, a2), ca in cop(a):
            for (b1, b2), cb in cop(b):
                r = R.value(a2, b2)
                if r != 0:
                    s = s + ca * cb * inv(a1, b1) * r
        if s != ctx.basis_counit(a) * ctx.basis_counit(b):
            return rep.fail("convolution inverse (right)", **_fmt_pair(ctx, a, b))
        rep.tick("convolution inverse")

    for a, b, c in _triples(basis, deg, max_len):
        # R(ab, c) = R(a, c1) R(b, c2)
        lhs = 0
        for k, x in prod(a, b).items():
            r = R.value(k, c)
            if r != 0:
                lhs = lhs + x * r
        rhs = 0
        for (c1, c2), cc in cop(c):
            r1 = R.value(a, c1)
            if r1 != 0:
                r2 = R.value(b, c2)
                if r2 != 0:
                    rhs = rhs + cc * r1 * r2
        if lhs != rhs:
            return rep.fail("R(ab,c) = R(a,c1) R(b,c2)", **_fmt_pair(ctx, a, b, c))
        rep.tick("multiplicative in first slot")
        # R(a, bc) = R(a1, c) R(a2, b)
        lhs = 0
        for k, x in prod(b, c).items():
            r = R.value(a, k)
            if r != 0:
                lhs = lhs + x * r
        rhs = 0
        for (a1, a2), ca in cop(a):
            r1 = R.value(a1, c)
            if r1 != 0:
                r2 = R.value(a2, b)
                if r2 != 0:
                    rhs = rhs + ca * r1 * r2
        if lhs != rhs:
            return rep.fail("R(a,bc) = R(a1,c) R(a2,b)", **_fmt_pair(ctx, a, b, c))
        rep.tick("multiplicative in second slot")

    def cop2(k):
        out = []
        for (k1, k2), c in cop(k):
            for (m1, m2), d in cop(k2):
                out.append((k1, m1, m2, c * d))
        return out

    cop2_cache: dict = {}
    for a, b in _pairs(basis, deg, max_len):
        lhs = LinComb(prod(b, a))
        ta = cop2_cache.setdefault(a, cop2(a))
        tb = cop2_cache.setdefault(b, cop2(b))
        rhs = LinComb()
        for a1, a2, a3, ca in ta:
            for b1, b2, b3, cb in tb:
                r = R.value(a1, b1)
                if r == 0:
                    continue
                rb = inv(a3, b3)
                if rb == 0:
                    continue
                coef = ca * cb * r * rb
                for k, x in prod(a2, b2).items():
                    add_term(rhs, k, coef * x)
        if lhs != rhs:
            return rep.fail("ba = R(a1,b1) a2 b2 Rbar(a3,b3)", **_fmt_pair(ctx, a, b))
        rep.tick("commutation")
    return rep


def check_cotriangular(ctx, R: RForm, max_len: int | None = None) -> Report:
    """R(a1,b1) R(b2,a2) = eps(a) eps(b) on basis pairs of bounded total degree."""
    _check_context(ctx, R)
    rep = Report("cotriangular")
    basis = ctx.basis_elements(max_len)
    cache: dict = {}

    def cop(k):
        hit = cache.get(k)
        if hit is None:
            hit = list(ctx.basis_coproduct(k).items())
            cache[k] = hit
        return hit

    for a, b in _pairs(basis, ctx.degree, max_len):
        s = 0
        for (a1, a2), ca in cop(a):
            for (b1, b2), cb in cop(b):
                r = R.value(a1, b1)
                if r == 0:
                    continue
                r2 = R.value(b2, a2)
                if r2 != 0:
                    s = s + ca * cb * r * r2
        if s != ctx.basis_counit(a) * ctx.basis_counit(b):
            return rep.fail("R(a1,b1) R(b2,a2) = eps(a) eps(b)", **_fmt_pair(ctx, a, b))
        rep.tick("cotriangular")
    return rep


# ---------------------------------------------------------------------------------
# constraint solver for R-forms on presented algebras


@dataclass
class RFormFamily:
    """All R-forms on a presented algebra, parametrized by free symbols."""

    presentation: object
    free: list[str]
    fixed: dict[str, object]
    relations: list = field(default_factory=list)
    table: dict = field(default_factory=dict)
    letter_values: dict = field(default_factory=dict)

    def rform(self, values: dict | None = None) -> RForm:
        R = RForm(self.presentation.bichar, dict(self.table), not self.table, "pbw")
        return R.substitute(values) if values else R

    def value(self, a, b):
        return self.rform().value(a, b)

    def to_json(self) -> dict:
        from .pbw import format_monomial

        P = self.presentation
        rows = [{"a": format_monomial(P, a), "b": format_monomial(P, b), "value": scalar_to_json(v)}
                for (a, b), v in self.table.items()]
        rows.sort(key=lambda r: (r["a"], r["b"]))
        return {
            "free": list(self.free),
            "fixed": {k: scalar_to_json(v) for k, v in sorted(self.fixed.items())},
            "relations": [str(r) for r in self.relations],
            "concentrated": not self.free and not self.table,
            "table": rows,
        }


class _FreeForm:
    """R on words of the free algebra over group and x letters, from letter-pair values."""

    def __init__(self, P, letter_values: dict):
        self.P = P
        self.G = P.group
        self.B = P.bichar
        self.vals = letter_values
        self.memo: dict = {}
        self.cop_memo: dict = {}

    def letter_cop(self, l):
        if l[0] == "g":
            return [((l,), (l,), 1)]
        gk = self.P.x_weight(l[1])
        return [(self.P.group_word(gk), (l,), 1), ((l,), (), 1)]

    def cop(self, w: tuple):
        hit = self.cop_memo.get(w)
        if hit is not None:
            return hit
        if not w:
            res = [((), (), 1)]
        else:
            head = self.letter_cop(w[0])
            tail = self.cop(w[1:])
            acc: dict = {}
            for u1, u2, c in head:
                for v1, v2, d in tail:
                    add_term(acc, (u1 + v1, u2 + v2), c * d)
            res = [(k1, k2, c) for (k1, k2), c in acc.items()]
        self.cop_memo[w] = res
        return res

    @staticmethod
    def counit(w: tuple):
        return 1 if all(l[0] == "g" for l in w) else 0

    def group_elem(self, w: tuple):
        return self.G.prod(l[1] for l in w)

    def __call__(self, u: tuple, v: tuple):
        key = (u, v)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if not u:
            res = self.counit(v)
        elif not v:
            res = self.counit(u)
        elif all(l[0] == "g" for l in u) and all(l[0] == "g" for l in v):
            res = self.B(self.group_elem(u), self.group_elem(v))
        elif len(u) == 1 and len(v) == 1:
            res = self.vals[(u[0], v[0])]
        elif len(u) >= 2:
            res = 0
            for v1, v2, c in self.cop(v):
                r1 = self(u[:1], v1)
                if r1 != 0:
                    r2 = self(u[1:], v2)
                    if r2 != 0:
                        res = res + c * r1 * r2
        else:
            res = 0
            for u1, u2, c in self.cop(u):
                r1 = self(u1, v[1:])
                if r1 != 0:
                    r2 = self(u2, v[:1])
                    if r2 != 0:
                        res = res + c * r1 * r2
        self.memo[key] = res
        return res

    def on(self, x: dict, y: dict):
        total = 0
        for u, c in x.items():
            for v, d in y.items():
                r = self(u, v)
                if r != 0:
                    total = total + c * d * r
        return total


def _letter_name(P, l) -> str:
    if l[0] == "g":
        return P.group.format_element(l[1])
    return "x" + str(P.x_index(l[1]))


def _unknown_name(P, a, b, single: bool) -> str:
    if single and a[0] == "x" and b[0] == "x":
        return "nu"

    def tag(l):
        if l[0] == "x":
            return str(l[1] + 1)
        return "g" + str(l[1].index(1) + 1)

    return f"r_{tag(a)}_{tag(b)}"


def _polys(values: Iterable) -> list[ParamScalar]:
    out = []
    for v in values:
        p = ParamScalar._lift(v) if not isinstance(v, ParamScalar) else v
        if p:
            out.append(p)
    return out


def _solve(equations: list[ParamScalar], unknowns: set[str]):
    """Pattern pipeline: vanishing monomials and linear elimination, to a fixpoint."""
    subst: dict[str, ParamScalar] = {}
    eqs = [e for e in equations if e]
    changed = True
    while changed:
        changed = False
        new_eqs = []
        for e in eqs:
            e = e.substitute(subst) if subst else e
            if e:
                new_eqs.append(e)
        eqs = new_eqs
        for e in eqs:
            vars_e = e.variables() & unknowns
            if not vars_e:
                continue
            # a single monomial c * v^k forces v = 0
            if len(e.terms) == 1:
                (mono, _), = e.terms.items()
                names = [n for n, _ in mono if n in unknowns]
                if len(names) == 1:
                    subst = _compose(subst, {names[0]: ParamScalar()})
                    changed = True
                    break
                continue
            # linear elimination: e = c v + rest, c a nonzero constant, rest free of v
            for v in sorted(vars_e):
                lin = [(m, c) for m, c in e.terms.items() if any(n == v for n, _ in m)]
                if len(lin) != 1 or lin[0][0] != ((v, 1),):
                    continue
                c = lin[0][1]
                rest = ParamScalar({m: x for m, x in e.terms.items() if m != lin[0][0]})
                subst = _compose(subst, {v: -rest / c})
                changed = True
                break
            if changed:
                break
    residual = [e for e in (x.substitute(subst) for x in eqs) if e]
    return subst, residual


def _compose(subst: dict, new: dict) -> dict:
    out = {k: v.substitute(new) for k, v in subst.items()}
    out.update(new)
    return out


def solve_rforms(P, verify: bool = True) -> RFormFamily:
    """Determine every R-form on the algebra presented by P.

    Unknowns are the values on pairs of generator letters (group letters are
    the standard generators, whose pairs are fixed by the bicharacter).  The
    constraints are: the form kills every defining relation against letters
    and two-letter words, in both slots, and the commutation rule
    b1 a1 R(a2,b2) = R(a1,b1) a2 b2 holds on letter pairs (coefficients taken
    in the PBW basis).  The result is verified by ``check_coquasi``.
    """
    from .pbw import PBWAlgebra, normalize, word_of

    G = P.group
    gens = [("g", G.generator(u)) for u in range(G.rank)]
    xs = [("x", k) for k in range(P.num_x())]
    letters = gens + xs
    single = len(xs) == 1
    values: dict = {}
    unknowns: set[str] = set()
    for a in letters:
        for b in letters:
            if a[0] == "g" and b[0] == "g":
                values[(a, b)] = P.bichar(a[1], b[1])
            else:
                name = _unknown_name(P, a, b, single)
                unknowns.add(name)
                values[(a, b)] = ParamScalar.var(name)
    F = _FreeForm(P, values)

    eqs: list[ParamScalar] = []
    probes = [(l,) for l in letters] + [(l, m) for l in letters for m in letters]
    for rel in P.free_relations():
        for w in probes:
            eqs.append(ParamScalar._lift(F.on(rel, {w: 1})))
            eqs.append(ParamScalar._lift(F.on({w: 1}, rel)))

    def nf(word, coef):
        return normalize(P, word).scale(coef) if coef != 0 else LinComb()

    for a in letters:
        for b in letters:
            lhs = LinComb()
            rhs = LinComb()
            for a1, a2, ca in F.cop((a,)):
                for b1, b2, cb in F.cop((b,)):
                    lhs = lhs + nf(b1 + a1, ca * cb * F(a2, b2))
                    rhs = rhs + nf(a2 + b2, ca * cb * F(a1, b1))
            diff = lhs - rhs
            eqs.extend(_polys(diff.values()))

    subst, residual = _solve(_polys(eqs), unknowns)
    if residual:
        raise UnsolvedPattern("constraints outside the solver patterns", residual=residual)

    # rename surviving unknowns to themselves; everything else is determined
    solved = {}
    for (a, b), v in values.items():
        if isinstance(v, ParamScalar):
            pv = v.substitute(subst)
            solved[(a, b)] = pv.constant() if pv.is_constant() else pv
        else:
            solved[(a, b)] = v
    free = sorted({n for v in solved.values() if isinstance(v, ParamScalar) for n in v.variables()}
                  & unknowns)
    fixed = {f"R({_letter_name(P, a)},{_letter_name(P, b)})": v
             for (a, b), v in solved.items()
             if not (isinstance(v, ParamScalar) and v.variables() & unknowns)}

    F2 = _FreeForm(P, solved)
    basis = P.basis()
    table = {}
    for m1 in basis:
        for m2 in basis:
            if not any(m1.sigma) and not any(m2.sigma):
                continue
            v = F2(word_of(P, m1, expand=True), word_of(P, m2, expand=True))
            if isinstance(v, ParamScalar) and v.is_constant():
                v = v.constant()
            if v != 0:
                table[(m1, m2)] = v
    fam = RFormFamily(P, free, fixed, [], table, solved)
    if verify:
        rep = check_coquasi(PBWAlgebra(P), fam.rform())
        if not rep.ok:
            raise UnsolvedPattern("solved family fails the R-form axioms", residual=[rep.failure])
    return fam
