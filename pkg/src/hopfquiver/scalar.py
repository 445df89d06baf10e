"""Exact arithmetic in cyclotomic fields Q(zeta_N), plus polynomials over them.

A :class:`CycScalar` is stored as the canonical remainder of a polynomial in
``zeta_N`` modulo the N-th cyclotomic polynomial, so two scalars are equal
exactly when their coefficient tuples are equal.

:class:`ParamScalar` is a commutative polynomial in named parameters whose
coefficients are rationals or :class:`CycScalar` values.  It is what symbolic
structure constants (free R-form entries, lifting constants) live in.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Union

from .errors import ConductorMismatch


Rational = Union[int, Fraction]


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def _poly_divexact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic, coefficients low -> high
    num = list(num)
    dn = len(den) - 1
    out = [0] * (len(num) - dn)
    for k in range(len(num) - 1, dn - 1, -1):
        c = num[k]
        if c:
            out[k - dn] = c
            for j in range(dn + 1):
                num[k - dn + j] -= c * den[j]
    assert not any(num), "inexact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Integer coefficients (low degree first) of the n-th cyclotomic polynomial."""
    if n < 1:
        raise ValueError("conductor must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in _divisors(n)[:-1]:
        poly = _poly_divexact(poly, cyclotomic_polynomial(d))
    return tuple(poly)


@lru_cache(maxsize=None)
def _reduction_rows(n: int, length: int) -> tuple[tuple[int, ...], ...]:
    """Row k holds x^k mod Phi_n as an integer vector of length deg(Phi_n)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows: list[tuple[int, ...]] = []
    cur = [0] * deg
    if deg:
        cur[0] = 1
    for _ in range(length):
        rows.append(tuple(cur))
        # multiply by x and reduce
        top = cur[-1] if deg else 0
        nxt = [0] + cur[:-1]
        if top:
            nxt = [nxt[j] - top * phi[j] for j in range(deg)]
        cur = nxt
    return tuple(rows)


def _reduce(n: int, poly: Iterable[Rational]) -> tuple[Fraction, ...]:
    poly = list(poly)
    deg = len(cyclotomic_polynomial(n)) - 1
    if len(poly) <= deg:
        return tuple(Fraction(c) for c in poly) + (Fraction(0),) * (deg - len(poly))
    rows = _reduction_rows(n, len(poly))
    out = [Fraction(0)] * deg
    for k, c in enumerate(poly):
        if c:
            row = rows[k]
            for j in range(deg):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


class CycScalar:
    """An element of Q(zeta_N)."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: tuple[Fraction, ...]):
        # trusted constructor; use cyc_make for arbitrary input
        self.conductor = conductor
        self.coeffs = coeffs

    # construction helpers -------------------------------------------------
    @classmethod
    def rational(cls, n: int, value: Rational) -> "CycScalar":
        deg = len(cyclotomic_polynomial(n)) - 1
        return cls(n, (Fraction(value),) + (Fraction(0),) * (deg - 1))

    def _coerce(self, other) -> "CycScalar":
        if isinstance(other, CycScalar):
            if other.conductor != self.conductor:
                raise ConductorMismatch(f"conductors {self.conductor} and {other.conductor}")
            return other
        if isinstance(other, (int, Fraction)):
            return CycScalar.rational(self.conductor, other)
        raise TypeError(type(other))

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        if isinstance(other, ParamScalar):
            return NotImplemented
        o = self._coerce(other)
        return CycScalar(self.conductor, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycScalar(self.conductor, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, ParamScalar):
            return NotImplemented
        o = self._coerce(other)
        return CycScalar(self.conductor, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, ParamScalar):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return CycScalar(self.conductor, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        a, b = self.coeffs, o.coeffs
        deg = len(a)
        if deg == 1:
            return CycScalar(self.conductor, (a[0] * b[0],))
        conv = [Fraction(0)] * (2 * deg - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        conv[i + j] += ai * bj
        return CycScalar(self.conductor, _reduce(self.conductor, conv))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamScalar):
            return NotImplemented
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        result = CycScalar.rational(self.conductor, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "CycScalar":
        return cyc_inv(self)

    # comparison -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def __eq__(self, other):
        if isinstance(other, CycScalar):
            return self.conductor == other.conductor and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs[0] == other and not any(self.coeffs[1:])
        if isinstance(other, ParamScalar):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.conductor, self.coeffs))

    def __repr__(self):
        return f"CycScalar({self})"

    def __str__(self):
        parts = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = f"z{self.conductor}" + (f"^{k}" if k > 1 else "")
                if c == 1:
                    parts.append(mono)
                elif c == -1:
                    parts.append("-" + mono)
                else:
                    parts.append(f"{c}*{mono}")
        if not parts:
            return "0"
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {"conductor": self.conductor, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: Mapping) -> "CycScalar":
        return cyc_make(int(data["conductor"]), [Fraction(c) for c in data["coeffs"]])


def cyc_make(n: int, poly: Iterable[Rational]) -> CycScalar:
    """Reduce a polynomial in zeta_n modulo Phi_n."""
    if n < 1:
        raise ValueError("conductor must be positive")
    return CycScalar(n, _reduce(n, poly))


def cyc_add(a: CycScalar, b: CycScalar) -> CycScalar:
    return a + b


def cyc_mul(a: CycScalar, b: CycScalar) -> CycScalar:
    return a * b


def cyc_neg(a: CycScalar) -> CycScalar:
    return -a


def _trim(p: list[Fraction]) -> list[Fraction]:
    while p and not p[-1]:
        p.pop()
    return p


def _poly_divmod(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    lead = b[-1]
    while len(_trim(a)) >= len(b):
        shift = len(a) - len(b)
        c = a[-1] / lead
        q[shift] = c
        for j, bj in enumerate(b):
            a[shift + j] -= c * bj
        _trim(a)
    return q, a


def _poly_mul(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def cyc_inv(a: CycScalar) -> CycScalar:
    """Multiplicative inverse by the extended Euclidean algorithm against Phi_N."""
    if a.is_zero():
        raise ZeroDivisionError("inverse of zero cyclotomic scalar")
    if a.is_rational():
        return CycScalar.rational(a.conductor, 1 / a.coeffs[0])
    phi = [Fraction(c) for c in cyclotomic_polynomial(a.conductor)]
    # invariant: s_i * a == r_i (mod phi)
    r0, r1 = phi, _trim(list(a.coeffs))
    s0, s1 = [], [Fraction(1)]
    while len(r1) > 1:
        q, r = _poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    # r1 is a nonzero constant since phi is irreducible
    c = r1[0]
    return cyc_make(a.conductor, [x / c for x in s1])


@lru_cache(maxsize=None)
def _power_table(n: int) -> tuple[CycScalar, ...]:
    return tuple(CycScalar(n, _reduce(n, [0] * k + [1])) for k in range(n))


def root_of_unity(n: int, k: int) -> CycScalar:
    """zeta_n ** k, canonically reduced."""
    return _power_table(n)[k % n]


def one(n: int) -> CycScalar:
    return root_of_unity(n, 0)


def zero(n: int) -> CycScalar:
    return CycScalar.rational(n, 0)


# ---------------------------------------------------------------------------
# polynomials in named parameters

Monomial = tuple[tuple[str, int], ...]


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for name, e in b:
        d[name] = d.get(name, 0) + e
    return tuple(sorted(d.items()))


class ParamScalar:
    """Polynomial in named parameters with exact scalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        self.terms: dict[Monomial, object] = {}
        if terms:
            for m, c in terms.items():
                if c != 0:
                    self.terms[m] = c

    @classmethod
    def var(cls, name: str) -> "ParamScalar":
        return cls({((name, 1),): Fraction(1)})

    @classmethod
    def const(cls, c) -> "ParamScalar":
        if isinstance(c, ParamScalar):
            return c
        return cls({(): c})

    @staticmethod
    def _lift(other) -> "ParamScalar":
        if isinstance(other, ParamScalar):
            return other
        if isinstance(other, (int, Fraction, CycScalar)):
            return ParamScalar.const(other)
        raise TypeError(type(other))

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for m, c in o.terms.items():
            s = out.get(m, 0) + c
            if s == 0:
                out.pop(m, None)
            else:
                out[m] = s
        r = ParamScalar()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = ParamScalar()
        r.terms = {m: -c for m, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, CycScalar)):
            if other == 0:
                return ParamScalar()
            r = ParamScalar()
            r.terms = {m: c * other for m, c in self.terms.items()}
            r.terms = {m: c for m, c in r.terms.items() if c != 0}
            return r
        o = self._lift(other)
        out: dict[Monomial, object] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in o.terms.items():
                m = _mono_mul(m1, m2)
                s = out.get(m, 0) + c1 * c2
                if s == 0:
                    out.pop(m, None)
                else:
                    out[m] = s
        r = ParamScalar()
        r.terms = out
        return r

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, ParamScalar):
            if not other.is_constant():
                raise ZeroDivisionError("division by a non-constant parameter polynomial")
            other = other.constant()
        if other == 0:
            raise ZeroDivisionError("division by zero")
        if isinstance(other, CycScalar):
            return self * other.inverse()
        return self * (Fraction(1) / Fraction(other))

    def __pow__(self, k: int):
        result = ParamScalar.const(1)
        for _ in range(k):
            result = result * self
        return result

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant(self):
        """The constant term (0 if absent)."""
        return self.terms.get((), 0)

    def variables(self) -> set[str]:
        return {name for m in self.terms for name, _ in m}

    def degree_in(self, name: str) -> int:
        return max((dict(m).get(name, 0) for m in self.terms), default=0)

    def substitute(self, values: Mapping[str, object]) -> "ParamScalar":
        out = ParamScalar()
        for m, c in self.terms.items():
            term = ParamScalar.const(c)
            rest = []
            for name, e in m:
                if name in values:
                    term = term * (ParamScalar._lift(values[name]) ** e)
                else:
                    rest.append((name, e))
            if rest:
                term = term * ParamScalar({tuple(rest): Fraction(1)})
            out = out + term
        return out

    def __eq__(self, other):
        try:
            o = self._lift(other)
        except TypeError:
            return NotImplemented
        return not (self - o).terms

    def __hash__(self):
        if self.is_constant():
            return hash(self.constant())
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"ParamScalar({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda m: (sum(e for _, e in m), m)):
            c = self.terms[m]
            mono = "*".join(name if e == 1 else f"{name}^{e}" for name, e in m)
            cs = str(c)
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                if " " in cs:
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "terms": [
                {"monomial": dict(m), "coeff": scalar_to_json(c)}
                for m, c in sorted(self.terms.items())
            ]
        }


def scalar_to_json(c) -> object:
    if isinstance(c, ParamScalar):
        return c.to_json()
    if isinstance(c, CycScalar):
        return c.to_json()
    return {"conductor": 1, "coeffs": [str(Fraction(c))]}


def scalar_from_json(data, conductor: int | None = None):
    """Decode a scalar: cyclotomic dict, parameter polynomial, bare number or parameter name."""
    if isinstance(data, str):
        try:
            value = Fraction(data)
        except ValueError:
            return ParamScalar.var(data)
        return CycScalar.rational(conductor, value) if conductor else value
    if isinstance(data, (int, float)):
        value = Fraction(data)
        return CycScalar.rational(conductor, value) if conductor else value
    if "terms" in data:
        out = ParamScalar()
        for term in data["terms"]:
            mono = tuple(sorted((k, int(v)) for k, v in term["monomial"].items()))
            out = out + ParamScalar({mono: scalar_from_json(term["coeff"], conductor)})
        return out
    c = CycScalar.from_json(data)
    if conductor and c.conductor != conductor:
        if c.conductor == 1:
            return CycScalar.rational(conductor, c.coeffs[0])
        raise ConductorMismatch(f"scalar conductor {c.conductor}, context {conductor}")
    return c
