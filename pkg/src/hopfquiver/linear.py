"""Finite linear combinations keyed by basis elements (paths, monomials, tensors)."""

from __future__ import annotations

from typing import Callable, Hashable, Iterable


def add_term(d: dict, key: Hashable, c) -> None:
    """d[key] += c, dropping the entry when it cancels."""
    s = d.get(key)
    if s is None:
        if c != 0:
            d[key] = c
        return
    s = s + c
    if s == 0:
        del d[key]
    else:
        d[key] = s


class LinComb(dict):
    """A dict basis -> coefficient with no stored zeros.  Equality is map equality."""

    @classmethod
    def basis(cls, key, c=1) -> "LinComb":
        return cls({key: c}) if c != 0 else cls()

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Hashable, object]]) -> "LinComb":
        out = cls()
        for k, c in terms:
            add_term(out, k, c)
        return out

    def __add__(self, other: dict) -> "LinComb":
        out = LinComb(self)
        for k, c in other.items():
            add_term(out, k, c)
        return out

    def __sub__(self, other: dict) -> "LinComb":
        out = LinComb(self)
        for k, c in other.items():
            add_term(out, k, -c)
        return out

    def __neg__(self) -> "LinComb":
        return LinComb({k: -c for k, c in self.items()})

    def scale(self, s) -> "LinComb":
        if s == 0:
            return LinComb()
        out = LinComb()
        for k, c in self.items():
            add_term(out, k, c * s)
        return out

    def map_keys(self, f: Callable) -> "LinComb":
        out = LinComb()
        for k, c in self.items():
            add_term(out, f(k), c)
        return out

    def is_zero(self) -> bool:
        return not self

    def sorted_items(self, key=None):
        return sorted(self.items(), key=(lambda kc: key(kc[0])) if key else (lambda kc: kc[0]))


def bilinear(u: dict, v: dict, product: Callable[[Hashable, Hashable], dict]) -> LinComb:
    """Extend a basis-level product to linear combinations."""
    out = LinComb()
    for a, ca in u.items():
        for b, cb in v.items():
            cab = ca * cb
            for k, c in product(a, b).items():
                add_term(out, k, c * cab)
    return out


def tensor_mul(s: dict, t: dict, product: Callable[[Hashable, Hashable], dict]) -> LinComb:
    """(a (x) b)(c (x) d) = ac (x) bd on tensor squares keyed by pairs."""
    out = LinComb()
    for (a, b), c1 in s.items():
        for (c, d), c2 in t.items():
            left = product(a, c)
            if not left:
                continue
            right = product(b, d)
            coef = c1 * c2
            for k1, x in left.items():
                for k2, y in right.items():
                    add_term(out, (k1, k2), coef * x * y)
    return out
