"""Tabulate products of cyclic paths in kQ(Z_n, g) with R(g, g) = -1.

For each (i, l, j, m) the exact coefficient c in p_i^l p_j^m = c p_{i+j}^{l+m}
is printed next to the naive candidate (-1)^{im} (zero for l, m odd) and the
closed form (-1)^{jl} [l+m choose l]_{-1}.

    python scripts/cyclic_product_table.py --n 4 --max-len 5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from hopfquiver.bicharacter import cyclic_bicharacter
from hopfquiver.groups import parse_group
from hopfquiver.path_hopf import PathHopfAlgebra
from hopfquiver.quiver import Path, build_quiver, parse_ram


@dataclass
class TableConfig:
    n: int = 4
    max_len: int = 5
    only_mismatches: bool = False


def gauss_binom_minus_one(n: int, k: int) -> int:
    from math import comb

    if n % 2 == 0 and k % 2:
        return 0
    return comb(n // 2, k // 2)


def main(cfg: TableConfig) -> None:
    G = parse_group(f"Z{cfg.n}")
    Q = build_quiver(G, parse_ram(G, "g"))
    H = PathHopfAlgebra(Q, cyclic_bicharacter(G, -1))

    def p(i, l):
        return Path((i,), (((1,), 1),) * l)

    total = naive_ok = closed_ok = 0
    print(f"{'i':>2} {'l':>2} {'j':>2} {'m':>2} {'exact':>6} {'naive':>6} {'closed':>6}")
    for i in range(cfg.n):
        for j in range(cfg.n):
            for l in range(cfg.max_len + 1):
                for m in range(cfg.max_len + 1 - l):
                    prod = H.basis_product(p(i, l), p(j, m))
                    exact = prod.get(p((i + j) % cfg.n, l + m), 0)
                    naive = 0 if l % 2 and m % 2 else (-1) ** (i * m)
                    closed = (-1) ** (j * l) * gauss_binom_minus_one(l + m, l)
                    total += 1
                    naive_ok += exact == naive
                    closed_ok += exact == closed
                    if cfg.only_mismatches and exact == naive:
                        continue
                    print(f"{i:>2} {l:>2} {j:>2} {m:>2} {str(exact):>6} {naive:>6} {closed:>6}")
    print(f"\n{total} products; naive form matches {naive_ok}, closed form matches {closed_ok}")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=4)
    ap.add_argument("--max-len", type=int, default=5)
    ap.add_argument("--only-mismatches", action="store_true")
    a = ap.parse_args()
    main(TableConfig(a.n, a.max_len, a.only_mismatches))
