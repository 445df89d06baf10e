"""Solve for all R-forms on the standard families and verify each result.

    python scripts/rform_families.py
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from hopfquiver.pbw import PBWAlgebra, c2_presentation, dimension, e_presentation, h_presentation
from hopfquiver.rform import check_coquasi, check_cotriangular, solve_rforms


@dataclass
class FamilyConfig:
    c2: list[int] = field(default_factory=lambda: [2, 4, 6])
    e: list[tuple[int, int]] = field(default_factory=lambda: [(2, 1), (2, 2), (2, 3), (4, 2)])
    h: list[tuple[int, int, int]] = field(default_factory=lambda: [(2, 2, 1), (4, 4, 1)])


def families(cfg: FamilyConfig):
    for n in cfg.c2:
        yield f"C2({n})", c2_presentation(n)
    for n, m in cfg.e:
        yield f"E({n},{m})", e_presentation(n, m)
    for m, n, k in cfg.h:
        yield f"H({m},{n},zeta^{k})", h_presentation(m, n, k)


def main(cfg: FamilyConfig) -> None:
    for name, P in families(cfg):
        t = time.time()
        fam = solve_rforms(P)
        A = PBWAlgebra(P)
        R = fam.rform({v: 1 for v in fam.free})
        coq = check_coquasi(A, R).ok
        cot = check_cotriangular(A, R).ok
        print(f"{name:<14} dim {dimension(P):>3}  free {fam.free or '-'}  "
              f"table {len(fam.table):>3}  coquasi {coq}  cotriangular(all 1) {cot}  [{time.time() - t:.2f}s]")


if __name__ == "__main__":
    main(FamilyConfig())
