"""Confluence, Hopf axioms and graded embedding for a sweep of presentations.

    python scripts/verify_presentations.py --max-order 6
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass

from hopfquiver.bicharacter import enumerate_skew_bicharacters
from hopfquiver.errors import HopfQuiverError
from hopfquiver.groups import parse_group
from hopfquiver.pbw import check_confluence, classify, dimension, gr_embed_check, verify_hopf
from hopfquiver.quiver import parse_ram


@dataclass
class SweepConfig:
    max_order: int = 6
    groups: tuple[str, ...] = ("Z2xZ2", "Z2xZ4")


def main(cfg: SweepConfig) -> None:
    names = [f"Z{n}" for n in range(2, cfg.max_order + 1)] + list(cfg.groups)
    for name in names:
        G = parse_group(name)
        ram = "+".join(G.generator_names())
        accepted = rejected = 0
        t = time.time()
        for B in enumerate_skew_bicharacters(G):
            try:
                P = classify(G, parse_ram(G, ram), B)
            except HopfQuiverError:
                rejected += 1
                continue
            accepted += 1
            ok = check_confluence(P).ok and verify_hopf(P).ok and gr_embed_check(P, 2).ok
            print(f"  {name} exp={[list(r) for r in B.exp_matrix]} dim {dimension(P)} verified {ok}")
        print(f"{name}: {accepted} finite-dimensional, {rejected} rejected [{time.time() - t:.1f}s]")


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-order", type=int, default=6)
    main(SweepConfig(ap.parse_args().max_order))
