"""Graded Hopf algebras on path coalgebras of Hopf quivers, R-forms and PBW presentations."""

__version__ = "0.1.0"

from .bicharacter import Bicharacter, enumerate_skew_bicharacters  # noqa: E402
from .groups import AbelianGroup, parse_group  # noqa: E402
from .path_hopf import PathHopfAlgebra  # noqa: E402
from .quiver import HopfQuiver, Path, build_quiver, parse_ram  # noqa: E402
from .scalar import CycScalar, ParamScalar  # noqa: E402

__all__ = [
    "AbelianGroup",
    "Bicharacter",
    "CycScalar",
    "HopfQuiver",
    "ParamScalar",
    "Path",
    "PathHopfAlgebra",
    "build_quiver",
    "enumerate_skew_bicharacters",
    "parse_group",
    "parse_ram",
]
