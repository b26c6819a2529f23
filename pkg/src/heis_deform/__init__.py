"""Deformations of the discrete Heisenberg group acting on the Heisenberg group from both sides."""
from .heis import HeisPoint, LieVector
from .homs import GammaWord, HeisHom
from .oracle import Box, ProbeReport
from .parametrize import CanonicalCoords, ParamPoint, UVPair
from .properness import HomPair, ProperVerdict

__all__ = [
    "Box",
    "CanonicalCoords",
    "GammaWord",
    "HeisHom",
    "HeisPoint",
    "HomPair",
    "LieVector",
    "ParamPoint",
    "ProbeReport",
    "ProperVerdict",
    "UVPair",
]

__version__ = "0.1.0"
