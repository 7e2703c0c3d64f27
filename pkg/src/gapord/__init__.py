"""Addition-free ordinal notation systems, gap-embeddability orders on
finite label sequences, and the order-preserving translations between
them, with an exhaustive small-term property harness."""

from .cnf import CnfOrdinal
from .gapseq import GapSequence
from .maps import OmegaTuple
from .pi import PiTerm
from .theta import ThetaTerm
from .btheta import BinThetaTerm
from .veblen import LeveledValue, VeblenTerm

__all__ = [
    "BinThetaTerm",
    "CnfOrdinal",
    "GapSequence",
    "LeveledValue",
    "OmegaTuple",
    "PiTerm",
    "ThetaTerm",
    "VeblenTerm",
]
