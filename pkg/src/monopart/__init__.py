"""Covers and partitions of 2-edge-colored graphs by monochromatic components, matchings, cycles and paths."""

from .cover import ComponentCover, alpha_star, component_cover
from .degree_matching import degmatch_split, hamiltonian_cycle
from .errors import (
    CapExceeded,
    GenerationFailed,
    GraphFormatError,
    InternalContradiction,
    InvalidParams,
    MonoPartError,
    PreconditionViolated,
)
from .graph import BLUE, RED, Color, ColoredGraph, CycleSeq, PathSeq, parse_graph, format_graph
from .partition import PartitionPiece, PieceKind, connected_matching_partition, posa_partition
from .perturbed import PerturbedGraph, perturbed_component_cover, perturbed_partition

__version__ = "0.1.0"
