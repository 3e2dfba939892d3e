"""Independent certification of connectivity, Hamiltonicity, perfection and friends."""

from .certificates import (
    PEO,
    Certificate,
    CompleteGraphMarker,
    HamiltonianCycle,
    HoleWitness,
    ImperfectSubgraph,
    OddAntihole,
    OddHole,
    ParityImbalance,
    Separator,
    ToughnessViolation,
)
from .chordal import ChordalVerdict, is_chordal, lex_bfs
from .coloring import chromatic_number, clique_number, is_proper_coloring
from .connectivity import local_connectivity, verify_apex_extension, vertex_connectivity
from .hamiltonian import (
    HamiltonVerdict,
    is_hamiltonian,
    parity_certificate,
    toughness_certificate,
)
from .perfect import PerfectVerdict, find_odd_hole, induced_cycles, is_perfect
from .structure import (
    DensityVerdict,
    ThetaTable,
    ThetaViolation,
    bipartite_one_planar_bound,
    color_double_stellated,
    density_check,
    theta_profile,
)

__all__ = [
    "PEO",
    "Certificate",
    "ChordalVerdict",
    "CompleteGraphMarker",
    "DensityVerdict",
    "HamiltonVerdict",
    "HamiltonianCycle",
    "HoleWitness",
    "ImperfectSubgraph",
    "OddAntihole",
    "OddHole",
    "ParityImbalance",
    "PerfectVerdict",
    "Separator",
    "ThetaTable",
    "ThetaViolation",
    "ToughnessViolation",
    "chromatic_number",
    "clique_number",
    "color_double_stellated",
    "density_check",
    "find_odd_hole",
    "induced_cycles",
    "is_chordal",
    "is_hamiltonian",
    "is_perfect",
    "is_proper_coloring",
    "bipartite_one_planar_bound",
    "lex_bfs",
    "local_connectivity",
    "parity_certificate",
    "theta_profile",
    "toughness_certificate",
    "vertex_connectivity",
    "verify_apex_extension",
]
