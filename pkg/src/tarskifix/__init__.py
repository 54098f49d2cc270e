"""Least fixed points of monotone operators on finite set-generated lattices.

Fixed points are computed as the least closed set of an abstract inductive
definition and cross-checked against brute-force Knaster-Tarski and Kleene
oracles.
"""

from .aid import (
    BoundInfo,
    InductiveDefinition,
    MonotoneMap,
    bar_gamma,
    bound_of,
    c_closure,
    gamma,
    gamma_map,
    is_c_closed,
    is_local,
    is_phi_closed,
    phi_of_gamma,
)
from .dataflow import ControlFlowGraph, DataflowSolution, analyze, rd_aid, worklist_solve
from .engine import (
    StageTrace,
    correspondence,
    enumerate_phi_closed,
    lfp_aid,
    lfp_stages,
    oracle_kleene,
    oracle_tarski,
)
from .errors import (
    BadGenerators,
    CycleDetected,
    NoBottom,
    NotALattice,
    NotCertified,
    NotMonotone,
    ParseError,
    SizeLimitExceeded,
    ValidationError,
)
from .lattice import (
    GenSubset,
    Lattice,
    Presentation,
    build_from_hasse,
    build_standard,
    down,
    join,
    set_presentation,
    validate_generators,
)
from .stdind import StandardInductiveDefinition, embed_std, std_lfp

__version__ = "0.1.0"
