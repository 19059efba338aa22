"""Finite lattices, simplicial complexes and their lattices of flats.

The package decides boolean representability of a simplicial complex, decides
whether a finite lattice is the lattice of flats of some complex, and builds
an explicit realizing complex when one exists.
"""

from .complexes import ComplexIso, SimplicialComplex, from_faces
from .errors import (
    AllLoops,
    ConstructionMismatch,
    EmptyRestriction,
    FlatlatError,
    LimitExceeded,
    LoopsPresent,
    NotALattice,
    NotAPartialOrder,
    NotAtomistic,
    ParseError,
    UnknownVertex,
    WrongHeight,
)
from .flats import (
    FlatFamily,
    TransversalWitness,
    all_flats,
    br_violation,
    closure,
    flats_lattice,
    is_boolean_representable,
    is_flat,
    is_transversal_bruteforce,
    simplification,
    transversal_witness,
)
from .formats import (
    Document,
    emit_dot_graph,
    emit_dot_hasse,
    emit_json,
    format_complex,
    format_graph,
    format_lattice,
    parse,
)
from .graphs import (
    SimpleGraph,
    edge_closure,
    find_supercliques,
    is_superclique,
    realizable_height3,
    supercliques_bruteforce,
    top_join_graph,
)
from .lattice import (
    FiniteLattice,
    LatticeIso,
    enumerate_lattices,
    lattice_from_covers,
    validate_lattice,
)
from .realize import (
    RealizabilityReport,
    TransversalComplex,
    boolean_matrix,
    is_chain_transversal_bruteforce,
    is_realizable,
    realizing_complex,
    transversal_complex,
    verify_realizing_complex,
)

__version__ = "0.1.0"

__all__ = [
    "AllLoops",
    "ComplexIso",
    "ConstructionMismatch",
    "Document",
    "EmptyRestriction",
    "FiniteLattice",
    "FlatFamily",
    "FlatlatError",
    "LatticeIso",
    "LimitExceeded",
    "LoopsPresent",
    "NotALattice",
    "NotAPartialOrder",
    "NotAtomistic",
    "ParseError",
    "RealizabilityReport",
    "SimpleGraph",
    "SimplicialComplex",
    "TransversalComplex",
    "TransversalWitness",
    "UnknownVertex",
    "WrongHeight",
    "all_flats",
    "boolean_matrix",
    "br_violation",
    "closure",
    "edge_closure",
    "emit_dot_graph",
    "emit_dot_hasse",
    "emit_json",
    "enumerate_lattices",
    "find_supercliques",
    "flats_lattice",
    "format_complex",
    "format_graph",
    "format_lattice",
    "from_faces",
    "is_boolean_representable",
    "is_chain_transversal_bruteforce",
    "is_flat",
    "is_realizable",
    "is_superclique",
    "is_transversal_bruteforce",
    "lattice_from_covers",
    "parse",
    "realizable_height3",
    "realizing_complex",
    "simplification",
    "supercliques_bruteforce",
    "top_join_graph",
    "transversal_complex",
    "transversal_witness",
    "validate_lattice",
    "verify_realizing_complex",
]
