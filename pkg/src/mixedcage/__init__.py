"""Girth-6 mixed graphs from elliptic semiplanes of type L."""

from .bounds import BoundRow, bound_for, emit_table, reference_table
from .construction import (
    ConstructionParams,
    InvalidQError,
    ParityCase,
    VerificationReport,
    build_H,
    circulant_order,
    circulant_part,
    derive_params,
    standalone_circulant,
    verify_construction,
)
from .field import GF, PrimePower, classify_prime_power, field, find_irreducible
from .geometry import (
    PartId,
    Vertex,
    build_projective_incidence_graph,
    build_semiplane_L,
    label,
    part_of,
)
from .girth import directed_girth, girth_oracle, is_cycle, mixed_girth, shortest_cycle
from .graph import (
    DegreeTriple,
    MixedGraph,
    SimplicityError,
    bipartition_check,
    degree,
    induced_subgraph,
    is_totally_regular,
)

__version__ = "0.1.0"
