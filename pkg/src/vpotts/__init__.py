"""Exact computation of the V-polynomial of vertex- and edge-weighted graphs
and of Potts model partition functions in an external field, with five
mutually cross-checking expansion routes."""

from .algebra import (
    THETA,
    TUTTE_X,
    TUTTE_Y,
    ExactComplex,
    FieldWeight,
    FormalWeight,
    SparsePolynomial,
    coefficient_of,
    evaluate,
    gamma_var,
    poly_add,
    poly_mul,
    weight_add,
    weight_var,
)
from .document import graph_to_document, parse_graph
from .enumeration import (
    ActivitySets,
    classify_activities,
    connected_partitions,
    spanning_forests,
    spanning_trees,
)
from .errors import (
    CapacityError,
    EvaluationError,
    InputError,
    LoopContractionError,
    ParseError,
    SingularInputError,
)
from .graph import Edge, WeightedGraph
from .potts import (
    PottsParams,
    check_potts_tutte_identity,
    constant_field_expansions,
    hamiltonian,
    preferred_spin_expansions,
    rfim_partition,
    z_brute_force,
    z_ext_forest_expansion,
    z_ext_partition_expansion,
    z_ext_tree_expansion,
    z_ext_via_v,
    z_zero,
    z_zero_tree_expansion,
)
from .tutte import tutte_polynomial, zt_q1_connected, zt_subset_sum, zt_traldi
from .vpoly import (
    specialize_x_to_theta,
    v_connected_partition,
    v_deletion_contraction,
    v_spanning_forest,
    v_spanning_tree,
    v_state_sum,
)

__version__ = "0.1.0"
