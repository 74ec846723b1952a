"""Flipping-puzzle engine: select a black vertex, flip all its neighbors.

Graphs are an induced path s_1..s_{n-1} plus one extra vertex s_n attached
at a chosen set of path vertices.  The package builds the Pi vector family
and simple basis for such a graph, classifies any configuration's orbit in
closed form, answers reachability in O(n), and cross-checks everything
against an exhaustive brute-force oracle.
"""

from .basis import (
    PiSystem,
    SimpleBasis,
    WeightIndexSets,
    build_delta,
    build_pi_closed,
    build_pi_recursive,
    pi1_size_formula,
    pi_system,
    sn_simple_action,
    sw_of_standard,
    weight_index_sets,
)
from .classify import (
    OrbitInfo,
    OrbitLabel,
    OrbitTable,
    SIDE_U,
    SIDE_UBAR,
    SIDE_WHOLE,
    basis_for,
    classify,
    classify_config,
    max_orbit_weight,
    orbit_count,
    orbit_table,
    reachable,
    weight_class,
)
from .core import (
    CapExceededError,
    ConfigError,
    GraphSpec,
    GraphValidationError,
    IllegalMoveError,
    PuzzleError,
    VertexOutOfRangeError,
    apply_move,
    format_config,
    hamming_weight,
    parse_config,
    parse_graph,
    validate_graph,
)
from .forms import (
    AdjacencyForm,
    adjacency_form,
    bilinear,
    check_ao_bijection,
    check_congruence,
    forms_report,
    quadratic,
    transpose_partition,
    transvection_apply,
)
from .oracle import (
    OrbitPartition,
    SweepReport,
    VerifyReport,
    bfs_partition,
    distance,
    find_witness,
    graphs_for_sweep,
    group_order,
    move_edges,
    oracle_cap,
    partitions_equal,
    sweep,
    verify_graph,
)

__version__ = "0.1.0"
