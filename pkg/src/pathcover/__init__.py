"""Path covers of 2-connected cubic graphs.

Covers every vertex of a graph with vertex-disjoint paths; for 2-connected
cubic graphs a cover with at most ceil(n/10) paths always exists. The package
searches for small covers, certifies structural optimality conditions and the
per-path weight bound, computes exact optima at small n, and builds the
extremal families that pin the bound from below.
"""

from ._kernels import PURE_ENV, backend
from .audit import AuditReport, Violation, audit_structure
from .classify import (
    ENDPOINT,
    HEAVY,
    LIGHT,
    NEUTRAL,
    PSEUDO_ENDPOINT,
    WEIGHTY,
    VertexClass,
    classify,
)
from .cover import (
    CoverReport,
    Path,
    PathCover,
    expand_cover,
    is_cyclic_path,
    make_cover,
    spanning_cycle,
    validate_cover,
)
from .discharge import (
    BoundCheck,
    PathWeights,
    WeightLedger,
    check_weight_bound,
    segment_decomposition,
    transfer_weights,
)
from .enumeration import enumerate_cubic
from .errors import *  # noqa: F401,F403
from .exact import (
    ExactResult,
    ham_cycle_exists,
    ham_path_exists,
    min_path_cover_exact,
    parity_lower_bound,
)
from .generators import GadgetMap, k4minus_blowup, petersen, petersen_ring, random_cubic
from .graph import (
    ContractionRecord,
    Graph,
    Net,
    build_graph,
    contract_net,
    find_nets,
    is_biconnected,
)
from .graph6 import decode_graph6, encode_graph6, iter_graph6_lines
from .objective import ObjectiveVector, objective_vector
from .optimizer import (
    ImproveOptions,
    ImproveResult,
    Move,
    Trace,
    enumerate_moves,
    improve,
    initial_cover,
)

__version__ = "0.1.0"
