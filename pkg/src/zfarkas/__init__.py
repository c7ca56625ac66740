"""Exact integer feasibility for box-constrained systems with Farkas-related columns."""
from .circuits import Circuit, enumerate_circuits, is_support_minimal, iter_circuits
from .errors import (
    BudgetExceeded,
    DimensionError,
    DomainError,
    PreconditionError,
    ZFarkasError,
)
from .exactlin import (
    IntMatrix,
    kernel_basis,
    lattice_certificate,
    lattice_solve,
    rank,
    solve_rational,
)
from .farkas import (
    Decision,
    FeasibilityProblem,
    NotFarkasRelated,
    Verdict,
    block_construct,
    check_point,
    farkas_rhs,
    integer_feasible,
    integer_solve,
    is_farkas_related,
    rational_feasible,
)
from .graphs import (
    Digraph,
    Graph,
    d_indecomposables,
    directed_incidence,
    enumerate_valid_cuts,
    g_indecomposables,
    gale_ryser_feasible,
    gz_indecomposables,
    has_two_edge_disjoint_odd_cycles,
    incidence,
    landau_flow_feasible,
    nonbipartite_feasible,
    orient_with_scores,
    orientation_scores_feasible,
    orientation_system,
    realize_signed_sequence,
    signed_graphical,
    theorem_condition_equivalence,
)
from .indecomp import (
    IndecomposablePoint,
    active_set,
    decompose,
    enumerate_indecomposables,
    is_indecomposable,
)

__version__ = "0.1.0"
