"""Enumeration of minimal connected and capacitated vertex covers and dominating sets."""

from .capacitated import (
    Assignment,
    cap_feasible,
    cap_neighborhood,
    enumerate_capacitated,
    enumerate_connected_capacitated_vc,
)
from .connected_ds import cds_neighborhood, enumerate_cds
from .connected_vc import AugmentationBudget, cvc_neighborhood, enumerate_cvc, valid_augmentations
from .graph import (
    CapacityFn,
    ContractViolation,
    Graph,
    Hypergraph,
    InputError,
    ParseError,
    check_basic_property,
    degeneracy_ordering,
    induced_components,
    members,
    parse_capacity,
    parse_graph,
    parse_hypergraph,
    vset,
)
from .minaug import ContractedBipartite, contract, enumerate_cvc_quasipoly, min_filter, min_valid_aug
from .oracle import brute_min_valid_aug, brute_minimal, brute_transversals
from .reductions import build_reduction, project_solution, verify_reduction
from .supergraph import DelayStats, IntegrityError, collect, enumerate_solutions, minimize_monotone

__version__ = "0.1.0"
