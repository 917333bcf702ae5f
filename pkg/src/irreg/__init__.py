"""Multiplicative graph irregularity measures, extremal bounds and counterexample hunts."""

from .errors import (ConvergenceError, DomainError, EmptyGraphError, GraphParseError,
                     IrregError, NotConnectedError, UnsupportedSizeError)
from .families import FamilySpec, generate
from .graph import (DegreeStats, Graph, complement, degree_stats, encode_graph6,
                    enumerate_labeled_graphs, parse_edge_list, parse_graph6, radius)
from .spectral import (SpectralResult, adjacency_spectral_radius,
                       signless_laplacian_spectral_radius)
from .measures import (IndexSet, MeasureSet, additive_measures, alpha_ylt, d_star,
                       heterogeneity_indices, multiplicative_measures, nu_from_cv,
                       topological_indices)
from .extremal import (CliqueProfile, PhiResult, chromatic_number, clique_counts,
                       clique_number, phi, phi_lower_chain)
from .registry import InequalityCheck, get_check, registry
from .verifier import CheckResult, HuntReport, evaluate_check, hunt, hunt_many, verify_all

__version__ = "0.1.0"
