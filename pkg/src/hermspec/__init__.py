"""Hermitian adjacency matrices of digraphs and mixed multigraphs.

Construction of N^alpha and the second-kind matrix M = N^omega, a
self-contained complex Jacobi eigensolver, spectral bound reports, and
brute-force oracles for validating all of it.
"""

from .analysis import (
    DegreeBoundReport,
    EtaCounts,
    IndependenceBoundResult,
    RadiusReport,
    best_independence_upper_bound,
    bipartite_symmetry_check,
    check_interlacing,
    degree_bound_report,
    eta_counts,
    independence_bound_check,
    interlacing_margin,
    is_spectrum_symmetric,
    radius_bound_factor,
    radius_bound_report,
    spectral_radius,
)
from .digraph import (
    Bipartition,
    Digraph,
    EdgeListError,
    cartesian_product,
    circulant,
    digraph_digest,
    directed_cycle,
    directed_path,
    load_edge_list,
    new_digraph,
    parse_edge_list,
    random_bipartite_digraph,
    random_digraph,
    random_mixed_graph,
    save_edge_list,
    serialize_edge_list,
)
from .eigen import (
    CharPoly,
    EigenDecomposition,
    JacobiConvergenceError,
    Spectrum,
    batch_char_poly,
    batch_spectra,
    char_poly,
    hermitian_eigen,
    jacobi_eigh_batch,
    spectrum,
    zero_tolerance,
)
from .hermitian import (
    ALPHA_I,
    ALPHA_ONE,
    DEFAULT_ALPHA_GRID,
    OMEGA,
    AlphaParam,
    HermitianMatrix,
    QuadFormDecomp,
    build_matrix,
    build_second_kind,
    parse_alpha,
    quad_form_decomposition,
    quadratic_form,
)
from .oracle import (
    BudgetExceeded,
    CirculantScanReport,
    WalkWeight,
    charpoly_search,
    circulant_target_scan,
    enumerate_digraphs,
    max_independent_set,
    walk_weight_sum,
    walk_weight_table,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHA_I",
    "ALPHA_ONE",
    "AlphaParam",
    "Bipartition",
    "BudgetExceeded",
    "CharPoly",
    "CirculantScanReport",
    "DEFAULT_ALPHA_GRID",
    "DegreeBoundReport",
    "Digraph",
    "EdgeListError",
    "EigenDecomposition",
    "EtaCounts",
    "HermitianMatrix",
    "IndependenceBoundResult",
    "JacobiConvergenceError",
    "OMEGA",
    "QuadFormDecomp",
    "RadiusReport",
    "Spectrum",
    "WalkWeight",
    "batch_char_poly",
    "batch_spectra",
    "best_independence_upper_bound",
    "bipartite_symmetry_check",
    "build_matrix",
    "build_second_kind",
    "cartesian_product",
    "char_poly",
    "charpoly_search",
    "check_interlacing",
    "circulant",
    "circulant_target_scan",
    "degree_bound_report",
    "digraph_digest",
    "directed_cycle",
    "directed_path",
    "enumerate_digraphs",
    "eta_counts",
    "hermitian_eigen",
    "independence_bound_check",
    "interlacing_margin",
    "is_spectrum_symmetric",
    "jacobi_eigh_batch",
    "load_edge_list",
    "max_independent_set",
    "new_digraph",
    "parse_alpha",
    "parse_edge_list",
    "quad_form_decomposition",
    "quadratic_form",
    "radius_bound_factor",
    "radius_bound_report",
    "random_bipartite_digraph",
    "random_digraph",
    "random_mixed_graph",
    "save_edge_list",
    "serialize_edge_list",
    "spectral_radius",
    "spectrum",
    "walk_weight_sum",
    "walk_weight_table",
    "zero_tolerance",
]
