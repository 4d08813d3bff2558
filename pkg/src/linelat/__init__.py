"""linelat: line-graph lattices, effective edge Hamiltonians, and spectra.

Builders for Euclidean and trivalent tessellation graphs, the incidence
factorizations behind the symmetric/antisymmetric edge Hamiltonians, dense
and Lanczos eigensolvers, Bloch band structures with flat-band detection,
compact-support flat-band eigenstates, and the closed-form gap bounds."""
from ._kernels import BACKEND as KERNEL_BACKEND
from .bloch import (
    BandStructure,
    BlochHamiltonian,
    band_structure,
    bloch_hamiltonian,
    default_hexagonal_path,
    flat_band_census,
    kpath,
    line_graph_lattice,
    torus_flat_band_count,
    uniform_grid,
    verify_band_lifting,
)
from .bounds import (
    GapFitModel,
    GapInterval,
    band_count_bound,
    bipartite_cheeger,
    cheeger_upper_bound,
    effective_gap_above_flat,
    fit_gap_curve,
    is_ramanujan_layout,
    laplacian_gap,
    maximal_gap_intervals,
    nonbipartite_ball_gap_bound,
    odd_k_gap_bound,
    paschke_lower_bound,
    sandwich_bounds,
    subdivision_full_spectrum,
    subdivision_spectrum_map,
)
from .errors import (
    BudgetError,
    ConvergenceError,
    DenseCapError,
    InputError,
    LinelatError,
    ParseError,
)
from .flatband import (
    EdgeState,
    compact_state_a,
    compact_state_s,
    exact_integer_residual,
    face_pair_cycle,
    find_cycle,
    girth,
    verify_eigenstate,
)
from .graphs import (
    Graph,
    OrientedGraph,
    connected_components,
    induced_ball,
    induced_subgraph,
    is_bipartite,
    is_connected,
    random_layout,
    shortest_odd_cycle_length,
)
from .lattices import *  # noqa: F401,F403
from .lattices import __all__ as _lattices_all
from .operators import (
    IncidenceMatrix,
    SparseSymMatrix,
    adjacency,
    effective_hamiltonian,
    flat_band_count_formula,
    incidence_a,
    incidence_s,
    signed_laplacian,
)
from .spectra import (
    DosHistogram,
    ExtremalResult,
    SpectrumResult,
    dense_spectrum,
    dos,
    extremal_eigenvalues,
    flat_band_multiplicity,
    gap_above,
)

__version__ = "0.1.0"
