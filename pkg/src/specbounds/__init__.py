"""Geometric spectral bounds on finite weighted graphs.

The package computes path metrics, Voronoi decompositions with geodesic
witnesses, Dirichlet eigenvalue bounds from inradius and ball volumes,
large-coupling resolvent convergence rates, low-energy uncertainty
constants, isoperimetric bound chains on combinatorial graphs, and
ground-state transforms for potentials.  Every bound is a theorem: a
failing report row signals an implementation bug.
"""

from .cheeger import (
    EXHAUSTIVE_CAP,
    IsoperimetricData,
    beta_connected_oracle,
    beta_exhaustive,
    beta_voronoi_bound,
    boundary_count,
    cheeger_chain,
    growth_diagnostic,
)
from .errors import (
    ConvergenceFailure,
    DisconnectedGraph,
    DoublingUnverified,
    EmptyCenters,
    EmptyOmega,
    EmptySet,
    FullSet,
    GraphError,
    GraphFormatError,
    InvalidSpec,
    NegativeEdgeWeight,
    NonPositiveMeasure,
    NonSymmetricWeights,
    NonzeroDiagonal,
    NotCombinatorial,
    PreconditionInterval,
    TooLarge,
)
from .generators import (
    DEFAULT_SEED,
    apex_ray,
    complete_graph,
    cycle_graph,
    generate,
    geometric_comb,
    lattice_box,
    normalized,
    path_graph,
    random_connected,
)
from .graph import (
    GeometryConstants,
    WeightedGraph,
    dumps_graph,
    is_combinatorial,
    load_graph,
    loads_graph,
    save_graph,
    validate,
)
from .metric import (
    BallVolumeTable,
    MetricData,
    ball,
    check_homogeneity,
    compute_metric,
    covering_radius,
    geodesic,
    inradius,
    path_length,
)
from .potential import (
    GroundState,
    ground_state,
    ground_state_transform,
    ground_state_transform_check,
    potential_dirichlet_bound,
    verify_doubling,
)
from .report import (
    BoundReport,
    PASS_TOLERANCE,
    Report,
    make_report,
    parse_json,
    render,
    render_csv,
    render_json,
    rows_pass,
)
from .spectral import (
    OperatorMatrix,
    SpectralData,
    SpectralProjection,
    assemble,
    compressed_penalty_matrix,
    coupling_rate,
    coupling_threshold,
    dirichlet_bounds_finite,
    dirichlet_energy,
    dirichlet_lower_bound,
    eigdecompose,
    eigenvalues_of,
    lowest_eigenvalue,
    operator_norm,
    resolvent_gap,
    shifted_norm,
    spectral_projection,
    uncertainty_constant,
)
from .voronoi import VoronoiDecomposition, build_voronoi, verify_voronoi

__version__ = "0.1.0"
