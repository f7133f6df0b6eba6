"""idemkit: idempotent semirings, semiring matrices, path problems and dequantization."""

from __future__ import annotations

from .analysis import (
    AMeasure,
    CyclicGroup,
    DualGrid,
    GridFunction,
    Kernel,
    RealGrid,
    delta,
    idempotent_convolution,
    idempotent_integral,
    idempotent_scalar_product,
    integral_operator_apply,
    integral_wrt_measure,
    kernel_compose,
    legendre_transform,
    measure_of,
)
from .dequant import (
    CauchyProblem,
    HeatSolutionSpec,
    Quadratic,
    SampledHamiltonian,
    burgers_residual,
    deformed_oplus,
    deformed_oplus_min,
    dequantize_value,
    dequantized_heat_field,
    heat_solution_eval,
    hopf_lax_evolve,
    hopf_lax_kernel,
    maslov_semiring,
    second_dequantize,
)
from .errors import (
    AlgebraicFailure,
    ArcMissing,
    CarrierMismatch,
    ClosureUndefined,
    DimensionMismatch,
    GridMismatch,
    GridTooSmall,
    IdemkitError,
    IndexOutOfRange,
    InstanceTooLarge,
    NegativeCycle,
    NegativeInput,
    NonConvexHamiltonian,
    NonNegativeInput,
    NonPositiveH,
    NotIrreducible,
    NotStabilized,
    OrderUndefined,
    ParseError,
    RootUndefined,
    UnsupportedDomain,
    UnsupportedFormat,
    UnsupportedSemiring,
    ValidationError,
)
from .matrix import (
    BellmanProblem,
    EigenPair,
    MatrixSemiring,
    SemiringMatrix,
    SeriesWarning,
    bellman_solve_gauss_seidel,
    bellman_solve_jacobi,
    closure_gauss_jordan,
    closure_iterative,
    eigen_irreducible,
    mat_add,
    mat_mul,
    mat_power,
    max_cycle_mean,
    scalar_product,
    scalar_times,
)
from .paths import (
    Path,
    TerminalPrize,
    WeightedDigraph,
    algebraic_path_solve,
    brute_force_path_oracle,
    dp_optimal_profit,
    exact_arc_paths,
    graph_to_matrix,
    matrix_to_graph,
    path_weight,
    real_inverse,
    shortest_paths,
    widest_paths,
    witness_paths,
)
from .polygon import IntegerPolygon, convex_hull, minkowski_sum
from .semiring import (
    BOOLEAN,
    LOGIC3,
    POLYGON,
    REAL,
    RMAX,
    RMAX_BAR,
    RMIN,
    RMIN_BAR,
    VITERBI,
    AxiomReport,
    Semiring,
    axioms_report,
    get_semiring,
    natural_leq,
    nth_root,
    odot,
    oplus,
    power,
    product_semiring,
    scalar_star,
    shipped_semirings,
)

__version__ = "0.1.0"
