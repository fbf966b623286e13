"""Fast graph-signal filtering: Chebyshev and Lanczos approximations of
matrix-function filters g(L)s, with an exact spectral oracle, graph
generators, filterbanks and a benchmark harness."""

__version__ = "0.1.0"

from .errors import GraphFiltError
from .graphs import (
    Graph,
    SparseSymmetricOperator,
    CountingOperator,
    build_graph,
    degree_vector,
    combinatorial_laplacian,
    normalized_laplacian,
    apply_operator,
    estimate_lambda_max,
)
from .generators import erdos_renyi, sensor_graph
from .oracle import (
    Spectrum,
    full_eigendecomposition,
    fourier_transform,
    inverse_fourier_transform,
    exact_filter,
)
from .chebyshev import (
    ChebyshevExpansion,
    chebyshev_coefficients,
    chebyshev_apply,
    chebyshev_uniform_error,
)
from .lanczos import (
    TridiagonalMatrix,
    KrylovBasis,
    LanczosResult,
    IncrementalLanczos,
    lanczos_basis,
    tridiagonal_eigendecomposition,
    lanczos_filter_apply,
    lanczos_filter_adaptive,
)
from .filters import (
    Filter,
    Filterbank,
    itersine_window,
    uniform_translates,
    adapted_translates,
    mexican_hat_bank,
    filterbank_apply,
)
from .bench import (
    BankSpec,
    build_bank,
    make_graph,
    run_filter,
    error_vs_order,
    error_vs_estimate,
    error_vs_p,
    spectrum_histogram,
)

__all__ = [
    "__version__",
    "GraphFiltError",
    "Graph",
    "SparseSymmetricOperator",
    "CountingOperator",
    "build_graph",
    "degree_vector",
    "combinatorial_laplacian",
    "normalized_laplacian",
    "apply_operator",
    "estimate_lambda_max",
    "erdos_renyi",
    "sensor_graph",
    "Spectrum",
    "full_eigendecomposition",
    "fourier_transform",
    "inverse_fourier_transform",
    "exact_filter",
    "ChebyshevExpansion",
    "chebyshev_coefficients",
    "chebyshev_apply",
    "chebyshev_uniform_error",
    "TridiagonalMatrix",
    "KrylovBasis",
    "LanczosResult",
    "IncrementalLanczos",
    "lanczos_basis",
    "tridiagonal_eigendecomposition",
    "lanczos_filter_apply",
    "lanczos_filter_adaptive",
    "Filter",
    "Filterbank",
    "itersine_window",
    "uniform_translates",
    "adapted_translates",
    "mexican_hat_bank",
    "filterbank_apply",
    "BankSpec",
    "build_bank",
    "make_graph",
    "run_filter",
    "error_vs_order",
    "error_vs_estimate",
    "error_vs_p",
    "spectrum_histogram",
]
