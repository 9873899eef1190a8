"""irtopo: finite topological spaces with one-way paths and homotopies.

A finite space is encoded by its reachability relation (reach(x, y)
holds when y lies in the closure of {x}).  On top of that the package
provides the directed path and homotopy calculus, exact covering
category and dimension, prime spectra as finite spaces, exact-rational
interval models, and an exhaustive verifier that machine-checks the
package's structural claims on every finite space up to a size budget.
"""

from .core import (
    EmptySubspace,
    FiniteSpace,
    IrtopoError,
    NotATopology,
    ReachNotPreorder,
    SearchBudgetExceeded,
    from_open_sets,
    from_reach,
    iter_points,
    mask_of,
    points_of,
    product,
)
from .homotopy import (
    ContinuousMap,
    IrHomotopyCertificate,
    IrPath,
    MapMismatch,
    NoForwardPath,
    NotContinuous,
    compose,
    continuous_maps,
    ir_co,
    ir_homotopic,
    ir_homotopy_equivalent,
    ir_path,
    is_ir_contractible,
    is_ir_path_connected,
    is_partial_order,
    quasiorder,
    reverse_exists,
)
from .category import (
    CoverReport,
    DimensionReport,
    EmptySpace,
    NotACover,
    NotMinimalCover,
    SubcoverNotFound,
    check_prop3,
    check_refinement,
    check_theorem13,
    covering_dimension,
    ir_cat,
    ir_contractible_opens,
    irredundant_covers,
    min_subcover,
)
from .spectra import (
    InvalidModulus,
    NotAPartialOrder,
    SpecSpace,
    check_theorem8,
    factorize,
    spec_from_poset,
    spec_zn,
)
from .intervals import (
    ArityMismatch,
    Ball,
    EmptySet,
    HypothesisFails,
    IntervalDescriptor,
    LeftRayCover,
    OutOfRange,
    ball,
    chain_space,
    check_theorem10,
    d_ir,
    finite_subset_compactness,
    grid_subspace,
)
from .verifier import (
    BudgetExceeded,
    ClaimReport,
    UnknownClaim,
    chain_homotopy_oracle,
    enumerate_spaces,
    run_claim,
    run_suite,
)

__version__ = "0.1.0"
