"""Partial transposes, their negative eigenvalues, and the states that have many."""

__version__ = "0.1.0"

from .errors import *  # noqa: F401,F403
from .linalg import (  # noqa: E402
    CubicCoeffs,
    EigenSystem,
    cubic_real_roots,
    hermitian_eigensystem,
    hermitian_eigvals,
    two_negative_roots_rule,
)
from .states import (  # noqa: E402
    BipartiteDims,
    DensityMatrix,
    PtSpectrum,
    PureState,
    SchmidtVector,
    negativity,
    partial_transpose,
    pt_spectrum,
    pure_pt_spectrum_closed_form,
    reduced_density,
    schmidt,
)
from .sampling import (  # noqa: E402
    SeedSpec,
    ginibre_mixed,
    haar_pure,
    random_product_state,
)
from .families import (  # noqa: E402
    CyclicFamilyParams,
    ExtremalParams,
    RhoAParams,
    ThreeQutritParams,
    build_cyclic_family,
    build_max_witness,
    build_min_witness,
    build_rho_a,
    build_three_qutrit,
    cubic_factor_coeffs,
    rho_a_spectrum_closed_form,
)
