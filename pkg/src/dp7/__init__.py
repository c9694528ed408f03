"""Exact computations on the del Pezzo threefold F of degree 7.

F is the blow-up of P^3 at a point, embedded in P^8 by h = xi + f.  The
modules cover its Chow ring (:mod:`dp7.chow`), the cohomology of line
bundles (:mod:`dp7.cohomology`), the hyperplane section surface
(:mod:`dp7.surface`), Chern class calculus and Riemann-Roch
(:mod:`dp7.bundle`) and the enumeration of rank 2 aCM cases
(:mod:`dp7.classify`).  :mod:`dp7.batch` runs the Chern calculus over whole
integer parameter grids with numpy.
"""

from .bundle import (
    ChernData,
    Rank2Data,
    chi_hrr,
    chi_rr,
    dual_twist,
    end_bundle_chi,
    invariant_c1c2_hc2,
    positivity_filters,
    rank2,
    twist,
    zero_locus_class,
)
from .chow import F, H, PT, XI, ChowClass, chow_mul, degree, divisor
from .classify import (
    divisor_candidates,
    solve_beta,
    table_a,
    table_b,
    theorem_a_table,
    ulrich_c1_solve,
    ulrich_c2_enumeration,
)
from .cohomology import (
    CohomologyTable,
    LineBundle,
    cohomology_table,
    enumerate_acm_initialized_lines,
)
from .surface import SurfaceDivisor, chi_s, push_to_chow

__version__ = "0.1.0"
