"""Exact calculator for divisor and curve classes on symmetric powers of a curve.

The package computes in the subring of cohomology of C_d generated by the
two tautological divisor classes x and theta, with arbitrary-precision
rational coefficients throughout: named geometric classes (subordinate
loci, diagonals, moving-divisor loci, push-pull images, coherent-system
determinants), their intersection numbers, two-ray effective-cone
arithmetic, and a dual-path verification suite over genus sweeps.
"""

from ._version import __version__
from .nsring import (
    Ambient,
    NSClass,
    canonical_class,
    eval_top,
    format_class,
    format_rational,
    pair,
)
from .catalog import (
    KernelBundleData,
    LinearSeries,
    SystemData,
    binom,
    brill_noether_rho,
    c1d_class,
    chern_character,
    diagonal_class,
    dm_class,
    kernel_twist_h1,
    mult_degeneracy_class,
    pushpull,
    subordinate_class,
    system_c1,
    twisted_kernel_class,
)
from .conelab import (
    BoundEntry,
    BoundStatus,
    Cone2D,
    ConeRay,
    CurveClass,
    bounds_from_json,
    bounds_to_json,
    contains,
    full_catalog,
    general_effective_cone_gm2,
    known_bounds,
    ray_from_class,
    slope,
)
from .checks import (
    CheckResult,
    Report,
    check_kernel_decomposition,
    check_mult_and_chern,
    check_pencil_pairings,
    check_plane_quintic,
    check_pushpull_closed_form,
    report_csv,
    report_json,
    run_all,
)
