"""Homomesy for permutation maps: rotation, Coxeter elements, pair swapping, parity rotation and valley hopping."""

from .arith import format_rational, harmonic, is_prime, lcm_upto
from .formulas import FORMULAS, FormulaError, expected_average, family_of
from .homomesy import (
    HomomesyVerdict,
    OrbitSummary,
    check_homomesy,
    check_linear_combination,
    global_average,
    orbit_average,
)
from .maps import (
    PAIR_SWAP,
    PARITY_ROTATION,
    ROTATION,
    VALLEY_HOPPING,
    MapFamily,
    Orbit,
    OrbitGenerator,
    foata_strehl_toggle,
    orbit_of,
    pair_swap,
    parity_rotate,
    right_multiply,
    rotate,
    togglable_set,
)
from .orbits import OrbitDecomposition, ZetaSet, decompose, pair_sum_multiplicity, zeta
from .perm import (
    Permutation,
    PermutationError,
    ResourceGuardError,
    compose,
    cycle_from_toggle_order,
    enumerate_symmetric_group,
    inverse,
    long_cycle,
    simple_transposition,
)
from .stats import REGISTRY, ROTATION_STATISTICS, evaluate, list_statistics

__version__ = "0.1.0"
