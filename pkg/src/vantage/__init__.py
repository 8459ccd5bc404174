"""Exact counting and enumeration of distance-induced orderings of finite
point sets on the line, in the plane, and on the sphere."""

from .exactnum import (
    CyclotomicField,
    CycloNum,
    QuadExt,
    as_rational,
    cmp_sqrt_sum,
    format_scalar,
    parse_scalar,
)
from .geometry import (
    Ordering,
    PointConfig,
    Weights,
    config_from_text,
    config_to_text,
    count_orderings_1d,
    distinct_midpoints_1d,
    distinct_pairwise_sums,
    ordering_from_vantage,
    ordering_weighted,
    read_config,
    write_config,
)
from .arrangement2d import (
    ArrangementSummary,
    Line,
    a_S,
    bisector_line,
    bisector_lines,
    count_orderings_2d,
    count_regions,
    verify_free,
)
from .formulas import (
    FORMULA_REGISTRY,
    circle_gadget_count,
    free_sum_increment,
    max_orderings,
    min_orderings,
    sphere_max,
    stirling1,
    trapezoid_count,
    velo_bound,
)
from .sphere import (
    GreatCircle,
    SphereSummary,
    count_config,
    count_sphere_regions,
    great_circles,
    plane_to_sphere_count,
)
from .constructions import (
    PLATONIC_NAMES,
    RetryBudgetExhausted,
    concyclic_equal,
    concyclic_equal_sphere,
    deficit_config,
    doubled,
    doubled_free,
    equally_spaced_line,
    free_config,
    free_sum,
    gap_config_1d,
    platonic,
    trapezoid_gadget,
)
from .twovantage import (
    VantagePair,
    contiguity_check,
    is_velo_valid,
    ordering_two_vantage,
    reduce_to_single_1d,
    sample_two_vantage_orderings,
    updown,
)
from .search import (
    SearchRun,
    coverage_report,
    search_achievable,
    store_report,
    verify_witness_store,
    write_witness_store,
)

__version__ = "0.1.0"
