"""Latin hypercube sampling and "LHS in LHS" expansion of existing designs."""

from .core import SampleSet, ValidationError, bin_index, bin_indices, validate
from .degree import (
    FIT_A,
    FIT_B,
    FIT_C,
    OccupancyProfile,
    degree,
    fitted_degree,
    fitted_degree_general,
    occupancy,
    predicted_degree,
)
from .discrepancy import centered_l2, centered_l2_squared, geometric
from .expansion import (
    ExpansionConfig,
    ExpansionResult,
    Optimize,
    expand,
    expand_unitary,
    inner_lhs,
    optimal_expansion,
    regrid,
    select_voids,
)
from .rng import RngStream
from .sampler import sample_lhs

__version__ = "0.1.0"

__all__ = [
    "FIT_A", "FIT_B", "FIT_C",
    "ExpansionConfig", "ExpansionResult", "OccupancyProfile", "Optimize",
    "RngStream", "SampleSet", "ValidationError",
    "bin_index", "bin_indices", "centered_l2", "centered_l2_squared", "degree",
    "expand", "expand_unitary", "fitted_degree", "fitted_degree_general",
    "geometric", "inner_lhs", "occupancy", "optimal_expansion",
    "predicted_degree", "regrid", "sample_lhs", "select_voids", "validate",
]
