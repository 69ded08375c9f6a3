"""Hypercomplex algebras, their d-bar operators and Cauchy-Riemann systems."""

from .algebra import (
    PRESET_NAMES,
    AlgebraDescriptor,
    Element,
    bc_dc_isomorphism,
    conjugate,
    cyclic_algebra,
    inverse,
    is_zero_divisor,
    minkowski_intervals,
    mul,
    preset,
    scalar_product_h4,
    tower_algebra,
)
from .cr_derive import derive_cr, golden_compare, second_order_consequences
from .errors import HypercxError
from .expr import evaluate, parse, pretty
from .jets import partials, seed
from .matrix_rep import apostolova_residual, det_bounds_check, det_h, represent
from .operators import SamplingSpec, apply, dbar, holomorphy_check, laplacian
from .special import exp_series

__version__ = "0.1.0"
