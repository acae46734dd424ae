"""Intuitionistic fuzzy parameterized intuitionistic fuzzy soft sets."""

from .core import (
    TOL,
    IFSet,
    IFValue,
    ParameterSpace,
    Universe,
    if_complement,
    if_empty,
    if_equal,
    if_intersection,
    if_subset,
    if_union,
    if_universal,
)
from .decision import DecisionReport, aggregate, decide, display, select
from .errors import (
    ConstraintViolationError,
    DomainError,
    IFError,
    ParseError,
    UniverseMismatchError,
    ValidationError,
)
from .omega import (
    OmegaSet,
    omega_complement,
    omega_empty,
    omega_equal,
    omega_intersection,
    omega_is_x_empty,
    omega_is_x_universal,
    omega_new,
    omega_subset,
    omega_union,
    omega_universal,
    omega_x_empty,
)
from .soft import (
    IFSoftSet,
    PairedIFSoftSet,
    ifss_and_product,
    ifss_complement,
    ifss_empty,
    ifss_equal,
    ifss_intersection,
    ifss_or_product,
    ifss_subset,
    ifss_union,
    ifss_universal,
)

__version__ = "0.1.0"
