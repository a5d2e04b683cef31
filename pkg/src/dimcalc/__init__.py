"""Exact dimensional analysis: quantity spaces, dimensional models and Pi relations."""

__version__ = "0.1.0"

from .analysis import (
    DimensionalMatrix,
    DimensionalModel,
    PiRelation,
    analyze,
    build_matrix,
    check_homogeneous,
    enumerate_models,
    render_relation,
    solve_model,
)
from .dsl import ProblemFile, check_equation, parse_problem
from .quantity import Quantity, ScalarMode, SpaceSig, q_new
from .units import UnitRegistry, convert, parse_units

__all__ = [
    "DimensionalMatrix",
    "DimensionalModel",
    "PiRelation",
    "ProblemFile",
    "Quantity",
    "ScalarMode",
    "SpaceSig",
    "UnitRegistry",
    "analyze",
    "build_matrix",
    "check_equation",
    "check_homogeneous",
    "convert",
    "enumerate_models",
    "parse_problem",
    "parse_units",
    "q_new",
    "render_relation",
    "solve_model",
]
