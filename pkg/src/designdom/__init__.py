"""Domination in incidence graphs of combinatorial designs."""

from .constructors import (
    DifferenceFamily,
    affine_plane_9,
    builtin,
    cyclic_design,
    cyclic_preset,
    fano,
    fixture_8_4_3,
    projective_plane,
    sts_bose,
)
from .design import Design, DesignClass, DesignParams, classify, complement, derived, double, dual, residual, validate_design
from .graph import IncidenceGraph, VertexSet, build_graph, girth_at_least_6, is_dominating, is_independent

__version__ = "0.1.0"
