"""Turan densities of 2-colored graphs: homomorphisms, classification, exact extremal numbers."""

from .classify import Classification, DensityClass, check_certificate, classify, monochromatic_odd_cycle
from .extremal import ExtremalResult, extremal_number, extremal_table
from .fileio import ParseError, from_dict, parse, serialize, to_dict
from .hom import VertexAssignment, blow_up, contains_copy, find_hom, iter_homs, product, verify_hom
from .model import ColoredGraph, EdgeClass, GraphError, MixedGraph, PatternGraph, density
from .builtins import builtin
from .nonuniform import apex_lift, mixed_colorability_checks, subdivide_2edges, suspend, vertex_link
from .optimize import density_polynomial, maximize_simplex

__version__ = "0.1.0"
