"""Exact characteristic functions, scattering data and co-spectrality census for equilateral quantum graphs."""

from .algebra import IntPoly, StructuralError, TrigForm, poly_gcd, trig_canonicalize, trig_equal
from .canon import are_isomorphic, canonical_form, vertex_orbits
from .census import CensusReport, cospectral_classes, fuzzy_ball_family, graph_census, resolve_by_lead, tree_census
from .charfun import (
    char_matrix_oracle,
    disc_char_poly,
    interlaces,
    phi_dirichlet,
    phi_form,
    phi_neumann,
    spectrum_families,
)
from .enumerate import enumerate_connected, enumerate_trees
from .graphs import CombGraph, fixture, fuzzy_ball
from .scattering import (
    JostLaurent,
    ResonanceSet,
    bound_states,
    embedded_eigenvalues,
    jost_form,
    lead_forms,
    resonances,
    s_eval,
)
from .slnumeric import PotentialSample, asymptotic_check, integrate_sc, phi_eval_numeric

__version__ = "0.1.0"

__all__ = [
    "IntPoly",
    "StructuralError",
    "TrigForm",
    "poly_gcd",
    "trig_canonicalize",
    "trig_equal",
    "are_isomorphic",
    "canonical_form",
    "vertex_orbits",
    "CensusReport",
    "cospectral_classes",
    "fuzzy_ball_family",
    "graph_census",
    "resolve_by_lead",
    "tree_census",
    "char_matrix_oracle",
    "disc_char_poly",
    "interlaces",
    "phi_dirichlet",
    "phi_form",
    "phi_neumann",
    "spectrum_families",
    "enumerate_connected",
    "enumerate_trees",
    "CombGraph",
    "fixture",
    "fuzzy_ball",
    "JostLaurent",
    "ResonanceSet",
    "bound_states",
    "embedded_eigenvalues",
    "jost_form",
    "lead_forms",
    "resonances",
    "s_eval",
    "PotentialSample",
    "asymptotic_check",
    "integrate_sc",
    "phi_eval_numeric",
]
