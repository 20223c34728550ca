"""Exact sigma-irregularity bounds and extremal trees for fixed maximum degree."""

from .certificate import (
    DomainError,
    DualCertificate,
    LpOptimum,
    NotCovered,
    certificate,
    exact_sigma_max,
    format_rational,
    lp_bound,
    lp_optimum,
    penalty,
    sigma_via_decomposition,
    slack,
)
from .constructions import CanonicalForm, canonical_form, is_isomorphic, tt0_opt, tt1_opt
from .enumeration import SearchReport, enumerate_free_trees, residue_scan, search_sigma_max
from .kernels import BACKEND
from .lemmas import LemmaReport, verify_all
from .tree import DegreeProfile, Graph6Error, Tree, TreeError, parse_graph6, profile, sigma, write_graph6

__version__ = "0.1.0"
