"""Exact GUE multi-trace moments from ribbon graphs and their large-N asymptotics."""

__version__ = "0.1.0"

from .bipoly import BivariatePolynomial, UnivariatePolynomial
from .chords import ChordDiagram, EnumerationCapExceeded, EnumerationConfig, eta_table
from .moments import (
    IndexMultiset,
    MomentCache,
    expectation,
    finite_n_statistics,
    moment_by_enumeration,
    moment_by_recursion,
    moment_nu,
)
from .ribbon import Permutation, RibbonGraph, contract_edge, dual, invariants

__all__ = [
    "BivariatePolynomial",
    "ChordDiagram",
    "EnumerationCapExceeded",
    "EnumerationConfig",
    "IndexMultiset",
    "MomentCache",
    "Permutation",
    "RibbonGraph",
    "UnivariatePolynomial",
    "contract_edge",
    "dual",
    "eta_table",
    "expectation",
    "finite_n_statistics",
    "invariants",
    "moment_by_enumeration",
    "moment_by_recursion",
    "moment_nu",
]
