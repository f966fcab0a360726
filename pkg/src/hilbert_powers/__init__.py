"""Exact Hilbert series and Hilbert coefficients of powers of quadratic ideals."""

from .combinatorics import BinomialBasisPolynomial, binomial, evaluate_basis, lattice_point_count
from .fit import CoefficientFit, conj31_coefficients, fit
from .generic import (GenericIdealSpec, QuadraticForm, hilbert_data_generic, is_power_full,
                      parse_form, phi_probe, power_slice_dim, sample_forms)
from .linalg import BACKEND, PrimeFieldContext, SliceMatrix, rank_with_early_exit
from .monomial_engine import (HilbertData, MonomialIdeal, from_squarefree_set, hilbert_data,
                              interesting_part, power_generators)
from .monomials import Monomial, enumerate_degree, rank_in_degree, unrank_in_degree

__all__ = [
    "BACKEND", "BinomialBasisPolynomial", "CoefficientFit", "GenericIdealSpec", "HilbertData",
    "Monomial", "MonomialIdeal", "PrimeFieldContext", "QuadraticForm", "SliceMatrix",
    "binomial", "conj31_coefficients", "enumerate_degree", "evaluate_basis", "fit",
    "from_squarefree_set", "hilbert_data", "hilbert_data_generic", "interesting_part",
    "is_power_full", "lattice_point_count", "parse_form", "phi_probe", "power_generators",
    "power_slice_dim", "rank_in_degree", "rank_with_early_exit", "sample_forms",
    "unrank_in_degree",
]
