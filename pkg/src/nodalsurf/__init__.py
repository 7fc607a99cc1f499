"""Exact invariants of nodal surfaces in P^3 over prime fields."""

from .poly import (GradedRing, Polynomial, monomial_basis, random_form,
                   substitute, parse_polynomial, format_polynomial)
from .linalg import RowBasis, rref, rank, kernel, member, span_sum, row_basis
from .ideals import (IdealGens, HilbertTable, graded_piece, hilbert_fn,
                     quotient_by_linear, vanishing_ideal_piece,
                     gorenstein_closure, closure_hilbert,
                     finite_base_locus, contains,
                     pullback_gens, parse_ideal_file, format_ideal_file)
from .betti import (BettiAlt, DefectReport, betti_alternating,
                    hilbert_from_betti, length_of, defect,
                    macaulay_gotzmann_check, pullback_betti_check)
from .nodal import (NodalExample, CIDetection, build_example, jacobian_ideal,
                    tangent_dims, alexander_exponent, detect_ci, locus_dims,
                    rational_node_spotcheck, analyze, default_kmax)

__version__ = "0.1.0"
