"""Exact F2 chain-operad engine for the spineless-cacti cell complexes.

The package computes with the level-2 cell operad (surjection-style
sequences), its GF(2) homology, a free planar operad resolving that
homology, and the obstruction showing the homotopy equivalence cannot
be made formal. The `verify` console script drives the check suites.
"""
from .gerstenhaber import (GerstMonomial, HClass, class_compose,
                           class_of_chain, class_of_monomial, class_of_text,
                           enumerate_monomials as enumerate_class_monomials,
                           monomial_to_cycle, parse_monomial, reference_basis,
                           verify_gerstenhaber_relations, zero_class)
from .homology import class_of, complex_slice, homologous, poincare_polynomial
from .homology import homology as homology_basis
from .model import (MODEL, FreeChain, GeneratorSymbol, GENERATORS, ModelSpec,
                    enumerate_monomials, evaluate_pi, evaluate_rho,
                    free_chain_from_str, free_zero, generator, graft,
                    model_differential, verify_bigraded_model)
from .obstruction import (GAMMA, Hom0Element, ObstructionCertificate,
                          ObstructionValue, PiAssignment, Y_CYCLE, alpha,
                          default_assignment, hom0_basis,
                          lift_invariance_check, obstruction_verdict,
                          partial_map, pi_dC, run_obstruction_suite,
                          verify_gamma)
from .reports import TOOL_VERSION, CheckReport
from .surjection import (Chain, act, chain, chain_from_str,
                         check_operad_axioms, compose, differential,
                         enumerate_basis, interval_decompositions, is_valid,
                         seq_from_str, seq_to_str, unit, zero)

__version__ = TOOL_VERSION

__all__ = [
    "Chain", "CheckReport", "FreeChain", "GAMMA", "GENERATORS",
    "GeneratorSymbol", "GerstMonomial", "HClass", "Hom0Element", "MODEL",
    "ModelSpec", "ObstructionCertificate", "ObstructionValue", "PiAssignment",
    "TOOL_VERSION", "Y_CYCLE", "act", "alpha", "chain", "chain_from_str",
    "check_operad_axioms", "class_compose", "class_of", "class_of_chain",
    "class_of_monomial", "class_of_text", "complex_slice", "compose",
    "default_assignment", "differential", "enumerate_basis",
    "enumerate_class_monomials", "enumerate_monomials", "evaluate_pi",
    "evaluate_rho", "free_chain_from_str", "free_zero", "generator", "graft",
    "hom0_basis", "homologous", "homology_basis", "interval_decompositions",
    "is_valid", "lift_invariance_check", "model_differential",
    "monomial_to_cycle", "obstruction_verdict", "parse_monomial",
    "partial_map", "pi_dC", "poincare_polynomial", "reference_basis",
    "run_obstruction_suite", "seq_from_str", "seq_to_str", "unit",
    "verify_bigraded_model", "verify_gamma", "verify_gerstenhaber_relations",
    "zero", "zero_class",
]
