"""Computational homological algebra in weakly exact categories.

Axiom verification, the snake lemma family, cohomology of complexes and
the hom-complex homotopy calculus, over two complete instances: finitely
presented abelian groups and finite pointed sets.
"""

from .core import (AdmissibleFactorization, CategoryInstance, ContractError,
                   DiagramError, LiftError, SESReport, check_short_exact,
                   is_inflation)
from .engine import (SnakeDiagram, SnakeResult, check_long_exact, snake,
                     snake_extended, verify_axioms_exhaustive,
                     verify_axioms_randomized)
from .fgab import (FGAB, FpAbelianGroup, AbMorphism, cyclic_group,
                   format_group, fp_group, free_group, morphism)
from .pointed import POINTED, PointedSetsInstance, pointed_map, pointed_set
from .chains import (AdmissibleComplex, ChainMap, DifferentialObject,
                     Hi_of_complex, cohomology_two_ways, differential_object,
                     exact_triangle, fgab_complex, hom_complex,
                     is_quasi_isomorphism, is_weakly_quasi_isomorphism,
                     kernel_complex, les_of_complexes)

__all__ = [n for n in dir() if not n.startswith("_")]
