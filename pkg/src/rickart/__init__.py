"""Finite rings with involution and their Rickart-type properties."""

from .classify import (ClassificationReport, GrpResult, Verdict, glp, grp,
                       is_generalized_rickart, is_generalized_weakly_rickart, is_rickart, orthogonal_decomposition,
                       parallelogram_law, has_gc, has_orthogonal_gc, has_pc, weakly_proper)
from .annihilators import ann_chain, left_annihilator, projection_generator, right_annihilator
from .constructions import ConstructionSpec, build_ring, unitify
from .errors import (AxiomViolation, BadParameter, CharacteristicMismatch, CrossRingElement, NoUnity,
                     NotAProjection, ParseError, RickartError, TooLarge)
from .parse import parse_spec
from .projections import (central_projections, dominated, enumerate_projections, equivalent, position_p_prime,
                          proj_bound, proj_leq, very_orthogonal)
from .ring import FiniteStarRing, RingElement, arith, center, commutant, corner, find_unity
from .theorems import run_suite

__all__ = [name for name in dir() if not name.startswith("_")]
