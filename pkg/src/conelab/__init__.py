"""Exact computations with tangent star cones and their flatness over a curve germ."""

from .exactpoly import (GREVLEX, LEX, MonomialOrder, NotDivisibleError, Polynomial, PolyRing,
                        RingMismatchError, divexact, multivariate_gcd, squarefree_decomposition)
from .groebner import (DEFAULT_LIMITS, GroebnerBasis, Ideal, Limits, ResourceLimitExceeded,
                       buchberger, ideal_contains, ideal_equal)
from .ideal_ops import (TestIdeal, TestIdealError, build_test_ideal, colon, dimension,
                        eliminate, height, intersect, saturate, validate_test_ideal)
from .normal_cone import (ConePresentation, FiberComparison, InconsistentFiberError,
                          cone_fiber_compare, hypersurface_cone, hypersurface_ts_generators,
                          initial_form_ideal, polarize, rees_normal_cone, tangent_star_ideal)
from .flatness import (FlatnessReport, MissingParameterError, has_no_embedded_components,
                       is_flat_over_germ, is_internally_flat, unmixed_part, witness_is_valid)
from .segre0 import (CoalescenceReport, CycleClass, DegenerateFamilyError, coalescence_check,
                     s0_specializes, s0_tangent_star)
from .resolution import (CMReport, FreeResolution, free_resolution, is_cohen_macaulay,
                         minimize, projective_dimension, schreyer_resolution, syzygies)
from .parser import ParseError, SessionScript, parse, parse_poly, parse_poly_list

__version__ = "0.1.0"
