"""Exact bounds and randomized checks for k-regular maps."""

from .bounds import (BoundReport, ExistenceRecord, PieceBound, RegularQuery,
                     TightnessInfo, bound_cited, bound_complex_disjoint,
                     bound_disjoint, bound_product_2regular,
                     handel_disjoint_closed_form, main_theorem_1_closed_form,
                     main_theorem_2_closed_form, projective_3regular_upper,
                     projective_table_matches, upper_existence,
                     upper_existence_piece)
from .bundles import (COMPLEX, REAL, BundleProfile, UnsupportedBundleError,
                      lambda_top)
from .expr import ParseError, parse_expression, parse_manifold, render_query
from .fields import (GF2, QQ, PrimeField, RationalField, digit_sum_base_p,
                     is_prime, lucas_binom_mod_p)
from .grassmann import (CHERN, STIEFEL_WHITNEY, GrassmannPresentation,
                        InconclusiveTruncationError, QuotientElement,
                        YasuiElement, YasuiIntegralModule, YasuiMod2Element,
                        YasuiMod2Module, cached_presentation,
                        chern_height_of_first_class, kappa_case)
from .manifolds import (ComplexProj, DualClassProfile, Euclid, ManifoldSpec,
                        Product, QuatProj, RealProj, Sphere, atoms,
                        cohomology_ring, dual_sw, floor_log2, is_closed,
                        real_dimension, render, top_dual_degree,
                        top_dual_degree_closed_form, total_sw)
from .sampler import (DirectSum, ExampleMap, RegularityReport, SphereOneI,
                      VandermondeMap, Witness, ambient_dim,
                      claimed_regularity, evaluate_rank, float_rank,
                      integer_rank_bareiss, parse_map, rational_rank,
                      render_map, sample_check_regular,
                      vandermonde_determinant, vandermonde_rank_exact)
from .series import (GradedSeries, NonInvertibleError, RingMismatchError,
                     SeriesRing)

__version__ = "0.1.0"
