"""Exhaustive point counts on low-degree del Pezzo surfaces over small finite fields."""
from .gf import GF, Element, FieldSpec, field_from_literal
from .wps import P3, P1112, P1123, ProjPoint, WeightSystem, canonicalize, enumerate_points, equivalent
from .families import (BUILTIN_FAMILIES, CUBIC_P3, DP1_CHAR2, DP1_CHAR3, DP1_CLASSIC,
                       DP2_CHAR2, DP2_CLASSIC, FamilySpec, Surface, count_points,
                       reduce_exponents, reduced_family, restrict)
from .smooth import SmoothnessVerdict, is_smooth_up_to, singular_tuples
from .census import (CensusReport, LocusFilter, SearchSpace, merge_reports, phase1_survivors,
                     random_sample_census, run_census, two_phase_census, verify_claim)
from .picard import (PicClass, candidate_fields, exceptional_classes, fiber_count,
                     min_fiber_points, pair, urabe_f, weil_count)

__version__ = "0.1.0"
