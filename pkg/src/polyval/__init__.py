"""Exact arithmetic and checkers for generalized polygons with valuation.

The layers, bottom up:

- ``kernels``: compiled polynomial kernels with a pure-Python fallback.
- ``cyclo``: rational combinations of roots of unity; exact sin/cos of
  rational angles, signs, and radical display forms.
- ``fields``: the rationals and small finite fields as coefficient
  domains with a distinguished automorphism.
- ``hahn``: the series field with rational exponents, its twisted
  (quasifield) multiplication, parsing and printing.
- ``valuedfield``: p-adic and series-field handles exposing valuation,
  uniformizer powers and samplers to the geometry layer.
- ``geometry``: finite incidence geometries, polygon axiom checking,
  chain enumeration, and plane oracles (classical and twisted).
- ``valuation``: weight sequences, the valuation axioms U1-U4, the
  unimodular-minor and affine-difference valuations, discrete rescaling
  and classification, finite and sampled suites.
- ``sequences``: residual-distance sequences, exact slopes, valley
  reduction, the slope-invariance identities, chimney widths, schedules.
- ``cli``: the ``polyval`` command.
"""

from .cyclo import (
    CycloNumber,
    cos_pi_frac,
    cyclotomic_polynomial,
    radical_string,
    sin_pi_frac,
    sqrt2_element,
    sqrt3_element,
)
from .fields import QQ, ExtensionField, PrimeField, finite_field
from .geometry import (
    Chain,
    FiniteGeometry,
    ProjectivePlane,
    TwistedPlane,
    enumerate_chains,
    generate_ordinary_polygon,
    generate_pg2,
    generate_w2,
    girth,
    make_chain,
    verify_gp_axioms,
)
from .hahn import (
    SeriesElement,
    SeriesPoly,
    TwistContext,
    parse_series,
    poly_str,
    series_str,
)
from .kernels import BACKEND, available_backends
from .sequences import (
    FSchedule,
    ResidualSequence,
    case_identity_sweep,
    chimney_width,
    enumerate_residual_sequences,
    find_peaks_valleys,
    integrate_schedule,
    raise_valley,
    reduce_to_standard,
    slope,
    standard_sequence,
    turn_sign,
    verify_case_identity,
)
from .valuation import (
    Valuation,
    WeightSequence,
    affine_valuation,
    check_U1,
    check_U2,
    check_U3,
    check_U4,
    classify_weight_sequence,
    dualize,
    dump_valued_geometry,
    euclidean_weights,
    load_valued_geometry,
    minor_valuation,
    plane_valuation,
    rescale_discrete,
    run_finite_suite,
    run_plane_suite,
    twisted_plane_valuation,
)
from .valuedfield import PadicRationals, SeriesRationals
from .values import INFINITY, is_finite, parse_val, val_str

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Chain",
    "CycloNumber",
    "ExtensionField",
    "FSchedule",
    "FiniteGeometry",
    "INFINITY",
    "PadicRationals",
    "PrimeField",
    "ProjectivePlane",
    "QQ",
    "ResidualSequence",
    "SeriesElement",
    "SeriesPoly",
    "SeriesRationals",
    "TwistContext",
    "TwistedPlane",
    "Valuation",
    "WeightSequence",
    "affine_valuation",
    "available_backends",
    "case_identity_sweep",
    "check_U1",
    "check_U2",
    "check_U3",
    "check_U4",
    "chimney_width",
    "classify_weight_sequence",
    "cos_pi_frac",
    "cyclotomic_polynomial",
    "dualize",
    "dump_valued_geometry",
    "enumerate_chains",
    "enumerate_residual_sequences",
    "euclidean_weights",
    "find_peaks_valleys",
    "finite_field",
    "generate_ordinary_polygon",
    "generate_pg2",
    "generate_w2",
    "girth",
    "integrate_schedule",
    "is_finite",
    "load_valued_geometry",
    "make_chain",
    "minor_valuation",
    "parse_series",
    "parse_val",
    "plane_valuation",
    "poly_str",
    "radical_string",
    "raise_valley",
    "reduce_to_standard",
    "rescale_discrete",
    "run_finite_suite",
    "run_plane_suite",
    "series_str",
    "sin_pi_frac",
    "slope",
    "sqrt2_element",
    "sqrt3_element",
    "standard_sequence",
    "turn_sign",
    "twisted_plane_valuation",
    "val_str",
    "verify_case_identity",
    "verify_gp_axioms",
    "__version__",
]
