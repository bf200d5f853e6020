"""Exact moment sequences, Stieltjes/Jacobi continued fractions and Wall g-parameters."""

from .cfrac import (
    JFraction,
    SFraction,
    contract,
    jfrac_from_series,
    jfrac_shift,
    series_from_jfrac,
    series_from_sfrac,
    sfrac_from_series,
    uncontract,
)
from .errors import (
    AlphaOutOfRange,
    GOutOfRange,
    NonSquareAtom,
    NotJFractionRepresentable,
    NotSFractionRepresentable,
    PatternViolation,
    ReciprocalOfZeroConstantTerm,
    RepresentationError,
    UncontractionBreakdown,
    WallCFError,
)
from .series import (
    DiscreteMeasure,
    PowerSeries,
    aerate,
    binomial_transform,
    even_subsequence,
    moments,
    series_add,
    series_mul,
    series_reciprocal,
    sqrt_aerate_measure,
    translate_measure,
)
from .wall import (
    MomentClass,
    Status,
    Verdict,
    WallParams,
    alpha_from_g,
    classify,
    extract_wall,
    extract_wall_via_proof_path,
    g_from_alpha,
)

__version__ = "0.1.0"
