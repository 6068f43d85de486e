"""Varieties of interleavings between interval-decomposable persistence modules."""
from .hom_analysis import HomLifeSummary, hom_life, interval_distance, single_hom_survives
from .interval_classifier import (
    Progression,
    breakpoints,
    classify,
    predicted_progression,
    progression,
    verify_theorem,
)
from .interval_core import (
    HomWindow,
    IntervalModule,
    PersistenceModule,
    as_rational,
    hom_nonzero,
    hom_window,
    projection_nonzero,
    shift,
    width,
)
from .matching_distance import MatchingResult, match_distance
from .oracle import (
    ScalarAssignment,
    check_interleaving,
    classify_solutions_1x1,
    probe_solutions,
)
from .polynomial import Polynomial, Variable, canonicalize
from .variety_builder import VarietyPresentation, build_variety

__version__ = "0.1.0"
