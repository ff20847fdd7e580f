__version__ = "0.1.0"

from .errors import (
    PlanTuranError,
    GuardError,
    FormatError,
    PatternFoundError,
    NotPlanarError,
    BaseConstructionError,
    CertificateError,
    ConstructionError,
    RecipeRangeError,
)
from .graph import Graph, GraphBuilder, PatternSpec, S33, DoubleStarWitness, detect_double_star
from .canon import CanonicalForm, canonical_form
from .planarity import is_planar, check_planarity
from .enumerate import EnumConstraints, EnumStats, enumerate_graphs, enumerate_parallel
from .starblock import build_base, refine_until_bounded, audit
from .degree_class import degree_class_report
from .extremal import ConstructionRecipe, Recipe, construct, search_extremal
from .turan import TuranResult, compute_planar_turan, verify_theorem, verify_corpus_lemmas
from . import log
