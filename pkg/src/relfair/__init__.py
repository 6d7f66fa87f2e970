"""Exact bargaining rules on comprehensive problems and an axiom-checking harness.

Problems are finite unions of boxes ``[0, g]``. Rules choose utility
vectors by maximizing normalized welfare; the harness searches for
axiom violations on seeded random instances, and a grid oracle
cross-checks the exact solver.
"""
from ._rat import BACKEND, Rat, as_rat, fmt_rat, parse_rat
from .axioms import (
    RELATIVE_FAIR_AXIOMS,
    AxiomId,
    Instance,
    SequenceSpec,
    Verdict,
    check_axiom,
    check_hammond_instance,
    check_separability_instance,
    continuity_probe,
)
from .errors import *  # noqa: F401,F403
from .geometry import (
    Problem,
    contains,
    hausdorff_upper,
    ideal_point,
    is_equal_able,
    is_strong_pareto,
    is_symmetric,
    is_weak_pareto,
    make_problem,
    permute,
    scale,
    scmp_hull,
    translate_cmp,
)
from .oracle import GridSpec, compare_oracle, oracle_solve
from .revealed import check_ordering_properties, equal_equivalent, prefers, revealed_relation
from .rules import (
    ChoiceSet,
    Rule,
    dictator,
    egalitarian,
    evaluate,
    in_choice_set,
    ks,
    leximin,
    mean_norm,
    mean_sd,
    minmax_blend,
    monotonicity_witness,
    nash,
    relative_fair,
    relative_max,
    relative_maximin_solve,
    solve,
    weak_pareto_set,
)
from .search import axiom_matrix, generate_instance, search_violation
from .weights import (
    WeightSet,
    blend_weights,
    canonicalize,
    gini_weights,
    make_weight_set,
    min_dot,
    simplex_weights,
    uniform_singleton,
    weight_set_from_norm,
)

__version__ = "0.1.0"
