"""Exact computations with extensions of the tropical semifield Z_max."""

from .analysis import (
    QuotientSemifield,
    arch_subextension,
    is_archimedean,
    is_convex,
    lower_bound_in_K,
    quotient,
    selectivity,
    upper_bound_in_K,
)
from .archimedeanization import (
    ArchimedeanizationRun,
    archimedeanize,
    build_T,
    check_T_closed,
    find_M,
    unit_index_upper_bound,
)
from .classification import classify, subextensions, unit_index
from .errors import *  # noqa: F401,F403
from .extensions import (
    Embedding,
    Extension,
    make_Fn,
    make_identity,
    make_lex_example,
    make_scaled,
    make_subgroup_extension,
)
from .lattice import INFINITE, IntMatrix, cokernel_order, count_order_dividing, smith_normal_form
from .ordered_groups import Componentwise, Lex, OrderedGroup, RationalWeights, Relation
from .semifield import ZERO, Semifield, Unit, Zero
from .verdict import Outcome, Verdict
