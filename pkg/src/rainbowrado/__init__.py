"""Rainbow, Rado and Gallai-Rado numbers of equations over colored [n].

Closed forms live in :mod:`rainbow` and :mod:`gallai_rado`; every one of
them has an independent brute-force counterpart in :mod:`oracle`.
"""

from .colorings import (
    Coloring,
    Witness,
    enumerate_exact_colorings,
    find_monochromatic,
    find_rainbow,
    is_monochromatic,
    is_rainbow,
    make_coloring,
    stirling2,
)
from .eqdsl import (
    Equation,
    EquationKind,
    ParsedEquation,
    affine,
    linear,
    parse,
    parse_equation,
    polynomial,
    render,
    validate,
)
from .equations import (
    Solution,
    SolutionMode,
    eval_f,
    inverse_probe,
    solutions,
    solutions_binary,
    solutions_linear,
)
from .errors import *  # noqa: F401,F403
from .gallai_rado import (
    gr_binary,
    gr_dispatch,
    gr_linear,
    gr_power2,
    lambda_min,
    power_equation,
    rado_nonexistence_check,
    x_min,
)
from .lambda_classes import (
    BlockColoring,
    LambdaClass,
    ResidueColoring,
    block_color,
    canonical_coloring,
    general_term,
    lambda_class,
    lambda_classes,
    structure_check,
)
from .oracle import AvoiderReport, SearchConfig, SearchStats, avoider_search, oracle_gr, oracle_rado, oracle_rb
from .rainbow import MuResult, mu_algorithm2, mu_linear, rb_general, rb_linear
from .verdicts import NotExist, NotExistReason, Unknown, Value, verdict_to_json

__version__ = "0.1.0"
