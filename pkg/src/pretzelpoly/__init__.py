"""Kauffman bracket and Alexander-Conway polynomials of pretzel links."""
from ._kernels import BACKEND
from .bracket import (
    BracketResult,
    Method,
    bracket_closed_general,
    bracket_closed_p11n,
    bracket_statesum,
    bracket_tangle_eval,
)
from .conway import conway_closed_p11n, conway_skein_p11n
from .diagram import (
    Diagram,
    KauffmanState,
    PretzelSpec,
    StateClassification,
    build_diagram,
    classify_state_general,
    classify_state_p11n,
    count_circles,
)
from .errors import (
    BudgetExceededError,
    DomainError,
    InvalidSpecError,
    PreconditionError,
    UnsupportedFamilyError,
    UnsupportedParameterError,
)
from .laurent import LaurentPoly, lp_add, lp_mono, lp_mul, lp_substitute_inverse

__version__ = "0.1.0"
