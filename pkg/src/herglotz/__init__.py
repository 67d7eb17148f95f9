"""Numerics for Herglotz-Zagier type series, their contour-integral partners,
and the modular relations tying them together."""

from .contour import (
    A_inverse_mellin,
    ContourSpec,
    H_contour,
    J_contour,
    KernelId,
    default_spec,
    kloosterman,
    lemma41_rhs,
    line_integral,
)
from .errors import (
    BudgetExceeded,
    DomainError,
    HerglotzError,
    PoleError,
    PoleTooClose,
    RangeError,
    TruncationUncertified,
)
from .quadreps import (
    A_direct,
    H_divisor_series,
    H_double_integral,
    H_single_integral,
    QuadPlan,
    lemma41_lhs,
    wigert,
)
from .relations import (
    F1_fn,
    F_fn,
    G_fn,
    IdentityId,
    RelationReport,
    all_identities,
    default_grid,
    ramanujan_bracket,
    verify,
    verify_grid,
)
from .series import (
    SeriesPlan,
    herglotz_F,
    phi0,
    phi1,
    phi_log,
    sum_phi0,
    sum_phi0_logn,
    sum_phi0_lognx,
    sum_phi1,
)
from .specfun import (
    DEFAULT_BUDGET,
    EvalResult,
    MathConstants,
    PrecisionBudget,
    bernoulli_even,
    constants,
    digamma,
    dilog,
    divisor_count_sieve,
    hurwitz_zeta,
    log_tail_sum,
    psi1,
    riemann_zeta,
    stieltjes_gamma1,
    stirling_first,
)

__all__ = [
    # errors
    "HerglotzError",
    "DomainError",
    "PoleError",
    "RangeError",
    "BudgetExceeded",
    "PoleTooClose",
    "TruncationUncertified",
    # core types
    "EvalResult",
    "PrecisionBudget",
    "MathConstants",
    "DEFAULT_BUDGET",
    "SeriesPlan",
    "ContourSpec",
    "KernelId",
    "QuadPlan",
    "IdentityId",
    "RelationReport",
    # scalar special functions
    "constants",
    "digamma",
    "psi1",
    "riemann_zeta",
    "hurwitz_zeta",
    "log_tail_sum",
    "dilog",
    "bernoulli_even",
    "stirling_first",
    "divisor_count_sieve",
    "stieltjes_gamma1",
    # series objects
    "phi0",
    "phi1",
    "sum_phi0",
    "sum_phi1",
    "sum_phi0_logn",
    "phi_log",
    "sum_phi0_lognx",
    "herglotz_F",
    # contour integrals
    "line_integral",
    "default_spec",
    "H_contour",
    "J_contour",
    "kloosterman",
    "lemma41_rhs",
    "A_inverse_mellin",
    # real-axis representations
    "H_divisor_series",
    "H_single_integral",
    "H_double_integral",
    "wigert",
    "lemma41_lhs",
    "A_direct",
    # assembled relations
    "G_fn",
    "F_fn",
    "F1_fn",
    "ramanujan_bracket",
    "verify",
    "verify_grid",
    "default_grid",
    "all_identities",
]
