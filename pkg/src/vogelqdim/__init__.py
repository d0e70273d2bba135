"""Exact quantum dimensions of Cartan powers from Vogel's universal formula."""
from .exact import LinForm3, Q, Rational, qstr
from .rootsys import (
    RepSpec,
    RootSystem,
    WeightError,
    adjoint_weight,
    build_root_system,
    cartan_power_weights,
    casimir,
    diagram_automorphisms,
    qdim_of_spec,
    weyl_dim,
    weyl_qdim,
    x2_weights,
)
from .sinhprod import (
    IndeterminateTerm,
    SingularTerm,
    SinhError,
    SinhProduct,
    SinhSum,
    TermClass,
    dimension_limit,
    eval_numeric,
    make_term,
)
from .tables import (
    Report,
    Status,
    SweepConfig,
    VerdictRecord,
    expected_rep,
    parse_rep,
    verify_case,
    verify_sweep,
)
from .universal import adjoint_dim, l_terms, s2_sum_rule, universal_casimir, universal_X, y2_dim
from .vogel import (
    LINES,
    AlgebraId,
    LimitCountMismatch,
    LinePath,
    VogelError,
    VogelPoint,
    line_limit,
    line_of,
    parse_algebra,
    permute,
    vogel_point,
)

__version__ = "0.1.0"
