"""Jones polynomials and Khovanov homology ranks of weaving knots."""

from weavekh.__version__ import __version__
from weavekh.laurent import (
    BiLaurentPoly,
    LaurentPoly,
    add,
    eval_float,
    exact_div,
    mul,
    shift,
    substitute_knight,
)
from weavekh.hecke import (
    HeckeCoeffs,
    HeckeElementH3,
    coeffs,
    hecke_mul,
    initial_coeffs,
    iter_coeffs,
    step,
    verify_row,
)
from weavekh.diagram import (
    BraidWord,
    SmoothingStats,
    signature_alternating,
    signature_closed_form,
    smooth_stats,
    weaving_braid,
)
from weavekh.jones import JonesResult, jones_w3, kauffman_oracle, trace_h3
from weavekh.khovanov import (
    KhovanovTable,
    betti_line,
    kh_poly,
    kh_prime,
    khovanov_from_jones,
    khovanov_table,
    total_rank_line,
)
from weavekh.gaussfit import (
    GaussianFit,
    NormalizedBetti,
    density,
    deviations,
    fit_line,
    fit_quadratic,
    normalize,
)
from weavekh.table import build_table
from weavekh.verify import run_checks

__all__ = [
    "__version__",
    "LaurentPoly",
    "BiLaurentPoly",
    "add",
    "mul",
    "shift",
    "exact_div",
    "substitute_knight",
    "eval_float",
    "HeckeCoeffs",
    "HeckeElementH3",
    "initial_coeffs",
    "step",
    "coeffs",
    "iter_coeffs",
    "hecke_mul",
    "verify_row",
    "BraidWord",
    "SmoothingStats",
    "weaving_braid",
    "smooth_stats",
    "signature_alternating",
    "signature_closed_form",
    "JonesResult",
    "trace_h3",
    "jones_w3",
    "kauffman_oracle",
    "KhovanovTable",
    "kh_prime",
    "kh_poly",
    "khovanov_from_jones",
    "khovanov_table",
    "betti_line",
    "total_rank_line",
    "GaussianFit",
    "NormalizedBetti",
    "normalize",
    "fit_quadratic",
    "density",
    "deviations",
    "fit_line",
    "build_table",
    "run_checks",
]
