"""Executable Ramsey-number bounds: witnesses, products, and bound inference."""

from .capacity import (
    Graph,
    capacity_lower,
    color_class,
    independence_number,
    independent_set_of_size,
    strong_power,
    strong_product,
)
from .coloring import (
    CliqueWitness,
    EdgeColoring,
    VerificationReport,
    cyclic_coloring,
    find_mono_clique,
    make_coloring,
    verify_witness,
)
from .construct import (
    SumFreePartition,
    abbott_product,
    builtin_params,
    builtin_witness,
    diagonal_product,
    gf16_coloring,
    schur_coloring,
    validate_partition,
)
from .engine import (
    DC,
    DC_STRICT,
    RULES,
    KnowledgeBase,
    best_bounds,
    canonicalize,
    check_dc,
    derive_closure,
    explain,
    r3cf_bound,
    ratio_report,
)

__version__ = "0.1.0"
