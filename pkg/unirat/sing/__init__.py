"""
Singular-locus bookkeeping for the branch octic: curves, incidences,
vanishing orders along curves and chart blow-ups.
"""

from .charts import BlowupCharts, ChartTransform, IndependenceError, chart_blowup_linear
from .curves import (
    PARAM_RING,
    TABLE1_POINTS,
    CurveComponent,
    SingularityError,
    curve_by_label,
    curve_catalog,
    incidence_table,
    is_table_point,
    node_check,
    reduction_collisions,
    same_projective_point,
    split_identities,
)
from .multiplicity import (
    LEDGER_CENTERS,
    CurveOrders,
    DegenerateSliceError,
    LedgerError,
    blowup_ledger,
    ledger_chart_check,
    mult_along_curve,
    sample_parameters,
    vanishes_on,
)

__all__ = [
    "BlowupCharts",
    "ChartTransform",
    "CurveComponent",
    "CurveOrders",
    "DegenerateSliceError",
    "IndependenceError",
    "LEDGER_CENTERS",
    "LedgerError",
    "PARAM_RING",
    "SingularityError",
    "TABLE1_POINTS",
    "blowup_ledger",
    "chart_blowup_linear",
    "curve_by_label",
    "curve_catalog",
    "incidence_table",
    "is_table_point",
    "ledger_chart_check",
    "mult_along_curve",
    "node_check",
    "reduction_collisions",
    "same_projective_point",
    "sample_parameters",
    "split_identities",
    "vanishes_on",
]
