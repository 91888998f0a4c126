"""Fractional Bayes factor variable selection with missing data.

Missing predictor cells cross the boundary as NaN. Selection results are
dicts with keys ``p``, ``log_fbf``, ``post_prob``, ``inclusion`` and
``fraction_b``; model vectors are indexed by bitmask (bit j set means
predictor j is in the model).
"""

from ._fbfmi import (
    impute,
    inject_mcar,
    listwise_delete,
    mi_log_fbf,
    mi_select,
    minimal_fraction,
    model_count,
    mvt_logpdf,
    read_csv,
    select,
)

__all__ = [
    "impute",
    "inject_mcar",
    "listwise_delete",
    "mi_log_fbf",
    "mi_select",
    "minimal_fraction",
    "model_count",
    "mvt_logpdf",
    "read_csv",
    "select",
]

__version__ = "0.1.0"
