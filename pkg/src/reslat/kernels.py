"""Backend selection for the table kernels.

The compiled module is used when it was built; otherwise (or when
``RESLAT_PURE_PYTHON`` is set to a non-empty value) the pure-Python twin is
loaded. Both expose the same functions with the same results.
"""

import os

if os.environ.get("RESLAT_PURE_PYTHON"):
    from reslat import _pykernels as _impl
else:
    try:
        from reslat import _ckernels as _impl
    except ImportError:  # extension not built
        from reslat import _pykernels as _impl

BACKEND = _impl.BACKEND
residual_table = _impl.residual_table
find_residuation_violation = _impl.find_residuation_violation
find_associativity_violation = _impl.find_associativity_violation
filter_masks = _impl.filter_masks
search_monoids = _impl.search_monoids

__all__ = [
    "BACKEND",
    "residual_table",
    "find_residuation_violation",
    "find_associativity_violation",
    "filter_masks",
    "search_monoids",
]
