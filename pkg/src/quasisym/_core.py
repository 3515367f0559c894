"""Kernel backend selection.

Prefers the compiled extension when it was built; falls back to the pure
Python implementation.  Set QUASISYM_PURE_PYTHON=1 to force the fallback
(results are identical either way, only speed differs).
"""

import os

if os.environ.get("QUASISYM_PURE_PYTHON"):
    from quasisym._core_py import chain_monomials, clear_caches, quasi_shuffle

    BACKEND = "python"
else:
    try:
        from quasisym._core_cy import chain_monomials, clear_caches, quasi_shuffle

        BACKEND = "cython"
    except ImportError:
        from quasisym._core_py import chain_monomials, clear_caches, quasi_shuffle

        BACKEND = "python"

__all__ = ["quasi_shuffle", "chain_monomials", "clear_caches", "BACKEND"]
