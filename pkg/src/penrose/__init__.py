"""Exact Moore-Penrose inverses of matrices and infinite block operators."""

import sys

# Scalars are exact and unbounded; lift the int <-> str digit limit (3.11+)
if hasattr(sys, "set_int_max_str_digits"):
    sys.set_int_max_str_digits(0)
