"""polyloc: exact enumeration of local and global minimizers of polynomial
optimization problems via univariate representations of critical sets."""

from ._kernels import BACKEND as KERNEL_BACKEND
from .arith import (MPoly, UPoly, QMatrix, gradient, hessian, determinant,
                    substitute_linear, univ_divmod, parse_mpoly, parse_upoly,
                    format_mpoly, format_upoly)

__version__ = "0.1.0"
__all__ = [
    "KERNEL_BACKEND", "MPoly", "UPoly", "QMatrix", "gradient", "hessian",
    "determinant", "substitute_linear", "univ_divmod", "parse_mpoly",
    "parse_upoly", "format_mpoly", "format_upoly",
]
