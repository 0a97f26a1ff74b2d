"""Exact coefficient arithmetic, polynomials and linear algebra."""
from .field import GF, QQ, Field, format_scalar, scalar
from .linalg import (
    bareiss_det,
    det_multipoly_matrix,
    fraction_free_rank,
    identity,
    mat_det,
    mat_inverse,
    mat_kernel,
    mat_mul,
    mat_rank,
    matrix,
    minors,
    rref,
    shape,
    solve,
    transpose,
)
from .multipoly import MultiPoly, format_multipoly
from .unipoly import (
    UniPoly,
    column_primitive_part,
    format_unipoly,
    gcd_many,
    integer_normalize,
    squarefree_part,
    unipoly_gcd,
    unipoly_gcdex,
)
