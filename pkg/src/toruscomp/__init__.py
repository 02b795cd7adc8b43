"""Birational compression of the torus quotient Q(A,B) over finite fields."""

from .birational import (
    CompressedCoset,
    CompressedPgl,
    TorusParams,
    bezout_uv,
    compress_coset,
    compress_coset_retrying,
    compress_pgl,
    decompress,
    decompress_coset,
    make_params,
    reinflate,
    rerandomize,
)
from .errors import *  # noqa: F401,F403
from .ffield import ExtFieldCtx, FieldCtx, find_root, fp_inv, irreducible_gen
from .quotient import coset_eq, cyclotomic_eval, h_membership, norm, orders, tn_membership
from .talgebra import TensorCtx, tensor_ctx_new

__version__ = "0.1.0"
