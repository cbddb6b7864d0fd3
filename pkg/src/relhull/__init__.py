"""Relative hulls of linear codes over finite fields.

Compute ``C1 ∩ C2^⊥``, move its dimension with explicit monomial
witnesses, and turn code pairs into entanglement-assisted CSS parameters.
"""

from relhull.cartesian import CartesianGrid, ExponentSet, eval_code
from relhull.codes import LinearCode, MonomialMap, code_from_rows, dual, relative_hull
from relhull.field import FieldElement, FieldSpec, field_new, frobenius, gf
from relhull.hull import hull_dim, reduce_step, reduce_to, set_hull_dim
from relhull.matrix import MatrixGF
from relhull.quantum import CSSParams, css, hermitian

__all__ = [
    "CSSParams",
    "CartesianGrid",
    "ExponentSet",
    "FieldElement",
    "FieldSpec",
    "LinearCode",
    "MatrixGF",
    "MonomialMap",
    "code_from_rows",
    "css",
    "dual",
    "eval_code",
    "field_new",
    "frobenius",
    "gf",
    "hermitian",
    "hull_dim",
    "reduce_step",
    "reduce_to",
    "relative_hull",
    "set_hull_dim",
]

__version__ = "0.1.0"
