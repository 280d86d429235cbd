"""Exact construction of the sa / sl / sy Cayley-Klein Lie algebras over R, C, H
and the omega-parametrized 3x3 square they form."""

from .analysis import (AlgebraDescriptor, Signature, analyze_site, cartan_dimension, character, describe,
                       dimension_formula, identify, is_semisimple, killing_form, signature)
from .generators import (GeneratorLabel, OmegaVector, Series, basis, build_generator,
                         is_antihermitian, is_hermitian, membership_conditions, metric,
                         metric_symplectic, min_generators, parse_label, site_realization)
from .matrix import CKMatrix, commutator, conj_transpose, flatten, mat_mul, re_trace, realify, trace
from .scalar import FieldTag, KElement, k_conj, k_mul, k_real_part
from .span import (LieBasis, RationalSpan, StructureConstants, is_subspace, lie_closure,
                   span_insert, structure_constants)
from .square import MagicSquare, build_square, embed_double, embed_scalar, emit, extended_square

__version__ = "0.1.0"

__all__ = [
    "AlgebraDescriptor",
    "Signature",
    "analyze_site",
    "cartan_dimension",
    "character",
    "describe",
    "dimension_formula",
    "identify",
    "is_semisimple",
    "killing_form",
    "signature",
    "GeneratorLabel",
    "OmegaVector",
    "Series",
    "basis",
    "build_generator",
    "is_antihermitian",
    "is_hermitian",
    "membership_conditions",
    "metric",
    "metric_symplectic",
    "min_generators",
    "parse_label",
    "site_realization",
    "CKMatrix",
    "commutator",
    "conj_transpose",
    "flatten",
    "mat_mul",
    "re_trace",
    "realify",
    "trace",
    "FieldTag",
    "KElement",
    "k_conj",
    "k_mul",
    "k_real_part",
    "LieBasis",
    "RationalSpan",
    "StructureConstants",
    "is_subspace",
    "lie_closure",
    "span_insert",
    "structure_constants",
    "MagicSquare",
    "build_square",
    "embed_double",
    "embed_scalar",
    "emit",
    "extended_square",
]
