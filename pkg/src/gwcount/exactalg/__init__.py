"""Exact rational, number-field and symmetric-form arithmetic."""

from .linalg import (SymMatrix, congruence_check, congruence_diagonalize, det,
                     diagonalize_with_witness, solve)
from .numberfield import (NFElement, NumberField, Tower, absolute_field, embedding_signs,
                          field_disc, field_norm, field_trace, real_root_count, trace_form_gram)
from .polys import RealRoot, isolate_real_roots
from .rational import Fraction, SquareClass, as_fraction, format_fraction, squarefree_reduce

__all__ = [
    "Fraction", "SquareClass", "as_fraction", "format_fraction", "squarefree_reduce",
    "SymMatrix", "congruence_diagonalize", "diagonalize_with_witness", "congruence_check",
    "det", "solve", "NumberField", "NFElement", "Tower", "absolute_field", "embedding_signs",
    "field_disc", "field_norm", "field_trace", "real_root_count", "trace_form_gram",
    "RealRoot", "isolate_real_roots",
]
