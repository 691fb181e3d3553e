"""Exact Burau-representation and cabling computations on braid groups.

Polynomials in q are dicts mapping exponent strings to rational strings,
matrices are row-major nested lists, braid words are lists of signed ints.
"""

import json as _json

from . import _core
from ._core import (
    SingularMatrix,
    artin_action_is_trivial,
    bigelow_element,
    cable_word,
    commutant_dimension,
    determinant_consistency,
    framing_criterion_holds,
    linking_numbers,
    underlying_permutation,
)

__all__ = [
    "SingularMatrix",
    "acceptance",
    "artin_action_is_trivial",
    "bigelow_element",
    "cable_word",
    "commutant_dimension",
    "decompose",
    "determinant_consistency",
    "eval_word",
    "framing_criterion_holds",
    "kernel_check",
    "linking_numbers",
    "underlying_permutation",
]


def eval_word(rep, n, letters, series_order=None):
    """Image of a braid word under a representation descriptor such as
    "burau", "sym,twist=2" or "sum=[burau;sym]". With series_order the
    entries are h-expansions (lists of coefficient strings)."""
    return _json.loads(_core.eval_json(rep, n, list(letters), series_order or 0))


def decompose(n, r, infinitesimal=False, emit_intertwiner=False):
    """Decomposition report for the r-cabled Burau representation of B_n."""
    return _json.loads(_core.decompose_json(n, r, infinitesimal, emit_intertwiner))


def kernel_check(n, r, letters):
    """Burau-kernel membership of a word and of its r-cabling."""
    return _json.loads(_core.kernel_json(n, r, list(letters)))


def acceptance():
    """Runs the acceptance grid; one dict per criterion."""
    return _json.loads(_core.acceptance_json())
