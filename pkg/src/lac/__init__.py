"""Exact combinatorics for the four basic selection families.

Lists (ordered, repetition allowed), arrangements (ordered, repetition-free),
combinations (unordered, repetition-free), and permutations (arrangements of
the whole alphabet): closed-form counting on arbitrary-precision integers,
lazy lexicographic enumeration, rank/unrank bijections, and small grid views
whose filled cells mirror the counts.
"""

from .core import Alphabet, Mode, Selection, check_selection
from .counting import (
    count_arrangements,
    count_combinations,
    count_lists,
    count_permutations,
    factorial,
    family_count,
)
from .enumeration import enumerate_selections, rank, unrank
from .errors import (
    CapExceeded,
    InvalidSelection,
    LacError,
    NotRenderable,
    PermutationLengthMismatch,
    RankOutOfRange,
)
from .oracle import oracle_count, oracle_enumerate
from .tensor import (
    DEFAULT_CELL_CAP,
    PLACEHOLDER,
    LacTensor,
    build_tensor,
    matrix_rows,
    render_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "Mode",
    "Selection",
    "check_selection",
    "factorial",
    "count_lists",
    "count_arrangements",
    "count_combinations",
    "count_permutations",
    "family_count",
    "enumerate_selections",
    "rank",
    "unrank",
    "LacTensor",
    "build_tensor",
    "matrix_rows",
    "render_matrix",
    "DEFAULT_CELL_CAP",
    "PLACEHOLDER",
    "oracle_enumerate",
    "oracle_count",
    "LacError",
    "InvalidSelection",
    "RankOutOfRange",
    "CapExceeded",
    "NotRenderable",
    "PermutationLengthMismatch",
]
