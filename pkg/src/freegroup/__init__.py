"""The free group on finitely many generators.

Words are reduced on construction and compared structurally.  ``+``
juxtaposes, ``-`` inverts, ``*`` repeats by an integer and ``^``
conjugates, both on single :class:`Word` objects and elementwise on
:class:`WordVector`.
"""

from .errors import (
    AlphabetError,
    EvaluationError,
    ExponentOverflowError,
    FreeGroupError,
    InvalidSymbolError,
    ParseError,
    RandomSpecError,
    RecyclingError,
)
from .expr import Evaluator, eval_expression
from .random import RandomSpec, random_words, rfree
from .textio import (
    DEFAULT_ALPHABET,
    Alphabet,
    deserialize,
    format_word,
    from_matrix,
    parse_canonical,
    parse_compact,
    serialize,
    to_matrix,
)
from .vector import (
    WordVector,
    abc,
    abelianize_vec,
    alpha,
    commutator_vec,
    equal_vec,
    is_identity_vec,
    word_sum,
    zip_op,
)
from .words import (
    AbelianWord,
    Syllable,
    Word,
    abelianize,
    commutator,
    concat,
    conjugate,
    equal,
    inverse,
    is_identity,
    reduce,
    repeat,
)

__all__ = [name for name in dir() if not name.startswith("_")]
