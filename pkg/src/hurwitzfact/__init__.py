"""Exact computation of complete sets of Hurwitz-move representatives for
factorizations of SL(2,Z) matrices into conjugates of U = [[1,1],[0,1]].

Such factorizations are the monodromy data of relatively minimal strict
Lefschetz elliptic fibrations over the disk; one representative per
Hurwitz class means at least one fibration per topological type with the
prescribed total monodromy.
"""

from .conjugates import (
    CORE,
    SHORTS,
    Conjugate,
    conjugate_by,
    is_well_jointed,
    joins_well,
    recognize,
)
from .enumeration import (
    CompleteFamily,
    LiftedTuple,
    MatrixCompleteSet,
    complete_family,
    complete_set_for_matrix,
    enumerate_matrix_factorizations,
    extend_state,
    extend_states,
    first_factors,
    materialize,
    well_jointed_factorizations,
    well_jointed_short_factorizations,
)
from .moves import (
    CanonicalForm,
    Factorization,
    apply_moves,
    excess,
    from_words,
    move_left,
    move_right,
    normalize,
    orbit,
    shrink_bad_pair,
)
from .sl2 import (
    I2,
    R,
    S,
    SL2Matrix,
    U,
    decompose_su,
    format_su,
    lift_factorization,
    parse_matrix,
    project,
    su_product,
    word_to_matrix,
)
from .words import (
    IDENTITY,
    Word,
    WordSyntaxError,
    from_core,
    parse_word,
    reduce_letters,
    swap_exponents,
    to_core,
)

__version__ = "0.1.0"
