"""Statistics, bijections and generating-function identities on signed permutations."""

from .perm import (
    PixedFactorization,
    SignedPermutation,
    StatProfile,
    SubsetClass,
    bar,
    enumerate_class,
    is_desarrangement,
    ligne_stats,
    pixed_factorization,
    stat_profile,
    validate,
)
from .qalgebra import LaurentPoly, TruncSeries, gauss_multinomial, q_pochhammer
from .weighted import (
    WeightedSignedPermutation,
    enumerate_wsp,
    fdes_pairing,
    fdes_pairing_inverse,
    macmahon_from_word,
    macmahon_to_word,
    validate_wsp,
    wsp_decompose,
    wsp_recompose,
)
from .words import IntWord, WordFamily, enumerate_words

__version__ = "0.1.0"
