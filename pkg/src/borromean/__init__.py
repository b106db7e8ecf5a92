"""SL(2,C) characters and twisted Alexander polynomials of the Borromean link."""

from .charvar import (
    CharacterTuple,
    ComponentLabel,
    Representation,
    character_of,
    classify,
    cover_t3,
    realize_X1,
    realize_X2,
    realize_X3,
    realize_X4,
    solve_theta,
)
from .laurent import LaurentPoly3, Mat2L, equal_up_to_unit
from .tap import TapResult, tap_closed, tap_fox
from .words import BORROMEAN, WIRTINGER, FreeWord, GroupRingElem, Presentation, parse_word

__all__ = [
    "BORROMEAN", "WIRTINGER", "CharacterTuple", "ComponentLabel", "FreeWord", "GroupRingElem",
    "LaurentPoly3", "Mat2L", "Presentation", "Representation", "TapResult", "character_of",
    "classify", "cover_t3", "equal_up_to_unit", "parse_word", "realize_X1", "realize_X2",
    "realize_X3", "realize_X4", "solve_theta", "tap_closed", "tap_fox",
]
