"""Braid groups, string link monoids and their units."""

from .braid import (
    BraidWord,
    Permutation,
    braid_equal,
    braid_inverse,
    generator_endo,
    represent,
    to_string_link,
    underlying_permutation,
)
from .freegroup import EndoMap, FreeWord, apply, compose_endo, concat, endo_equal, invert_word, reduce
from .invariants import LinkDiagram, certifies_not_unknot, jones, kauffman_bracket, writhe
from .laurent import LaurentPoly
from .stringlink import (
    Birth,
    Cross,
    Death,
    SliceDiagram,
    closure,
    compose,
    delete_strands,
    identity,
    is_monotone,
    is_string_link,
    monotonize,
    reflect,
    validate,
)
from .units import NotUnit, Unit, Unknown, decide_unit, reflect_inverse_candidate, verify_inverse

__version__ = "0.1.0"

__all__ = [
    "apply",
    "Birth",
    "braid_equal",
    "braid_inverse",
    "BraidWord",
    "certifies_not_unknot",
    "closure",
    "compose",
    "compose_endo",
    "concat",
    "Cross",
    "Death",
    "decide_unit",
    "delete_strands",
    "endo_equal",
    "EndoMap",
    "FreeWord",
    "generator_endo",
    "identity",
    "invert_word",
    "is_monotone",
    "is_string_link",
    "jones",
    "kauffman_bracket",
    "LaurentPoly",
    "LinkDiagram",
    "monotonize",
    "NotUnit",
    "Permutation",
    "reduce",
    "reduceLinkDiagram",
    "reflect",
    "reflect_inverse_candidate",
    "represent",
    "SliceDiagram",
    "to_string_link",
    "underlying_permutation",
    "Unit",
    "Unknown",
    "validate",
    "verify_inverse",
    "writhe",
    "writheLaurentPoly",
]
