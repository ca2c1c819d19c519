"""Finitely presented groups: presentations, coset enumeration, low-index search."""

from .low_index import (
    LowIndexResult,
    LowIndexSubgroup,
    abelianization,
    complement_exists,
    count_maximal_by_index,
    count_simple_quotients,
    low_index_subgroups,
    quotient_group,
)
from .presentation import Presentation, load_presentation, parse_presentation, parse_word, parse_words
from .todd_coxeter import CosetTable, todd_coxeter

__all__ = [
    "CosetTable",
    "LowIndexResult",
    "LowIndexSubgroup",
    "Presentation",
    "abelianization",
    "complement_exists",
    "count_maximal_by_index",
    "count_simple_quotients",
    "load_presentation",
    "low_index_subgroups",
    "parse_presentation",
    "parse_word",
    "parse_words",
    "quotient_group",
    "todd_coxeter",
]
