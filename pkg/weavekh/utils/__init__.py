"""Submodule with small helpers shared by the weavekh modules."""

from weavekh.utils.union_find import UnionFind
from weavekh.utils.count_loops import count_loops
from weavekh.utils.log_ratio import log_ratio
from weavekh.utils.format_scientific import format_scientific, describe_integer, abbreviate_integer
from weavekh.utils.get_threads import get_threads, THREADS_VARIABLE
from weavekh.utils.save_table import save_table, save_text, render_table


__all__ = [
    "UnionFind",
    "count_loops",
    "log_ratio",
    "format_scientific",
    "describe_integer",
    "abbreviate_integer",
    "get_threads",
    "THREADS_VARIABLE",
    "save_table",
    "save_text",
    "render_table",
]
