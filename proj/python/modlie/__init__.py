"""Exact constructions of faithful completely reducible modules for Lie
algebras over prime fields.

The heavy lifting happens in the compiled extension; this package re-exports
its text-level interface.  Algebras and modules travel as the same
line-oriented text the command line tool reads and writes.
"""

from modlie._core import (
    canonical,
    check_module,
    composition_dims,
    construct,
    corpus_entry,
    corpus_names,
    envelope,
    induced,
    info,
    solve_pmap,
)

__all__ = [
    "canonical",
    "check_module",
    "composition_dims",
    "construct",
    "corpus_entry",
    "corpus_names",
    "envelope",
    "induced",
    "info",
    "solve_pmap",
]

__version__ = "0.1.0"
