"""Exact verification engine for Saxl-type tensor-square conjectures.

Everything in this package computes with exact arithmetic: Python integers,
fractions, and cyclotomic field elements.  No floating point enters any
character value, multiplicity, or orbit computation.
"""

__version__ = "0.1.0"
