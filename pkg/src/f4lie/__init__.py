"""Exact computations in the exceptional Lie algebras f4 and f4*.

Octonions, so(8) triality, the structure constants of f4 and its non-compact
form f4*, restricted roots and Iwasawa data, totally geodesic subspaces of
the octonionic hyperbolic plane and the Lie-algebraic polarity test.  All
arithmetic uses ``fractions.Fraction``.
"""
__version__ = "0.1.0"
