"""
Exact polynomial algebra over prime fields: rings, parsing, Groebner bases
and the ideal calculus built on them.
"""
