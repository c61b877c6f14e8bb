"""
Frobenius operators and the F-singularity invariants computed from them.
"""
