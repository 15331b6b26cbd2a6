"""
cycinv - invariant rings of cyclic prime-order actions on two variables.

Computes minimal generating invariants, toric presentation kernels and
minimal graded free resolutions, evaluates the closed-form classification
predicates, and cross-checks all of it against brute-force oracles.
"""

__version__ = "1.0.0"
__author__ = "cycinv developers"
