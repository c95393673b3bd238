"""genalgo - seedable genetic-algorithm engine.

Pluggable selection, crossover and mutation operators, permutation (TSP) and
target-string encodings, and an exhaustive oracle for small tour instances.
"""

__version__ = "1.0.0"
