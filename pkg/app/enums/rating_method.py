from enum import Enum

class RatingMethod(str, Enum):
    SCORE = "score"                                      # Row sum s = Ae
    GRS = "grs"                                          # Generalized row sum, direct solve
    GRS_SERIES = "grs-series"                            # Generalized row sum, truncated series
    LEAST_SQUARES_DIRECT = "least-squares-direct"        # (L + J/n) q = s
    LEAST_SQUARES_REDUCED = "least-squares-reduced"      # Leading minor of L, last rating pinned
    LEAST_SQUARES_ITERATIVE = "least-squares-iterative"  # q(k) = q(k-1) + P^k s / d
    POSITIONAL_POWER = "positional-power"                # Digraph nodes, p = T e + T p / a
