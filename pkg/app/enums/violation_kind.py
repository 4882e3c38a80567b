import enum


class ViolationKind(str, enum.Enum):
    SHAPE = "shape"                                  # A or M is not n x n
    NON_FINITE = "non_finite"                        # NaN or infinite entry
    RESULTS_DIAGONAL = "results_diagonal"            # a_ii != 0
    RESULTS_SKEW_SYMMETRY = "results_skew_symmetry"  # a_ji != -a_ij
    MATCHES_DIAGONAL = "matches_diagonal"            # m_ii != 0
    MATCHES_SYMMETRY = "matches_symmetry"            # m_ji != m_ij
    MATCHES_NEGATIVE = "matches_negative"            # m_ij < 0
    RESULTS_EXCEED_MATCHES = "results_exceed_matches"  # |a_ij| > m_ij
