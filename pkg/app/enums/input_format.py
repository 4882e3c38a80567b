import enum


class InputFormat(str, enum.Enum):
    ROUNDS = "rounds"
    AGGREGATED = "aggregated"
    DIGRAPH = "digraph"


# CSV header that identifies each dialect
INPUT_HEADERS = {
    InputFormat.ROUNDS: ("round", "object_i", "object_j", "result"),
    InputFormat.AGGREGATED: ("object_i", "object_j", "a_ij", "m_ij"),
    InputFormat.DIGRAPH: ("source", "target"),
}
