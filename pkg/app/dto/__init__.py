from .problem_dto import RoundMatrix, RoundSet, RankingProblem, Digraph, Violation, default_labels
from .rating_dto import RatingVector, Ranking, IterationTrace
from .graph_dto import GraphDiagnostics, BalancedMultigraph
from .result_dto import (
    RankingSummary, DiagnosticsSummary, TraceSummary, ResultDocument,
    DiagnosticsDocument, CompareColumn, CompareDocument
)
