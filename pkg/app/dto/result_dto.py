from typing import Dict, List, Optional, Union

from pydantic import BaseModel


# Document DTOs written to standard output. Plain JSON types only.
class RankingSummary(BaseModel):
    order: str                 # "A > C > B = D"
    groups: List[List[str]]
    tie_tolerance: float


class DiagnosticsSummary(BaseModel):
    components: List[List[str]]
    is_connected: bool
    degrees: Dict[str, float]
    max_degree: float
    bipartition: Optional[List[List[str]]] = None
    is_regular: bool
    is_regular_bipartite: bool
    is_round_robin: bool
    is_unweighted: bool
    mu1_estimate: float
    mu1_bound: float
    mu1_at_bound: bool
    loops: Dict[str, float]


class TraceSummary(BaseModel):
    steps: int
    converged_at: Optional[int] = None
    ranking_stable_at: Optional[int] = None
    final_delta: float
    max_degree: float
    trace_file: Optional[str] = None


class ResultDocument(BaseModel):
    objects: List[str]
    method: str
    parameters: Dict[str, Union[int, float]]
    ratings: Dict[str, float]
    ranking: RankingSummary
    diagnostics: Optional[DiagnosticsSummary] = None
    trace: Optional[TraceSummary] = None


class DiagnosticsDocument(BaseModel):
    objects: List[str]
    diagnostics: DiagnosticsSummary


class CompareColumn(BaseModel):
    method: str
    parameters: Dict[str, Union[int, float]] = {}
    ratings: Optional[Dict[str, float]] = None
    ranking: Optional[str] = None
    error: Optional[str] = None


class CompareDocument(BaseModel):
    objects: List[str]
    columns: List[CompareColumn]
    diagnostics: DiagnosticsSummary
