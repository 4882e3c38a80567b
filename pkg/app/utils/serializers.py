"""
Serializers for consistent result documents.
"""

import csv
import io
import json
from typing import Dict, Optional, Union

from pydantic import BaseModel

from app.core.config import settings
from app.dto.graph_dto import BalancedMultigraph, GraphDiagnostics
from app.dto.problem_dto import RankingProblem
from app.dto.rating_dto import IterationTrace, Ranking, RatingVector
from app.dto.result_dto import (
    CompareDocument, DiagnosticsSummary, RankingSummary, ResultDocument, TraceSummary
)
from app.enums.input_format import INPUT_HEADERS, InputFormat


class ResultSerializer:
    """Serializer for ratings, rankings and diagnostics."""

    @staticmethod
    def round_value(value: float, digits: Optional[int] = None) -> float:
        """Round to significant digits; negative zero becomes zero."""
        digits = settings.SIGNIFICANT_DIGITS if digits is None else digits
        return float(f"{float(value):.{digits}g}") + 0.0

    @staticmethod
    def rounded_map(labels, values) -> Dict[str, float]:
        return {label: ResultSerializer.round_value(v) for label, v in zip(labels, values)}

    @staticmethod
    def rounded_parameters(
        parameters: Dict[str, Union[int, float]]
    ) -> Dict[str, Union[int, float]]:
        """Counts stay integers; real parameters are rounded like ratings."""
        return {
            key: v if isinstance(v, int) else ResultSerializer.round_value(v)
            for key, v in parameters.items()
        }

    @staticmethod
    def ranking_summary(ranking: Ranking) -> RankingSummary:
        return RankingSummary(
            order=str(ranking),
            groups=ranking.groups,
            tie_tolerance=ranking.tie_tolerance,
        )

    @staticmethod
    def diagnostics_summary(diagnostics: GraphDiagnostics,
                            balanced: BalancedMultigraph) -> DiagnosticsSummary:
        rnd = ResultSerializer.round_value
        return DiagnosticsSummary(
            components=diagnostics.components,
            is_connected=diagnostics.is_connected,
            degrees=ResultSerializer.rounded_map(diagnostics.objects, diagnostics.degrees),
            max_degree=rnd(diagnostics.max_degree),
            bipartition=list(map(list, diagnostics.bipartition)) if diagnostics.bipartition else None,
            is_regular=diagnostics.is_regular,
            is_regular_bipartite=diagnostics.is_regular_bipartite,
            is_round_robin=diagnostics.is_round_robin,
            is_unweighted=diagnostics.is_unweighted,
            mu1_estimate=rnd(diagnostics.mu1_estimate),
            mu1_bound=rnd(diagnostics.mu1_bound),
            mu1_at_bound=diagnostics.mu1_at_bound,
            loops=ResultSerializer.rounded_map(balanced.objects, balanced.loops),
        )

    @staticmethod
    def trace_summary(trace: IterationTrace, trace_file: Optional[str] = None) -> TraceSummary:
        return TraceSummary(
            steps=trace.steps,
            converged_at=trace.converged_at,
            ranking_stable_at=trace.ranking_stable_at,
            final_delta=ResultSerializer.round_value(trace.step_deltas[-1]),
            max_degree=ResultSerializer.round_value(trace.max_degree),
            trace_file=trace_file,
        )

    @staticmethod
    def result_document(rating: RatingVector, ranking: Ranking,
                        diagnostics: Optional[DiagnosticsSummary] = None,
                        trace: Optional[TraceSummary] = None) -> ResultDocument:
        return ResultDocument(
            objects=rating.objects,
            method=rating.method.value,
            parameters=ResultSerializer.rounded_parameters(rating.parameters),
            ratings=ResultSerializer.rounded_map(rating.objects, rating.values),
            ranking=ResultSerializer.ranking_summary(ranking),
            diagnostics=diagnostics,
            trace=trace,
        )

    @staticmethod
    def compare_table(document: CompareDocument) -> str:
        """Objects down, methods across; each method's ranking (or error) below the table."""
        header = ["object", *(column.method for column in document.columns)]
        rows = [header]
        for label in document.objects:
            rows.append([label, *(
                f"{column.ratings[label]:.6g}" if column.ratings is not None else "-"
                for column in document.columns
            )])
        widths = [max(len(row[k]) for row in rows) for k in range(len(header))]
        lines = ["  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()
                 for row in rows]
        lines.append("")
        for column in document.columns:
            outcome = column.ranking if column.error is None else f"error: {column.error}"
            lines.append(f"{column.method}: {outcome}")
        return "\n".join(lines) + "\n"

    @staticmethod
    def to_json(document: BaseModel) -> str:
        """Indented JSON in field declaration order."""
        return json.dumps(document.model_dump(mode="json"), indent=2, allow_nan=False) + "\n"


class TraceSerializer:
    """Serializer for iteration traces."""

    @staticmethod
    def to_csv(trace: IterationTrace) -> str:
        """
        One row per iterate: ``step``, one column per object, ``delta``.
        Values are written with repr so they parse back to the same floats.
        """
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["step", *trace.objects, "delta"])
        for k, (iterate, delta) in enumerate(zip(trace.iterates, trace.step_deltas)):
            writer.writerow([k, *(repr(float(v)) for v in iterate), repr(float(delta))])
        return buffer.getvalue()


class ProblemSerializer:
    """Serializer for ranking problems."""

    @staticmethod
    def to_aggregated_csv(problem: RankingProblem) -> str:
        """
        Aggregated dialect, one row per compared pair (i < j).
        Declaration rows lead the file whenever the pair rows alone would lose an object
        or change the object order.
        """
        pairs = [
            (i, j)
            for i in range(problem.n)
            for j in range(i + 1, problem.n)
            if problem.matches[i, j] > 0
        ]
        first_seen: Dict[int, None] = {}
        for i, j in pairs:
            first_seen.setdefault(i)
            first_seen.setdefault(j)

        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(INPUT_HEADERS[InputFormat.AGGREGATED])
        if list(first_seen) != list(range(problem.n)):
            for label in problem.objects:
                writer.writerow([label, "", "", ""])
        for i, j in pairs:
            writer.writerow([
                problem.objects[i],
                problem.objects[j],
                repr(float(problem.results[i, j])),
                repr(float(problem.matches[i, j])),
            ])
        return buffer.getvalue()
