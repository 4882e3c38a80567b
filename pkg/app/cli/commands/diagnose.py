import argparse

from app.cli import deps
from app.dto.result_dto import DiagnosticsDocument
from app.services.graph_service import GraphService
from app.utils.serializers import ResultSerializer


def register(subparsers, parent: argparse.ArgumentParser) -> None:
    parser = subparsers.add_parser(
        "diagnose", parents=[parent],
        help="report components, degrees, bipartition, regularity and the spectral estimate",
    )
    parser.set_defaults(handler=run)


def run(args: argparse.Namespace) -> str:
    problem = deps.load_problem(args)
    summary = ResultSerializer.diagnostics_summary(
        GraphService.analyze(problem), GraphService.balanced_multigraph(problem)
    )
    return ResultSerializer.to_json(DiagnosticsDocument(objects=problem.objects, diagnostics=summary))
