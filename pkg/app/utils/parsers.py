"""
CSV parsers for the three input dialects.

Every dialect is identified by its header row. Blank lines are skipped; every other
problem is reported with the 1-based line number (the header is line 1).
"""

import csv
import io
import math
from typing import Dict, Iterator, List, Optional, Tuple

import numpy as np

from app.core.exceptions import (
    ConflictingInputFormat, EmptyProblem, InputFormatError
)
from app.dto.problem_dto import Digraph, RankingProblem, RoundMatrix, RoundSet
from app.enums.input_format import INPUT_HEADERS, InputFormat
from app.managers.validation_manager import ATOL

Row = Tuple[int, List[str]]


def _reader(text: str) -> Tuple[Optional[Tuple[str, ...]], Iterator[Row]]:
    """Header fields (lower-cased) and an iterator of (line number, stripped fields)."""
    reader = csv.reader(io.StringIO(text.lstrip("\ufeff")))
    header = None
    for fields in reader:
        if any(field.strip() for field in fields):
            header = tuple(field.strip().lower() for field in fields)
            break

    def rows() -> Iterator[Row]:
        for fields in reader:
            stripped = [field.strip() for field in fields]
            if any(stripped):
                yield reader.line_num, stripped

    return header, rows()


def _number(value: str, name: str, line: int) -> float:
    try:
        number = float(value)
    except ValueError:
        raise InputFormatError(f"{name} '{value}' is not a number", line)
    if not math.isfinite(number):
        raise InputFormatError(f"{name} must be finite, got '{value}'", line)
    return number


def _expect_fields(fields: List[str], count: int, line: int) -> None:
    if len(fields) != count:
        raise InputFormatError(f"expected {count} fields, got {len(fields)}", line)


class _Labels:
    """Object labels in order of first appearance."""

    def __init__(self):
        self.index: Dict[str, int] = {}

    def get(self, label: str, line: int) -> int:
        if not label:
            raise InputFormatError("object label is empty", line)
        return self.index.setdefault(label, len(self.index))

    @property
    def labels(self) -> List[str]:
        return list(self.index)


def detect_format(text: str, declared: Optional[InputFormat] = None) -> InputFormat:
    """
    Dialect named by the header. A declared dialect must agree with the header.
    """
    header, _ = _reader(text)
    if header is None:
        raise EmptyProblem("input is empty")
    detected = next((fmt for fmt, expected in INPUT_HEADERS.items() if header == expected), None)
    if declared is not None and detected is not None and detected != declared:
        raise ConflictingInputFormat(
            f"--format {declared.value} given but the header is the {detected.value} header"
        )
    if detected is None:
        choices = [declared] if declared is not None else list(INPUT_HEADERS)
        listed = " or ".join("'" + ",".join(INPUT_HEADERS[fmt]) + "'" for fmt in choices)
        raise InputFormatError(f"unrecognized header '{','.join(header)}', expected {listed}", 1)
    return detected


def _body(text: str, fmt: InputFormat) -> Iterator[Row]:
    detect_format(text, fmt)
    _, rows = _reader(text)
    return rows


def parse_rounds_csv(text: str) -> RoundSet:
    """
    Rows ``round,object_i,object_j,result`` with result = r_ij in [0, 1].
    The opposite entry r_ji = 1 - r_ij is filled in; rounds keep their order of appearance.
    """
    labels = _Labels()
    rounds: Dict[str, Dict[Tuple[int, int], float]] = {}
    for line, fields in _body(text, InputFormat.ROUNDS):
        _expect_fields(fields, 4, line)
        round_label, first, second, value = fields
        if not round_label:
            raise InputFormatError("round label is empty", line)
        i, j = labels.get(first, line), labels.get(second, line)
        if i == j:
            raise InputFormatError(f"object '{first}' is compared with itself", line)
        result = _number(value, "result", line)
        if not 0.0 <= result <= 1.0:
            raise InputFormatError(f"result {value} is outside [0, 1]", line)
        outcomes = rounds.setdefault(round_label, {})
        if (i, j) in outcomes or (j, i) in outcomes:
            raise InputFormatError(
                f"pair ({first}, {second}) appears twice in round {round_label}", line
            )
        outcomes[(i, j)] = result

    if not rounds:
        raise EmptyProblem("input has no rounds")
    n = len(labels.index)
    return RoundSet(
        objects=labels.labels,
        rounds=[RoundMatrix.from_outcomes(n, outcomes) for outcomes in rounds.values()],
    )


def parse_aggregated_csv(text: str) -> RankingProblem:
    """
    Rows ``object_i,object_j,a_ij,m_ij``, one per unordered pair.
    A row with empty object_j, a_ij and m_ij only declares object_i.
    """
    labels = _Labels()
    pairs: Dict[Tuple[int, int], Tuple[float, float]] = {}
    for line, fields in _body(text, InputFormat.AGGREGATED):
        _expect_fields(fields, 4, line)
        first, second, a_value, m_value = fields
        i = labels.get(first, line)
        if not second:
            if a_value or m_value:
                raise InputFormatError("a declaration row cannot carry a_ij or m_ij", line)
            continue
        j = labels.get(second, line)
        if i == j:
            raise InputFormatError(f"object '{first}' is compared with itself", line)
        if (i, j) in pairs or (j, i) in pairs:
            raise InputFormatError(f"pair ({first}, {second}) appears twice", line)
        a = _number(a_value, "a_ij", line)
        m = _number(m_value, "m_ij", line)
        if m < 0:
            raise InputFormatError(f"m_ij = {m_value} is negative", line)
        if abs(a) > m + ATOL:
            raise InputFormatError(f"|a_ij| = {abs(a):g} exceeds m_ij = {m:g}", line)
        pairs[(i, j)] = (a, m)

    n = len(labels.index)
    if n == 0:
        raise EmptyProblem("input has no objects")
    results = np.zeros((n, n))
    matches = np.zeros((n, n))
    for (i, j), (a, m) in pairs.items():
        results[i, j], results[j, i] = a, -a
        matches[i, j] = matches[j, i] = m
    return RankingProblem(objects=labels.labels, results=results, matches=matches)


def parse_digraph_csv(text: str) -> Digraph:
    """
    Rows ``source,target`` meaning source dominates target.
    A row with an empty target only declares the source node.
    """
    labels = _Labels()
    edges = set()
    for line, fields in _body(text, InputFormat.DIGRAPH):
        _expect_fields(fields, 2, line)
        source, target = fields
        i = labels.get(source, line)
        if not target:
            continue
        j = labels.get(target, line)
        if i == j:
            raise InputFormatError(f"self-loop at '{source}'", line)
        if (i, j) in edges:
            raise InputFormatError(f"edge {source} -> {target} appears twice", line)
        edges.add((i, j))

    if not labels.index:
        raise EmptyProblem("input has no nodes")
    return Digraph(nodes=labels.labels, edges=frozenset(edges))
