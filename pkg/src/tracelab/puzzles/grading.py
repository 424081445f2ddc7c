"""Grade free-text answers against puzzle ground truth."""

from __future__ import annotations

import ast
import enum
import re
from fractions import Fraction
from typing import Optional, Union

from tracelab.puzzles.countdown import CountdownPuzzle, Expression
from tracelab.puzzles.kk import KkPuzzle


class Verdict(enum.Enum):
    CORRECT = "correct"
    INCORRECT = "incorrect"
    UNPARSEABLE = "unparseable"


def grade_answer(puzzle: Union[KkPuzzle, CountdownPuzzle], answer_text: str) -> Verdict:
    if isinstance(puzzle, KkPuzzle):
        return _grade_kk(puzzle, answer_text)
    if isinstance(puzzle, CountdownPuzzle):
        return _grade_countdown(puzzle, answer_text)
    raise TypeError(f"unsupported puzzle type: {type(puzzle).__name__}")


def _grade_kk(puzzle: KkPuzzle, text: str) -> Verdict:
    """Match "NAME is a knight|knave" claims; the last claim per name wins."""
    alternation = "|".join(re.escape(name) for name in puzzle.names)
    pattern = re.compile(
        rf"\b({alternation})\s+is\s+a\s+(knight|knave)\b", re.IGNORECASE
    )
    claims: dict[str, str] = {}
    for match in pattern.finditer(text):
        claims[match.group(1).lower()] = match.group(2).lower()
    if len(claims) < puzzle.n:
        return Verdict.UNPARSEABLE
    for name, is_knight in zip(puzzle.names, puzzle.solution):
        expected = "knight" if is_knight else "knave"
        if claims[name.lower()] != expected:
            return Verdict.INCORRECT
    return Verdict.CORRECT


_EXPR_RUN = re.compile(r"[0-9(][0-9\s+\-*/().=]*")
_HAS_OP = re.compile(r"[+\-*/]")


def _parse_arithmetic(segment: str) -> Optional[tuple[Fraction, list[int]]]:
    """Evaluate an arithmetic segment exactly; returns (value, leaf numbers)."""
    try:
        tree = ast.parse(segment, mode="eval")
    except SyntaxError:
        return None
    leaves: list[int] = []

    def walk(node: ast.AST) -> Fraction:
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.BinOp):
            a = walk(node.left)
            b = walk(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if b == 0:
                    raise ZeroDivisionError
                return a / b
            raise ValueError("operator not allowed")
        if isinstance(node, ast.UnaryOp):
            operand = walk(node.operand)
            if isinstance(node.op, ast.USub):
                return -operand
            if isinstance(node.op, ast.UAdd):
                return operand
            raise ValueError("operator not allowed")
        if isinstance(node, ast.Constant) and isinstance(node.value, int):
            leaves.append(node.value)
            return Fraction(node.value)
        raise ValueError("node not allowed")

    try:
        value = walk(tree)
    except (ValueError, ZeroDivisionError):
        return None
    return value, leaves


def _grade_countdown(puzzle: CountdownPuzzle, text: str) -> Verdict:
    """Grade the last arithmetic expression found in the text.

    Bare numbers do not count as expressions; '='-separated segments are tried
    right to left so "a op b = target" grades its left-hand side.
    """
    normalized = text.replace("×", "*").replace("÷", "/")
    for run in reversed(_EXPR_RUN.findall(normalized)):
        for segment in reversed(run.split("=")):
            segment = segment.strip().rstrip(".").strip()
            if not segment or not _HAS_OP.search(segment):
                continue
            parsed = _parse_arithmetic(segment)
            if parsed is None:
                continue
            value, leaves = parsed
            if sorted(leaves) != sorted(puzzle.numbers):
                return Verdict.INCORRECT
            if value != Fraction(puzzle.target):
                return Verdict.INCORRECT
            return Verdict.CORRECT
    return Verdict.UNPARSEABLE


def verify_witness(puzzle: CountdownPuzzle) -> bool:
    """Exact check that the stored witness uses each number once and hits target."""
    witness: Expression = puzzle.witness
    if sorted(witness.leaves()) != sorted(puzzle.numbers):
        return False
    try:
        return witness.evaluate() == Fraction(puzzle.target)
    except ZeroDivisionError:
        return False
