"""Puzzle benchmarks: knights-and-knaves logic puzzles and countdown arithmetic."""

from tracelab.puzzles.countdown import (
    CountdownPuzzle,
    Expression,
    gen_countdown,
    solve_countdown,
)
from tracelab.puzzles.grading import Verdict, grade_answer
from tracelab.puzzles.kk import (
    KkPuzzle,
    KkStatement,
    eval_statement,
    gen_kk,
    solve_kk,
)

__all__ = [
    "CountdownPuzzle",
    "Expression",
    "KkPuzzle",
    "KkStatement",
    "Verdict",
    "eval_statement",
    "gen_countdown",
    "gen_kk",
    "grade_answer",
    "solve_countdown",
    "solve_kk",
]
