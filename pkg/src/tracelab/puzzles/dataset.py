"""JSONL emission for generated puzzle sets."""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable, Union

from tracelab.puzzles.countdown import CountdownPuzzle
from tracelab.puzzles.kk import KkPuzzle

Puzzle = Union[KkPuzzle, CountdownPuzzle]


def puzzle_record(puzzle: Puzzle) -> dict:
    """One dataset line: {task, n, seed, prompt, solution, witness?}."""
    if isinstance(puzzle, KkPuzzle):
        return {
            "task": "kk",
            "n": puzzle.n,
            "seed": puzzle.seed,
            "prompt": puzzle.prompt(),
            "solution": puzzle.solution_map(),
        }
    if isinstance(puzzle, CountdownPuzzle):
        return {
            "task": "countdown",
            "n": puzzle.n,
            "seed": puzzle.seed,
            "prompt": puzzle.prompt(),
            "solution": str(puzzle.witness),
            "witness": puzzle.witness.to_json(),
        }
    raise TypeError(f"unsupported puzzle type: {type(puzzle).__name__}")


def dump_record(record: dict) -> str:
    return json.dumps(record, ensure_ascii=False, sort_keys=True, separators=(",", ":"))


def write_puzzles(puzzles: Iterable[Puzzle], path: Union[str, Path]) -> int:
    count = 0
    with open(path, "w", encoding="utf-8", newline="\n") as handle:
        for puzzle in puzzles:
            handle.write(dump_record(puzzle_record(puzzle)) + "\n")
            count += 1
    return count


def read_records(path: Union[str, Path]) -> list[dict]:
    records = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                records.append(json.loads(line))
    return records
