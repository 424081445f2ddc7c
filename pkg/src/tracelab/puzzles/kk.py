"""Knights-and-knaves puzzles: statement formulas, exhaustive solving, generation.

A puzzle has ``n`` inhabitants, each either a knight (always truthful) or a
knave (always lying), and one statement per inhabitant.  An assignment is
consistent when every speaker is a knight exactly if their statement is true.
Generation rejection-samples random statements until exactly one consistent
assignment remains.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from tracelab.errors import GenerationError

# Formulas are nested tuples:
#   ("atom", i)          person i is a knight
#   ("not", f)
#   ("and", f, g), ("or", f, g), ("implies", f, g), ("iff", f, g)
Formula = tuple

_BINARY_OPS = ("and", "or", "implies", "iff")

#: Statement shapes sampled by the generator: a positive literal, a negated
#: literal, and the four binary connectives over two random literals.
TEMPLATES = ("atom", "not", "and", "or", "implies", "iff")

#: 40 English given names; each puzzle samples its cast without replacement.
NAME_POOL = (
    "Penelope", "David", "Zoey", "Elizabeth", "Harper", "Benjamin", "Amelia",
    "Charlotte", "Victoria", "Jack", "Noah", "Daniel", "Owen", "Aria",
    "Olivia", "Lucas", "Joseph", "Aurora", "James", "Samuel", "Jacob",
    "Isabella", "Mia", "Scarlett", "Chloe", "Riley", "Logan", "Emma", "Liam",
    "Sophia", "Mason", "Ava", "Ethan", "Emily", "Michael", "Grace", "Henry",
    "Lily", "William", "Hannah",
)

_ATTRIBUTIONS = (
    '{name} noted, "{stmt}".',
    '{name} told you that "{stmt}".',
    'According to {name}, "{stmt}".',
    '{name} said, "{stmt}".',
    '{name} stated, "{stmt}".',
    '{name} remarked, "{stmt}".',
)

PROMPT_INTRO = (
    "A very special island is inhabited only by knights and knaves. "
    "Knights always tell the truth, and knaves always lie. "
    "You meet {n} inhabitants: {names}."
)
PROMPT_QUESTION = "So who is a knight and who is a knave?"

MAX_SOLVE_N = 20


def formula_depth(formula: Formula) -> int:
    op = formula[0]
    if op == "atom":
        return 0
    return 1 + max(formula_depth(arg) for arg in formula[1:])


def formula_atoms(formula: Formula) -> set[int]:
    op = formula[0]
    if op == "atom":
        return {formula[1]}
    atoms: set[int] = set()
    for arg in formula[1:]:
        atoms |= formula_atoms(arg)
    return atoms


def eval_formula(formula: Formula, assignment: Sequence[bool]) -> bool:
    """Evaluate a formula under an assignment (True = knight)."""
    op = formula[0]
    if op == "atom":
        index = formula[1]
        if not 0 <= index < len(assignment):
            raise IndexError(f"atom references person {index}, have {len(assignment)}")
        return bool(assignment[index])
    if op == "not":
        return not eval_formula(formula[1], assignment)
    a = eval_formula(formula[1], assignment)
    b = eval_formula(formula[2], assignment)
    if op == "and":
        return a and b
    if op == "or":
        return a or b
    if op == "implies":
        return (not a) or b
    if op == "iff":
        return a == b
    raise ValueError(f"unknown connective: {op!r}")


def eval_statement(statement: KkStatement, assignment: Sequence[bool]) -> bool:
    """Truth value of a statement's body; speaker consistency is the caller's rule."""
    return eval_formula(statement.body, assignment)


def _eval_formula_table(formula: Formula, atoms: np.ndarray) -> np.ndarray:
    """Evaluate a formula over every assignment at once.

    ``atoms`` has shape (2^n, n); column i is the knight bit of person i.
    """
    op = formula[0]
    if op == "atom":
        index = formula[1]
        if not 0 <= index < atoms.shape[1]:
            raise IndexError(f"atom references person {index}, have {atoms.shape[1]}")
        return atoms[:, index]
    if op == "not":
        return ~_eval_formula_table(formula[1], atoms)
    a = _eval_formula_table(formula[1], atoms)
    b = _eval_formula_table(formula[2], atoms)
    if op == "and":
        return a & b
    if op == "or":
        return a | b
    if op == "implies":
        return ~a | b
    if op == "iff":
        return a == b
    raise ValueError(f"unknown connective: {op!r}")


def formula_to_json(formula: Formula) -> list:
    op = formula[0]
    if op == "atom":
        return ["atom", formula[1]]
    return [op, *(formula_to_json(arg) for arg in formula[1:])]


def formula_from_json(data: Sequence) -> Formula:
    op = data[0]
    if op == "atom":
        return ("atom", int(data[1]))
    if op == "not":
        return ("not", formula_from_json(data[1]))
    if op in _BINARY_OPS:
        return (op, formula_from_json(data[1]), formula_from_json(data[2]))
    raise ValueError(f"unknown connective: {op!r}")


def formula_to_english(formula: Formula, names: Sequence[str]) -> str:
    op = formula[0]
    if op == "atom":
        return f"{names[formula[1]]} is a knight"
    if op == "not":
        inner = formula[1]
        if inner[0] == "atom":
            return f"{names[inner[1]]} is a knave"
        return f"it is not the case that {formula_to_english(inner, names)}"
    a = formula_to_english(formula[1], names)
    b = formula_to_english(formula[2], names)
    if op == "and":
        return f"{a} and {b}"
    if op == "or":
        return f"{a} or {b}"
    if op == "implies":
        return f"If {a} then {b}"
    if op == "iff":
        return f"{a} if and only if {b}"
    raise ValueError(f"unknown connective: {op!r}")


@dataclass(frozen=True)
class KkStatement:
    """One inhabitant's claim: ``speaker`` asserts ``body``."""

    speaker: int
    body: Formula

    @property
    def depth(self) -> int:
        return formula_depth(self.body)

    def to_json(self) -> list:
        return [self.speaker, formula_to_json(self.body)]

    @classmethod
    def from_json(cls, data: Sequence) -> "KkStatement":
        return cls(speaker=int(data[0]), body=formula_from_json(data[1]))


@dataclass(frozen=True)
class KkGenConfig:
    max_depth: int = 2
    name_pool: tuple[str, ...] = NAME_POOL
    attempt_budget: int = 10_000


def _name_list(names: Sequence[str]) -> str:
    if len(names) == 1:
        return names[0]
    if len(names) == 2:
        return f"{names[0]} and {names[1]}"
    return ", ".join(names[:-1]) + f", and {names[-1]}"


@dataclass(frozen=True)
class KkPuzzle:
    """A knights-and-knaves instance with its unique verified solution."""

    n: int
    names: tuple[str, ...]
    statements: tuple[KkStatement, ...]
    solution: tuple[bool, ...]  # True = knight, indexed like names
    seed: int

    def prompt(self) -> str:
        rng = random.Random(f"kk-prompt:{self.seed}:{self.n}")
        parts = [PROMPT_INTRO.format(n=self.n, names=_name_list(self.names))]
        for statement in self.statements:
            form = rng.choice(_ATTRIBUTIONS)
            parts.append(form.format(
                name=self.names[statement.speaker],
                stmt=formula_to_english(statement.body, self.names),
            ))
        parts.append(PROMPT_QUESTION)
        return " ".join(parts)

    def solution_text(self) -> str:
        claims = [
            f"{name} is a {'knight' if is_knight else 'knave'}"
            for name, is_knight in zip(self.names, self.solution)
        ]
        return _name_list(claims) + "."

    def solution_map(self) -> dict[str, str]:
        return {
            name: "knight" if is_knight else "knave"
            for name, is_knight in zip(self.names, self.solution)
        }


def solve_kk(statements: Sequence[KkStatement], n: int) -> list[tuple[bool, ...]]:
    """Every consistent assignment, in ascending bit-pattern order.

    Assignment m maps person i to knight iff bit i of m is set; results are
    ordered by m.  Consistency: speaker is a knight <=> their statement is true.
    """
    if n < 1:
        raise ValueError("need at least one person")
    if n > MAX_SOLVE_N:
        raise ValueError(f"n={n} exceeds exhaustive-solve limit {MAX_SOLVE_N}")
    count = 1 << n
    atoms = ((np.arange(count)[:, None] >> np.arange(n)[None, :]) & 1).astype(bool)
    consistent = np.ones(count, dtype=bool)
    for statement in statements:
        if not 0 <= statement.speaker < n:
            raise IndexError(f"speaker {statement.speaker} out of range for n={n}")
        truth = _eval_formula_table(statement.body, atoms)
        consistent &= atoms[:, statement.speaker] == truth
    return [tuple(bool(b) for b in atoms[m]) for m in np.flatnonzero(consistent)]


def _random_literal(rng: random.Random, n: int) -> Formula:
    body: Formula = ("atom", rng.randrange(n))
    if rng.random() < 0.5:
        return ("not", body)
    return body


def _random_statement(rng: random.Random, speaker: int, n: int) -> KkStatement:
    template = rng.choice(TEMPLATES)
    if template == "atom":
        body: Formula = ("atom", rng.randrange(n))
    elif template == "not":
        body = ("not", ("atom", rng.randrange(n)))
    else:
        body = (template, _random_literal(rng, n), _random_literal(rng, n))
    return KkStatement(speaker=speaker, body=body)


def gen_kk(n: int, seed: int, config: Optional[KkGenConfig] = None) -> KkPuzzle:
    """Generate a puzzle with a unique solution; pure function of (n, seed, config)."""
    config = config or KkGenConfig()
    if not 2 <= n <= 12:
        raise ValueError(f"n must be in [2, 12], got {n}")
    if n > len(config.name_pool):
        raise ValueError("name pool smaller than n")
    rng = random.Random(f"kk:{seed}:{n}")
    names = tuple(rng.sample(config.name_pool, n))
    for _ in range(config.attempt_budget):
        statements = tuple(_random_statement(rng, speaker, n) for speaker in range(n))
        solutions = solve_kk(statements, n)
        if len(solutions) == 1:
            return KkPuzzle(
                n=n,
                names=names,
                statements=statements,
                solution=solutions[0],
                seed=seed,
            )
    raise GenerationError(
        f"no unique-solution puzzle found for n={n}, seed={seed} "
        f"within {config.attempt_budget} attempts"
    )
