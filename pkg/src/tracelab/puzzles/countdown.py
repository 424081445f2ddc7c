"""Countdown arithmetic puzzles: reach a target using every number exactly once.

Expressions combine the given numbers with +, -, *, / under exact rational
arithmetic; only the final value must equal the integer target.  The solver is
a depth-first pair-reduction search with a canonical visiting order so results
are reproducible across platforms.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from tracelab.errors import GenerationError

OPS = ("+", "-", "*", "/")
_PRECEDENCE = {"+": 1, "-": 1, "*": 2, "/": 2}

PROMPT_TEMPLATE = (
    "Using the numbers {{{numbers}}}, create an equation that equals {target}. "
    "You can use basic arithmetic operations (+, -, *, /) and each number can "
    "only be used once."
)


@dataclass(frozen=True)
class Expression:
    """Binary expression tree over integer leaves; ``op`` is None for a leaf."""

    op: Optional[str] = None
    value: Optional[int] = None
    left: Optional["Expression"] = None
    right: Optional["Expression"] = None

    @classmethod
    def leaf(cls, value: int) -> "Expression":
        return cls(value=int(value))

    @classmethod
    def combine(cls, op: str, left: "Expression", right: "Expression") -> "Expression":
        if op not in OPS:
            raise ValueError(f"unknown operation: {op!r}")
        return cls(op=op, left=left, right=right)

    def is_leaf(self) -> bool:
        return self.op is None

    def evaluate(self) -> Fraction:
        """Exact rational value; raises ZeroDivisionError on any zero divisor."""
        if self.is_leaf():
            return Fraction(self.value)
        a = self.left.evaluate()
        b = self.right.evaluate()
        if self.op == "+":
            return a + b
        if self.op == "-":
            return a - b
        if self.op == "*":
            return a * b
        return a / b

    def leaves(self) -> list[int]:
        if self.is_leaf():
            return [self.value]
        return self.left.leaves() + self.right.leaves()

    def to_json(self) -> list:
        if self.is_leaf():
            return ["num", self.value]
        return [self.op, self.left.to_json(), self.right.to_json()]

    @classmethod
    def from_json(cls, data: Sequence) -> "Expression":
        if data[0] == "num":
            return cls.leaf(int(data[1]))
        return cls.combine(data[0], cls.from_json(data[1]), cls.from_json(data[2]))

    def __str__(self) -> str:
        if self.is_leaf():
            return str(self.value)
        prec = _PRECEDENCE[self.op]
        left = str(self.left)
        right = str(self.right)
        if not self.left.is_leaf() and _PRECEDENCE[self.left.op] < prec:
            left = f"({left})"
        # Right child needs parens when lower precedence, or equal precedence
        # under the non-associative - and /.
        if not self.right.is_leaf():
            rp = _PRECEDENCE[self.right.op]
            if rp < prec or (rp == prec and self.op in ("-", "/")):
                right = f"({right})"
        return f"{left}{self.op}{right}"


@dataclass(frozen=True)
class CountdownPuzzle:
    """A countdown instance whose witness reaches the target using all numbers."""

    numbers: tuple[int, ...]  # sorted ascending
    target: int
    witness: Expression
    seed: int

    def prompt(self) -> str:
        return PROMPT_TEMPLATE.format(
            numbers=", ".join(str(v) for v in self.numbers), target=self.target
        )

    @property
    def n(self) -> int:
        return len(self.numbers)


def solve_countdown(numbers: Sequence[int], target: int) -> Optional[Expression]:
    """First full-use expression reaching ``target``, or None.

    Search order is canonical: working entries start sorted ascending, pairs
    are visited in index order (i < j), and each pair tries
    a+b, a-b, b-a, a*b, a/b, b/a before moving on.  Failed value multisets are
    cached; that prunes revisits without changing which witness is found first.
    """
    if not 1 <= len(numbers) <= 8:
        raise ValueError(f"need between 1 and 8 numbers, got {len(numbers)}")
    if any(v <= 0 for v in numbers):
        raise ValueError("numbers must be positive integers")
    goal = Fraction(target)
    entries = [(Fraction(v), Expression.leaf(v)) for v in sorted(numbers)]
    dead: set[tuple[Fraction, ...]] = set()

    def search(work: list[tuple[Fraction, Expression]]) -> Optional[Expression]:
        if len(work) == 1:
            value, expr = work[0]
            return expr if value == goal else None
        key = tuple(sorted(value for value, _ in work))
        if key in dead:
            return None
        for i in range(len(work)):
            for j in range(i + 1, len(work)):
                (va, ea), (vb, eb) = work[i], work[j]
                rest = [work[k] for k in range(len(work)) if k != i and k != j]
                candidates = [
                    (va + vb, "+", ea, eb),
                    (va - vb, "-", ea, eb),
                    (vb - va, "-", eb, ea),
                    (va * vb, "*", ea, eb),
                ]
                if vb != 0:
                    candidates.append((va / vb, "/", ea, eb))
                if va != 0:
                    candidates.append((vb / va, "/", eb, ea))
                for value, op, left, right in candidates:
                    found = search(rest + [(value, Expression.combine(op, left, right))])
                    if found is not None:
                        return found
        dead.add(key)
        return None

    return search(entries)


def _random_tree(rng: random.Random, leaves: list[Expression]) -> Expression:
    """Combine all leaves into one random binary tree with random operations."""
    nodes = list(leaves)
    while len(nodes) > 1:
        i = rng.randrange(len(nodes))
        a = nodes.pop(i)
        j = rng.randrange(len(nodes))
        b = nodes.pop(j)
        nodes.append(Expression.combine(rng.choice(OPS), a, b))
    return nodes[0]


def gen_countdown(
    n: int,
    seed: int,
    value_range: tuple[int, int] = (1, 99),
    target_range: tuple[int, int] = (10, 999),
    attempt_budget: int = 10_000,
) -> CountdownPuzzle:
    """Draw numbers, build a random full-use expression, keep it when its value
    is an integer inside ``target_range``; pure function of the arguments."""
    if not 2 <= n <= 8:
        raise ValueError(f"n must be in [2, 8], got {n}")
    rng = random.Random(f"countdown:{seed}:{n}")
    for _ in range(attempt_budget):
        numbers = [rng.randint(*value_range) for _ in range(n)]
        witness = _random_tree(rng, [Expression.leaf(v) for v in numbers])
        try:
            value = witness.evaluate()
        except ZeroDivisionError:
            continue
        if value.denominator != 1:
            continue
        target = int(value)
        if not target_range[0] <= target <= target_range[1]:
            continue
        return CountdownPuzzle(
            numbers=tuple(sorted(numbers)), target=target, witness=witness, seed=seed
        )
    raise GenerationError(
        f"no in-range integer target found for n={n}, seed={seed} "
        f"within {attempt_budget} attempts"
    )
