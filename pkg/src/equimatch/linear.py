"""Integer linear expressions over named parameters and a bounded solver.

Patterns are written as strings (``"n+1-r-s"``, ``"1<=r<=n-1"``, ``"r+s=n"``)
and solved by interval propagation plus backtracking.  Every system we meet
has at most six unknowns, almost all pinned by a single equation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Mapping, Sequence

_TERM = re.compile(r"([+-]?)(\d*)([a-z]?)")


@dataclass(frozen=True)
class Linear:
    coefs: tuple[tuple[str, int], ...]
    const: int = 0

    @classmethod
    def parse(cls, text: str) -> "Linear":
        text = text.replace(" ", "")
        if not text:
            raise ValueError("empty expression")
        coefs: dict[str, int] = {}
        const = 0
        pos = 0
        while pos < len(text):
            mt = _TERM.match(text, pos)
            if mt is None or mt.end() == pos or (not mt.group(2) and not mt.group(3)):
                raise ValueError(f"cannot parse {text!r} at {pos}")
            sign = -1 if mt.group(1) == "-" else 1
            if mt.group(3):
                k = int(mt.group(2)) if mt.group(2) else 1
                coefs[mt.group(3)] = coefs.get(mt.group(3), 0) + sign * k
            else:
                const += sign * int(mt.group(2))
            pos = mt.end()
        return cls.make(coefs, const)

    @classmethod
    def make(cls, coefs: Mapping[str, int], const: int = 0) -> "Linear":
        return cls(tuple(sorted((v, c) for v, c in coefs.items() if c)), const)

    @property
    def variables(self) -> frozenset[str]:
        return frozenset(v for v, _ in self.coefs)

    @property
    def is_constant(self) -> bool:
        return not self.coefs

    def __call__(self, values: Mapping[str, int]) -> int:
        return self.const + sum(c * values[v] for v, c in self.coefs)

    def __add__(self, other: "Linear | int") -> "Linear":
        if isinstance(other, int):
            return Linear(self.coefs, self.const + other)
        merged = dict(self.coefs)
        for v, c in other.coefs:
            merged[v] = merged.get(v, 0) + c
        return Linear.make(merged, self.const + other.const)

    def __sub__(self, other: "Linear | int") -> "Linear":
        return self + (-other if isinstance(other, int) else other.scaled(-1))

    def scaled(self, k: int) -> "Linear":
        return Linear.make({v: c * k for v, c in self.coefs}, self.const * k)

    def __str__(self) -> str:
        out = ""
        for v, c in self.coefs:
            sign = "-" if c < 0 else ("+" if out else "")
            mag = "" if abs(c) == 1 else str(abs(c))
            out += f"{sign}{mag}{v}"
        if self.const or not out:
            out += f"{self.const:+d}" if out else str(self.const)
        return out


@dataclass(frozen=True)
class Constraint:
    """``expr >= 0`` (``kind == "ge"``) or ``expr == 0`` (``kind == "eq"``)."""

    expr: Linear
    kind: str
    text: str = ""

    def holds(self, values: Mapping[str, int]) -> bool:
        x = self.expr(values)
        return x == 0 if self.kind == "eq" else x >= 0

    def __str__(self) -> str:
        return self.text or f"{self.expr} {'=' if self.kind == 'eq' else '>='} 0"


def parse_constraints(text: str) -> list[Constraint]:
    """Parse one chained comparison such as ``1<=r<=n-1`` or ``r+s=n``."""
    parts = re.split(r"(<=|>=|=)", text.replace(" ", ""))
    out = []
    for i in range(1, len(parts), 2):
        lhs, op, rhs = Linear.parse(parts[i - 1]), parts[i], Linear.parse(parts[i + 1])
        if op == "=":
            out.append(Constraint(lhs - rhs, "eq", text))
        elif op == ">=":
            out.append(Constraint(lhs - rhs, "ge", text))
        else:
            out.append(Constraint(rhs - lhs, "ge", text))
    return out


def _interval(var: str, cons: Sequence[Constraint], values: Mapping[str, int],
              lo: int, hi: int) -> tuple[int, int]:
    """Tighten ``[lo, hi]`` for ``var`` using constraints whose only unknown is ``var``."""
    for con in cons:
        unknown = [v for v, _ in con.expr.coefs if v not in values]
        if unknown != [var]:
            continue
        a = dict(con.expr.coefs)[var]
        rest = con.expr.const + sum(c * values[v] for v, c in con.expr.coefs if v != var)
        # a*x + rest (>= or ==) 0
        if con.kind == "eq":
            if rest % a:
                return 1, 0
            x = -rest // a
            lo, hi = max(lo, x), min(hi, x)
        elif a > 0:
            lo = max(lo, -(rest // a))
        else:
            hi = min(hi, rest // -a)
        if lo > hi:
            break
    return lo, hi


def solve(variables: Sequence[str], cons: Sequence[Constraint], bound: int) -> Iterator[dict[str, int]]:
    """Yield every assignment in ``[0, bound]^variables`` satisfying ``cons``.

    Each step branches on the unassigned variable with the narrowest feasible
    interval, so pinned variables never cost more than one branch.
    """
    values: dict[str, int] = {}
    names = list(variables)

    def step() -> Iterator[dict[str, int]]:
        if len(values) == len(names):
            if all(c.holds(values) for c in cons):
                yield dict(values)
            return
        pick, best = None, None
        for var in names:
            if var in values:
                continue
            lo, hi = _interval(var, cons, values, 0, bound)
            if lo > hi:
                return
            if best is None or hi - lo < best[1] - best[0]:
                pick, best = var, (lo, hi)
        assert pick is not None and best is not None
        for x in range(best[0], best[1] + 1):
            values[pick] = x
            # Fully decided constraints are checked as soon as possible.
            if all(c.holds(values) for c in cons if c.expr.variables <= values.keys()):
                yield from step()
            del values[pick]

    yield from step()
