from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class OcdPolynomial:
    """Counts of outer-connected dominating sets by cardinality.

    ``coeffs[i]`` is the number of ocd-sets of size ``i`` in a graph on ``n``
    vertices, so ``len(coeffs) == n + 1``.
    """

    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} coefficients, got {len(self.coeffs)}")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("coefficients must be nonnegative")

    @classmethod
    def from_counts(cls, counts: Sequence[int]) -> OcdPolynomial:
        return cls(len(counts) - 1, tuple(int(c) for c in counts))

    def coefficient(self, i: int) -> int:
        if not 0 <= i <= self.n:
            raise IndexError(f"power {i} outside [0, {self.n}]")
        return self.coeffs[i]

    def min_degree(self) -> int:
        """Least power with a nonzero coefficient (the outer-connected domination number)."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise ValueError("zero polynomial has no minimum degree")

    def evaluate(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def total(self) -> int:
        return sum(self.coeffs)

    def __add__(self, other: OcdPolynomial) -> OcdPolynomial:
        if other.n != self.n:
            raise ValueError("cannot merge counts for graphs of different order")
        return OcdPolynomial(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def to_text(self) -> str:
        terms = []
        for i in range(self.n, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            head = "" if c == 1 and i > 0 else str(c)
            if i == 0:
                terms.append(head)
            elif i == 1:
                terms.append(f"{head}x")
            else:
                terms.append(f"{head}x^{i}")
        return " + ".join(terms) if terms else "0"

    def to_dict(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> OcdPolynomial:
        n = data["n"]
        if not isinstance(n, int) or isinstance(n, bool):
            raise ValueError(f"'n' must be an integer, got {n!r}")
        coeffs = data["coeffs"]
        if not all(isinstance(c, str) and c.isdigit() for c in coeffs):
            raise ValueError("'coeffs' must be decimal strings")
        return cls(n, tuple(int(c) for c in coeffs))

    @classmethod
    def from_json(cls, text: str) -> OcdPolynomial:
        return cls.from_dict(json.loads(text))

    def __str__(self):
        return self.to_text()


JSON_SCHEMA = {
    "type": "object",
    "required": ["n", "coeffs"],
    "properties": {
        "n": {"type": "integer", "minimum": 0},
        "coeffs": {"type": "array", "items": {"type": "string", "pattern": "^[0-9]+$"}},
    },
}
