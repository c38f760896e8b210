"""Exact arithmetic in (1/3)Z.

Every quantity in the calculus lives in the lattice of integer thirds, so a
value is stored as a single machine integer ``thirds`` meaning ``thirds / 3``.
Python integers are unbounded, which keeps addition, subtraction, max and min
closed and exact with no overflow mode to worry about.  No float ever appears.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Third:
    """A value in (1/3)Z, stored scaled by three."""

    thirds: int

    def __post_init__(self):
        if not isinstance(self.thirds, int) or isinstance(self.thirds, bool):
            raise TypeError(f"thirds must be an int, got {type(self.thirds).__name__}")

    def __add__(self, other: "Third") -> "Third":
        return Third(self.thirds + other.thirds)

    def __sub__(self, other: "Third") -> "Third":
        return Third(self.thirds - other.thirds)

    def __neg__(self) -> "Third":
        return Third(-self.thirds)

    def is_integer(self) -> bool:
        return self.thirds % 3 == 0

    def __repr__(self) -> str:
        q, r = divmod(self.thirds, 3)
        if r == 0:
            return f"Third({q})"
        return f"Third({self.thirds}/3)"

    def to_json(self) -> dict:
        return {"thirds": self.thirds}

    @classmethod
    def from_json(cls, obj) -> "Third":
        if not isinstance(obj, dict) or set(obj) != {"thirds"} or not isinstance(obj["thirds"], int):
            raise ValueError(f"expected {{'thirds': n}}, got {obj!r}")
        return cls(obj["thirds"])


ZERO = Third(0)


def is_integer(v: Third) -> bool:
    """True iff ``v`` is a whole integer (thirds divisible by three)."""
    return v.is_integer()


@dataclass(frozen=True, order=True)
class LatticePoint:
    """A point of the Z^2 vertex lattice."""

    x: int
    y: int

    def __sub__(self, other: "LatticePoint") -> "LatticePoint":
        return LatticePoint(self.x - other.x, self.y - other.y)

    @classmethod
    def parse(cls, text: str) -> "LatticePoint":
        parts = text.split(",")
        if len(parts) != 2:
            raise ValueError(f"expected 'x,y', got {text!r}")
        return cls(int(parts[0]), int(parts[1]))

    def key(self) -> str:
        return f"{self.x},{self.y}"
