"""The finite subgroups of SL(2) over cyclotomic fields.

Generators follow the classical presentation of the binary polyhedral
groups: the cyclic group C_n and binary dihedral group D_n use a primitive
2n-th root of unity (pinned to zeta_2n for determinism), the binary
icosahedral group I uses a primitive 5th root.  All matrix entries are
exact; every determinant is exactly 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cyclotomic import CyclotomicNumber, as_cyclotomic, imag_unit, sqrt2, sqrt5, zeta
from .errors import ClosureBoundExceededError

#: Closure enumeration failsafe; the largest group here has 120 elements,
#: so exceeding this signals a transcription bug in a generator.
CLOSURE_BOUND = 1000


@dataclass(frozen=True)
class SL2Matrix:
    """An exact 2x2 matrix of determinant 1."""

    a: CyclotomicNumber
    b: CyclotomicNumber
    c: CyclotomicNumber
    d: CyclotomicNumber

    def __post_init__(self):
        for field in "abcd":
            object.__setattr__(self, field, as_cyclotomic(getattr(self, field)))
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError(f"determinant of {self} is not 1")

    def det(self) -> CyclotomicNumber:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "SL2Matrix") -> "SL2Matrix":
        return SL2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2Matrix":
        return SL2Matrix(self.d, -self.b, -self.c, self.a)

    @staticmethod
    def identity() -> "SL2Matrix":
        return SL2Matrix(1, 0, 0, 1)

    @staticmethod
    def diagonal(u, v) -> "SL2Matrix":
        return SL2Matrix(u, 0, 0, v)

    def __str__(self):
        return f"[[{self.a}, {self.b}], [{self.c}, {self.d}]]"


@dataclass(frozen=True)
class GroupSpec:
    """One of the finite subgroup families: C_n, D_n, T, O, I."""

    kind: str
    n: int = 0

    def __post_init__(self):
        if self.kind not in ("C", "D", "T", "O", "I"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind in ("C", "D") and self.n < 1:
            raise ValueError(f"{self.kind}_n needs n >= 1")
        if self.kind in ("T", "O", "I") and self.n:
            raise ValueError(f"{self.kind} takes no parameter")

    @property
    def order(self) -> int:
        """Group order: |C_n| = 2n, |D_n| = 4n, |T| = 24, |O| = 48, |I| = 120."""
        return {"C": 2 * self.n, "D": 4 * self.n, "T": 24, "O": 48, "I": 120}[self.kind]

    @property
    def label(self) -> str:
        return f"{self.kind}{self.n}" if self.kind in ("C", "D") else self.kind

    @staticmethod
    def parse(text: str) -> "GroupSpec":
        text = text.strip()
        if text in ("T", "O", "I"):
            return GroupSpec(text)
        if text[:1] in ("C", "D") and text[1:].isdigit():
            return GroupSpec(text[0], int(text[1:]))
        raise ValueError(f"not a group label: {text!r}")

    def __str__(self):
        return self.label


def _tetrahedral_generators():
    i = imag_unit()
    half = as_cyclotomic(1) / 2
    return (
        SL2Matrix.diagonal(i, -i),
        SL2Matrix(0, i, i, 0),
        SL2Matrix(half * (1 + i), half * (-1 + i), half * (1 + i), half * (1 - i)),
    )


@lru_cache(maxsize=None)
def group_generators(spec: GroupSpec):
    """The defining generator matrices, determinants verified exactly."""
    if spec.kind == "C":
        eps = zeta(2 * spec.n)
        return (SL2Matrix.diagonal(eps, eps ** -1),)
    if spec.kind == "D":
        eps = zeta(2 * spec.n)
        return (SL2Matrix.diagonal(eps, eps ** -1), SL2Matrix(0, imag_unit(), imag_unit(), 0))
    if spec.kind == "T":
        return _tetrahedral_generators()
    if spec.kind == "O":
        i = imag_unit()
        r2 = sqrt2().inverse()
        return _tetrahedral_generators() + (
            SL2Matrix.diagonal(r2 * (1 + i), r2 * (1 - i)),)
    # icosahedral
    eps = zeta(5)
    r5 = sqrt5().inverse()
    return (
        SL2Matrix.diagonal(eps ** 3, eps ** 2),
        SL2Matrix(
            r5 * (eps - eps ** 4), r5 * (eps ** 3 - eps ** 2),
            r5 * (eps ** 3 - eps ** 2), r5 * (eps ** 4 - eps),
        ),
    )


@lru_cache(maxsize=None)
def group_elements(spec: GroupSpec):
    """All elements, as the closure of the generators under multiplication.

    Breadth-first products keep the enumeration order deterministic.
    """
    gens = group_generators(spec)
    identity = SL2Matrix.identity()
    seen = {identity}
    ordered = [identity]
    frontier = [identity]
    while frontier:
        next_frontier = []
        for m in frontier:
            for g in gens:
                p = m * g
                if p not in seen:
                    seen.add(p)
                    ordered.append(p)
                    next_frontier.append(p)
                    if len(ordered) > CLOSURE_BOUND:
                        raise ClosureBoundExceededError(
                            f"closure of {spec.label} exceeded {CLOSURE_BOUND} elements")
        frontier = next_frontier
    return tuple(ordered)


@lru_cache(maxsize=None)
def group_contains(big: GroupSpec, small: GroupSpec) -> bool:
    """Literal containment of the standard matrix groups."""
    if big == small:
        return True
    if small.order > big.order or big.order % small.order:
        return False
    elements = set(group_elements(big))
    return all(g in elements for g in group_generators(small))
