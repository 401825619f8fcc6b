"""The autonomous equation f^(k) = prod_j (f^(j))^(a_j) and its pole balance.

The canonical form is the exponent vector a = (a_0, ..., a_l) with a_l >= 1:
a_j counts how many factors are the j-th derivative.  A Laurent series
solution with a pole of multiplicity m exists only if the degrees balance,
k = m(d - 1) + h, where d = sum(a_j) and h = sum(j * a_j).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class InvalidEquation(ValueError):
    """Raised for inputs that do not describe a valid equation."""


@dataclass(frozen=True)
class Equation:
    """f^(k) = prod_{j=0}^{l} (f^(j))^(a_j), stored as the exponent vector."""

    k: int
    a: tuple[int, ...]

    def __post_init__(self):
        if self.k < 1:
            raise InvalidEquation(f"order k must be positive, got {self.k}")
        if not self.a:
            raise InvalidEquation("exponent vector is empty")
        if any(aj < 0 for aj in self.a):
            raise InvalidEquation("exponents a_j must be nonnegative")
        if len(self.a) > 1 and self.a[-1] == 0:
            raise InvalidEquation("exponent vector has trailing zeros; use from_exponents")
        if self.l >= self.k:
            raise InvalidEquation(f"needs k > l, got k={self.k}, l={self.l}")
        if self.d < 2:
            raise InvalidEquation(f"needs at least two factors, got d={self.d}")

    @property
    def l(self) -> int:
        """Highest derivative order appearing on the right side."""
        return len(self.a) - 1

    @property
    def d(self) -> int:
        """Total number of factors."""
        return sum(self.a)

    @property
    def h(self) -> int:
        """Sum of the derivative orders of all factors."""
        return sum(j * aj for j, aj in enumerate(self.a))

    def factors(self) -> list[int]:
        """The sorted multiset of derivative orders j_1 <= ... <= j_d."""
        out: list[int] = []
        for j, aj in enumerate(self.a):
            out.extend([j] * aj)
        return out

    def text(self) -> str:
        """Canonical textual form, e.g. "k=3 a=0,2"."""
        return f"k={self.k} a=" + ",".join(str(aj) for aj in self.a)

    @classmethod
    def from_exponents(cls, k: int, a: Sequence[int]) -> "Equation":
        """Build from an exponent vector, trimming trailing zeros."""
        vec = list(a)
        while len(vec) > 1 and vec[-1] == 0:
            vec.pop()
        return cls(k, tuple(vec))


def from_factors(k: int, factors: Sequence[int]) -> Equation:
    """Build from the factor list (j_1, ..., j_d); needs d >= 2, 0 <= j_i < k."""
    js = list(factors)
    if len(js) < 2:
        raise InvalidEquation(f"needs at least two factors, got {len(js)}")
    for j in js:
        if j < 0:
            raise InvalidEquation(f"factor order {j} is negative")
        if j >= k:
            raise InvalidEquation(f"factor order {j} must be below k={k}")
    a = [0] * (max(js) + 1)
    for j in js:
        a[j] += 1
    return Equation(k, tuple(a))


@dataclass(frozen=True)
class PoleProfile:
    """Admissible pole data: multiplicity m with k = m(d-1) + h."""

    m: int
    d: int
    h: int


def pole_multiplicity(eq: Equation) -> PoleProfile | None:
    """The unique positive integer m with k = m(d-1) + h, or None.

    When None, a Laurent series solution with a pole is impossible, so every
    meromorphic solution is pole-free (hence rational for this equation
    class); the classifier records that outcome.
    """
    num = eq.k - eq.h
    den = eq.d - 1
    if num <= 0 or num % den != 0:
        return None
    m = num // den
    # degree balance, the same condition in exponent-vector form
    assert sum((j + m) * aj for j, aj in enumerate(eq.a)) == eq.k + m
    return PoleProfile(m=m, d=eq.d, h=eq.h)


def parse_equation(text: str) -> Equation:
    """Parse the textual forms "k=3 j=1,1" (factors) or "k=3 a=0,2" (vector)."""
    k: int | None = None
    payload: tuple[str, list[int]] | None = None
    for token in text.split():
        if "=" not in token:
            raise InvalidEquation(f"bad token {token!r}; expected key=value")
        key, _, value = token.partition("=")
        try:
            if key == "k":
                k = int(value)
            elif key in ("j", "a"):
                if payload is not None:
                    raise InvalidEquation("give exactly one of j=... or a=...")
                payload = (key, [int(part) for part in value.split(",") if part != ""])
            else:
                raise InvalidEquation(f"unknown key {key!r}")
        except ValueError as exc:
            if isinstance(exc, InvalidEquation):
                raise
            raise InvalidEquation(f"bad integer in {token!r}") from exc
    if k is None or payload is None:
        raise InvalidEquation("equation needs k=... and one of j=.../a=...")
    kind, values = payload
    if kind == "j":
        return from_factors(k, values)
    return Equation.from_exponents(k, values)
