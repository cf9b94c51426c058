"""
Exact integer polynomials in T and in (T, T′), backed by sympy.

Coefficients serialize as decimal strings so that arbitrary-precision values
survive any JSON reader.
"""

from typing import Any, List, Tuple

import sympy
from pydantic import BaseModel, ConfigDict, Field, field_serializer, field_validator

# T′ is written U inside sympy expressions
T, U = sympy.symbols("T U")


class Polynomial(BaseModel):
    """Integer polynomial in T, ascending coefficients, no trailing zeros"""

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[int, ...] = Field(default_factory=tuple)

    @field_validator("coeffs", mode="before")
    @classmethod
    def _trim(cls, value: Any) -> Tuple[int, ...]:
        coeffs = [int(c) for c in value]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return tuple(coeffs)

    @field_serializer("coeffs")
    def _as_strings(self, coeffs: Tuple[int, ...]) -> List[str]:
        return [str(c) for c in coeffs]

    @classmethod
    def from_sympy(cls, expr: Any) -> "Polynomial":
        poly = sympy.Poly(expr, T, domain=sympy.ZZ)
        return cls(coeffs=[int(c) for c in reversed(poly.all_coeffs())])

    def to_sympy(self) -> sympy.Poly:
        return sympy.Poly.from_list(list(reversed(self.coeffs)) or [0], T, domain=sympy.ZZ)

    def as_expr(self, symbol: sympy.Symbol = T) -> sympy.Expr:
        return self.to_sympy().as_expr().subs(T, symbol)

    @property
    def degree(self) -> int:
        """Degree, -1 for the zero polynomial"""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def evaluate(self, x: int) -> int:
        return int(self.to_sympy().eval(x))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial.from_sympy((self.to_sympy() + other.to_sympy()).as_expr())

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        return Polynomial.from_sympy((self.to_sympy() * other.to_sympy()).as_expr())

    def substitute_product(self) -> "BivariatePolynomial":
        """P(T·T′), the image of P under the coproduct of the polynomial ring"""
        return BivariatePolynomial.from_sympy(self.as_expr().subs(T, T * U))


class BivariatePolynomial(BaseModel):
    """Integer polynomial in T and T′; coeffs[i][j] multiplies T^i T′^j"""

    model_config = ConfigDict(frozen=True)

    coeffs: Tuple[Tuple[int, ...], ...] = Field(default_factory=tuple)

    @field_validator("coeffs", mode="before")
    @classmethod
    def _trim(cls, value: Any) -> Tuple[Tuple[int, ...], ...]:
        rows = [[int(c) for c in row] for row in value]
        while rows and not any(rows[-1]):
            rows.pop()
        width = 0
        for row in rows:
            for j, c in enumerate(row):
                if c:
                    width = max(width, j + 1)
        return tuple(tuple((row + [0] * width)[:width]) for row in rows)

    @field_serializer("coeffs")
    def _as_strings(self, coeffs: Tuple[Tuple[int, ...], ...]) -> List[List[str]]:
        return [[str(c) for c in row] for row in coeffs]

    @classmethod
    def from_sympy(cls, expr: Any) -> "BivariatePolynomial":
        terms = sympy.Poly(expr, T, U, domain=sympy.ZZ).as_dict()
        if not terms:
            return cls()
        rows = max(i for i, _ in terms) + 1
        cols = max(j for _, j in terms) + 1
        grid = [[0] * cols for _ in range(rows)]
        for (i, j), c in terms.items():
            grid[i][j] = int(c)
        return cls(coeffs=grid)

    def as_expr(self) -> sympy.Expr:
        return sum(
            (c * T**i * U**j for i, row in enumerate(self.coeffs) for j, c in enumerate(row) if c),
            sympy.Integer(0),
        )

    def evaluate(self, t: int, t_prime: int) -> int:
        return sum(c * t**i * t_prime**j for i, row in enumerate(self.coeffs) for j, c in enumerate(row))

    @classmethod
    def tensor(cls, left: Polynomial, right: Polynomial) -> "BivariatePolynomial":
        """left(T) · right(T′)"""
        return cls.from_sympy(left.as_expr(T) * right.as_expr(U))

    def __add__(self, other: "BivariatePolynomial") -> "BivariatePolynomial":
        return BivariatePolynomial.from_sympy(self.as_expr() + other.as_expr())
