"""
rings/laurent.py

Laurent polynomials Z[x, x^-1] on top of SymPy. Elements are kept fully
expanded so structural equality is value equality.

Text form: "c*x^e" terms joined by " + ", highest exponent first, every
coefficient and exponent written out ("1*x^2 + -1*x^-2"); zero is "0".
parse() also takes ordinary expressions ("x^2 - x**-2", "3").
"""

from typing import Dict

import sympy

from .base import Ring

VAR = sympy.Symbol("x")


class LaurentRing(Ring):
    name = "LaurentZ"

    def __init__(self, symbol: sympy.Symbol = VAR):
        self.symbol = symbol

    @property
    def zero(self):
        return sympy.Integer(0)

    @property
    def one(self):
        return sympy.Integer(1)

    def coerce(self, value):
        return sympy.expand(sympy.sympify(value))

    def add(self, a, b):
        return sympy.expand(a + b)

    def mul(self, a, b):
        return sympy.expand(a * b)

    def neg(self, a):
        return sympy.expand(-a)

    def is_zero(self, a) -> bool:
        return sympy.expand(a) == 0

    def is_unit(self, a) -> bool:
        terms = self.terms(a)
        return len(terms) == 1 and next(iter(terms.values())) in (1, -1)

    def _invert(self, a):
        return sympy.expand(1 / a)

    def terms(self, a) -> Dict[int, int]:
        """exponent -> integer coefficient. Raises ValueError off Z[x, x^-1]."""
        out: Dict[int, int] = {}
        for monomial, coeff in sympy.expand(a).as_coefficients_dict().items():
            if coeff == 0:
                continue
            if monomial == 1:
                exp = sympy.Integer(0)
            elif monomial == self.symbol:
                exp = sympy.Integer(1)
            elif monomial.is_Pow and monomial.base == self.symbol:
                exp = monomial.exp
            else:
                raise ValueError(f"'{a}' is not a Laurent polynomial in {self.symbol}")
            if not (coeff.is_Integer and exp.is_Integer):
                raise ValueError(f"'{a}' needs integer coefficients and exponents")
            out[int(exp)] = out.get(int(exp), 0) + int(coeff)
        return {e: c for e, c in out.items() if c}

    def parse(self, text: str):
        source = text.strip().replace("^", "**")
        try:
            expr = sympy.sympify(source, locals={self.symbol.name: self.symbol})
        except (sympy.SympifyError, SyntaxError, TypeError):
            raise ValueError(f"'{text}' is not a Laurent polynomial in {self.symbol}") from None
        if expr.free_symbols - {self.symbol}:
            raise ValueError(f"'{text}' uses symbols other than {self.symbol}")
        expr = sympy.expand(expr)
        self.terms(expr)
        return expr

    def format(self, a) -> str:
        terms = self.terms(a)
        if not terms:
            return "0"
        return " + ".join(f"{terms[e]}*{self.symbol}^{e}" for e in sorted(terms, reverse=True))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, LaurentRing) and other.symbol == self.symbol

    def __hash__(self) -> int:
        return hash((self.name, self.symbol))
