"""Exact integer Laurent polynomials in one variable ``z``."""

from __future__ import annotations

from typing import Iterable, Mapping


class LaurentPoly:
    """Finite sum ``sum_e c_e z^e`` with integer exponents and coefficients.

    Zero coefficients are never stored, so two equal polynomials have equal
    ``terms`` dictionaries.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, int] | None = None):
        clean: dict[int, int] = {}
        for e, c in (terms or {}).items():
            if int(e) != e or int(c) != c:
                raise TypeError("Laurent exponents and coefficients must be integers")
            if c:
                clean[int(e)] = clean.get(int(e), 0) + int(c)
        self._terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls({exponent: coeff})

    @classmethod
    def from_exponents(cls, exponents: Iterable[int]) -> "LaurentPoly":
        """``sum_i z^{e_i}`` with repeated exponents accumulated."""
        acc: dict[int, int] = {}
        for e in exponents:
            acc[int(e)] = acc.get(int(e), 0) + 1
        return cls(acc)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_exp(self) -> int:
        return max(self._terms) if self._terms else 0

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        return isinstance(other, LaurentPoly) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            other = LaurentPoly({0: other})
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        return self + (-other if isinstance(other, LaurentPoly) else -int(other))

    def __mul__(self, other: "LaurentPoly | int") -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        out: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "LaurentPoly":
        """Multiply by ``z^m``."""
        return LaurentPoly({e + m: c for e, c in self._terms.items()})

    def value_at_one(self) -> int:
        return sum(self._terms.values())

    def derivative_at_one(self) -> int:
        return sum(e * c for e, c in self._terms.items())

    def div_z_minus_one(self) -> tuple["LaurentPoly", int]:
        """Synthetic division by ``(z - 1)``.

        Returns the Laurent quotient and the integer remainder.  The
        quotient keeps the lowest exponent of ``self``.
        """
        if not self._terms:
            return LaurentPoly(), 0
        lo, hi = self.min_exp(), self.max_exp()
        coeffs = [self.coeff(e) for e in range(hi, lo - 1, -1)]
        quot: list[int] = []
        carry = 0
        for c in coeffs[:-1]:
            carry = c + carry
            quot.append(carry)
        remainder = coeffs[-1] + carry
        # quot[0] multiplies z^{hi-1}
        q = {hi - 1 - i: c for i, c in enumerate(quot)}
        return LaurentPoly(q), remainder

    def exact_div_z_minus_one_power(self, m: int) -> "LaurentPoly":
        """Divide exactly by ``(z - 1)^m``; raise ``ArithmeticError`` otherwise."""
        q = self
        for i in range(m):
            q, rem = q.div_z_minus_one()
            if rem != 0:
                raise ArithmeticError(
                    f"(z-1)^{i + 1} does not divide the polynomial (remainder {rem})"
                )
        return q

    def __repr__(self) -> str:
        if not self._terms:
            return "LaurentPoly(0)"
        parts = [f"{c}*z^{e}" for e, c in sorted(self._terms.items(), reverse=True)]
        return "LaurentPoly(" + " + ".join(parts) + ")"
