from dataclasses import dataclass
from typing import Dict, Iterable, Sequence, Tuple, Union

import sympy

from qf.core.errors import ParseError

T = sympy.Symbol("T")


def _normalize(d: Dict[int, int]) -> Tuple[Tuple[int, int], ...]:
    return tuple(sorted((e, c) for e, c in d.items() if c != 0))


@dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in T, stored as sorted (exponent, coefficient) pairs."""

    terms: Tuple[Tuple[int, int], ...] = ()

    # constructors

    @classmethod
    def from_dict(cls, d: Dict[int, int]) -> "LaurentPoly":
        return cls(_normalize(d))

    @classmethod
    def monomial(cls, c: int, k: int = 0) -> "LaurentPoly":
        return cls.from_dict({k: c})

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls.monomial(c, 0)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], offset: int = 0) -> "LaurentPoly":
        return cls.from_dict({offset + i: int(c) for i, c in enumerate(coeffs)})

    @classmethod
    def from_sympy(cls, expr) -> "LaurentPoly":
        d: Dict[int, int] = {}
        for term in sympy.Add.make_args(sympy.expand(expr)):
            c, e = term.as_coeff_exponent(T)
            if c.has(T) or not c.is_Integer or not e.is_Integer:
                raise ParseError(f"not an integer Laurent polynomial in T: {expr}")
            d[int(e)] = d.get(int(e), 0) + int(c)
        return cls.from_dict(d)

    @classmethod
    def parse(cls, text: Union[str, Sequence[int], "LaurentPoly"]) -> "LaurentPoly":
        if isinstance(text, LaurentPoly):
            return text
        if not isinstance(text, str):
            return cls.from_coeffs(list(text))
        src = text.strip().replace("^", "**")
        if not src:
            raise ParseError("empty polynomial")
        if all(part.strip().lstrip("-").isdigit() for part in src.split(",")) and "," in src:
            return cls.from_coeffs([int(p) for p in src.split(",")])
        try:
            expr = sympy.sympify(src, locals={"T": T, "t": T})
        except (sympy.SympifyError, SyntaxError, TypeError) as e:
            raise ParseError(f"cannot parse polynomial {text!r}: {e}")
        return cls.from_sympy(expr)

    # views

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    def coeff(self, k: int) -> int:
        return self.as_dict().get(k, 0)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[0][0]

    @property
    def max_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    def coefficient_list(self) -> Tuple[int, ...]:
        """Coefficients from T^min_degree up to T^max_degree."""
        if not self.terms:
            return ()
        d = self.as_dict()
        return tuple(d.get(k, 0) for k in range(self.min_degree, self.max_degree + 1))

    def to_sympy(self):
        return sympy.Add(*[c * T**e for e, c in self.terms])

    # arithmetic

    def __add__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        d = self.as_dict()
        for e, c in other.terms:
            d[e] = d.get(e, 0) + c
        return LaurentPoly.from_dict(d)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other) -> "LaurentPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "LaurentPoly":
        return _coerce(other) - self

    def __mul__(self, other) -> "LaurentPoly":
        other = _coerce(other)
        d: Dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                d[e1 + e2] = d.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(d)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            return self.unit_inverse() ** (-k)
        out = LaurentPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e + k, c) for e, c in self.terms))

    def is_unit(self) -> bool:
        return len(self.terms) == 1 and abs(self.terms[0][1]) == 1

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ValueError(f"{self} is not a unit of Z[T,T^-1]")
        e, c = self.terms[0]
        return LaurentPoly.monomial(c, -e)

    def reduce_mod(self, q: int) -> "LaurentPoly":
        return LaurentPoly.from_dict({e: c % q for e, c in self.terms})

    def normalized(self) -> "LaurentPoly":
        """Shift so the lowest exponent is 0."""
        return self.shift(-self.min_degree) if self.terms else self

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                body = str(abs(c))
            else:
                mono = "T" if e == 1 else f"T^{e}"
                body = mono if abs(c) == 1 else f"{abs(c)}{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


def _coerce(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly.const(x)
    raise TypeError(f"cannot combine LaurentPoly with {type(x).__name__}")


TT = LaurentPoly.monomial(1, 1)
ONE = LaurentPoly.const(1)


def t_power(k: int) -> LaurentPoly:
    return LaurentPoly.monomial(1, k)


def poly_sum(items: Iterable[LaurentPoly]) -> LaurentPoly:
    out = LaurentPoly()
    for p in items:
        out = out + p
    return out
